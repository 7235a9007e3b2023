//! Finite carriers and the full transformation monoid on them.
//!
//! Elements are addressed by index everywhere inside the crate; labels only
//! matter at the file and report boundary. An [`Endofunction`] is a plain
//! image table, so composition and application are table lookups.
//!
//! Composition follows the usual left-handed convention: `f.compose(&g)` is
//! `f ∘ g`, i.e. `g` is applied first. The affine modules read sequences of
//! translations left to right (`x + u + v` applies `u` first), which is
//! [`Endofunction::seq`]: `f.seq(&g) == g.compose(&f)`.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

/// Default bound on carrier sizes. Downstream checks quantify exhaustively
/// over tuples of elements, so carriers stay small.
pub const DEFAULT_CARRIER_CAP: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CarrierError {
    #[error("carrier `{0}` has no elements")]
    Empty(String),
    #[error("carrier `{carrier}` has {size} elements, the cap is {cap}")]
    TooLarge { carrier: String, size: usize, cap: usize },
    #[error("duplicate element label `{label}` in carrier `{carrier}`")]
    DuplicateLabel { carrier: String, label: String },
    #[error("invalid element label `{0}`")]
    InvalidLabel(String),
    #[error("unknown element `{label}` in carrier `{carrier}`")]
    UnknownLabel { carrier: String, label: String },
    #[error("image index {image} is out of range for a carrier of size {size}")]
    IndexOutOfRange { image: usize, size: usize },
    #[error("carrier mismatch: endofunctions of degree {left} and {right}")]
    CarrierMismatch { left: usize, right: usize },
    #[error("endofunction is not a bijection: element {point} has {preimages} preimages")]
    NotBijective { point: usize, preimages: usize },
}

/// A finite, ordered set of labelled elements.
#[derive(Clone, Debug)]
pub struct FiniteSet {
    name: String,
    labels: Vec<String>,
    index: HashMap<String, usize>,
}

impl PartialEq for FiniteSet {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name && self.labels == other.labels
    }
}

impl Eq for FiniteSet {}

impl FiniteSet {
    pub fn new<S, I, L>(name: S, labels: I) -> Result<Self, CarrierError>
    where
        S: Into<String>,
        I: IntoIterator<Item = L>,
        L: Into<String>,
    {
        Self::with_cap(name, labels, DEFAULT_CARRIER_CAP)
    }

    pub fn with_cap<S, I, L>(name: S, labels: I, cap: usize) -> Result<Self, CarrierError>
    where
        S: Into<String>,
        I: IntoIterator<Item = L>,
        L: Into<String>,
    {
        let name = name.into();
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(CarrierError::Empty(name));
        }
        if labels.len() > cap {
            return Err(CarrierError::TooLarge {
                carrier: name,
                size: labels.len(),
                cap,
            });
        }
        let mut index = HashMap::with_capacity(labels.len());
        for (i, label) in labels.iter().enumerate() {
            if label.is_empty() || label == ":" || label.chars().any(char::is_whitespace) {
                return Err(CarrierError::InvalidLabel(label.clone()));
            }
            if index.insert(label.clone(), i).is_some() {
                return Err(CarrierError::DuplicateLabel {
                    carrier: name,
                    label: label.clone(),
                });
            }
        }
        Ok(FiniteSet { name, labels, index })
    }

    /// The set `{0, 1, …, n-1}` with decimal labels.
    pub fn indexed(name: impl Into<String>, n: usize) -> Result<Self, CarrierError> {
        Self::new(name, (0..n).map(|i| i.to_string()))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn lookup(&self, label: &str) -> Result<usize, CarrierError> {
        self.index_of(label).ok_or_else(|| CarrierError::UnknownLabel {
            carrier: self.name.clone(),
            label: label.to_string(),
        })
    }

    /// Same elements under a different name.
    pub fn renamed(&self, name: impl Into<String>) -> Self {
        FiniteSet {
            name: name.into(),
            labels: self.labels.clone(),
            index: self.index.clone(),
        }
    }

    /// Renders a tuple of element indices as `(a, b, c)`.
    pub fn render_tuple(&self, items: &[usize]) -> String {
        let parts: Vec<&str> = items.iter().map(|&i| self.label(i)).collect();
        format!("({})", parts.join(", "))
    }
}

/// A total self-map of a finite carrier, stored as its image table.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Endofunction {
    images: Vec<usize>,
}

impl fmt::Debug for Endofunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Endofunction{:?}", self.images)
    }
}

impl Endofunction {
    pub fn new(images: Vec<usize>) -> Result<Self, CarrierError> {
        let size = images.len();
        if let Some(&image) = images.iter().find(|&&i| i >= size) {
            return Err(CarrierError::IndexOutOfRange { image, size });
        }
        Ok(Endofunction { images })
    }

    pub fn from_fn(n: usize, f: impl Fn(usize) -> usize) -> Result<Self, CarrierError> {
        Self::new((0..n).map(f).collect())
    }

    pub fn identity(n: usize) -> Self {
        Endofunction {
            images: (0..n).collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    /// `self ∘ other`: apply `other`, then `self`.
    pub fn compose(&self, other: &Endofunction) -> Result<Endofunction, CarrierError> {
        self.check_degree(other)?;
        Ok(self.compose_unchecked(other))
    }

    /// Apply `self`, then `other` (right-handed sequencing).
    pub fn seq(&self, other: &Endofunction) -> Result<Endofunction, CarrierError> {
        other.compose(self)
    }

    pub(crate) fn compose_unchecked(&self, other: &Endofunction) -> Endofunction {
        Endofunction {
            images: other.images.iter().map(|&y| self.images[y]).collect(),
        }
    }

    pub(crate) fn seq_unchecked(&self, other: &Endofunction) -> Endofunction {
        other.compose_unchecked(self)
    }

    fn check_degree(&self, other: &Endofunction) -> Result<(), CarrierError> {
        if self.degree() != other.degree() {
            return Err(CarrierError::CarrierMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(())
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &y)| i == y)
    }

    /// True iff the image table is a permutation of the carrier indices.
    pub fn is_bijection(&self) -> bool {
        let mut seen = vec![false; self.degree()];
        for &y in &self.images {
            if seen[y] {
                return false;
            }
            seen[y] = true;
        }
        true
    }

    /// Tries to build `φ` with `f(φ(x)) = φ(f(x)) = x` for all `x` by picking
    /// a preimage for every element, then checking both equations.
    pub fn two_sided_witness(&self) -> Option<Endofunction> {
        let n = self.degree();
        let mut candidate = vec![usize::MAX; n];
        for (x, &y) in self.images.iter().enumerate() {
            if candidate[y] == usize::MAX {
                candidate[y] = x;
            }
        }
        if candidate.contains(&usize::MAX) {
            return None;
        }
        let phi = Endofunction { images: candidate };
        let ok = (0..n).all(|x| self.apply(phi.apply(x)) == x && phi.apply(self.apply(x)) == x);
        ok.then_some(phi)
    }

    /// Number of solutions `x` of `f(x) = y`, for every `y`.
    pub fn preimage_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.degree()];
        for &y in &self.images {
            counts[y] += 1;
        }
        counts
    }

    /// True iff `f(x) = y` has exactly one solution for every `y`.
    pub fn uniquely_solvable(&self) -> bool {
        self.preimage_counts().iter().all(|&c| c == 1)
    }

    pub fn inverse(&self) -> Result<Endofunction, CarrierError> {
        let n = self.degree();
        let mut inv = vec![usize::MAX; n];
        for (x, &y) in self.images.iter().enumerate() {
            if inv[y] != usize::MAX {
                return Err(CarrierError::NotBijective {
                    point: y,
                    preimages: self.preimage_counts()[y],
                });
            }
            inv[y] = x;
        }
        if let Some(point) = inv.iter().position(|&x| x == usize::MAX) {
            return Err(CarrierError::NotBijective { point, preimages: 0 });
        }
        Ok(Endofunction { images: inv })
    }

    pub fn fixed_points(&self) -> impl Iterator<Item = usize> + '_ {
        self.images.iter().enumerate().filter(|(i, &y)| *i == y).map(|(i, _)| i)
    }

    /// Renders the map as `(f(x1) f(x2) …)` using carrier labels.
    pub fn render(&self, carrier: &FiniteSet) -> String {
        let parts: Vec<&str> = self.images.iter().map(|&y| carrier.label(y)).collect();
        parts.join(" ")
    }
}

/// `f ∘ g` for endofunctions on the same carrier.
pub fn compose(f: &Endofunction, g: &Endofunction) -> Result<Endofunction, CarrierError> {
    f.compose(g)
}

/// Right-handed sequencing: `seq(f, g) = compose(g, f)`.
pub fn seq(f: &Endofunction, g: &Endofunction) -> Result<Endofunction, CarrierError> {
    f.seq(g)
}

pub fn identity_map(carrier: &FiniteSet) -> Endofunction {
    Endofunction::identity(carrier.len())
}

pub fn is_bijection(f: &Endofunction) -> bool {
    f.is_bijection()
}

pub fn inverse(f: &Endofunction) -> Result<Endofunction, CarrierError> {
    f.inverse()
}

/// All `n^n` endofunctions of an `n`-element carrier, in lexicographic order
/// of their image tables.
pub fn all_endofunctions(n: usize) -> impl Iterator<Item = Endofunction> {
    let total = n.checked_pow(n as u32).unwrap_or(usize::MAX);
    (0..total).map(move |mut code| {
        let mut images = vec![0; n];
        for slot in images.iter_mut().rev() {
            *slot = code % n;
            code /= n;
        }
        Endofunction { images }
    })
}

/// All permutations of `n` points in lexicographic order.
pub fn all_permutations(n: usize) -> Vec<Endofunction> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    loop {
        out.push(Endofunction {
            images: current.clone(),
        });
        // next lexicographic permutation
        let Some(i) = (1..n).rev().find(|&i| current[i - 1] < current[i]) else {
            break;
        };
        let j = (i..n).rev().find(|&j| current[j] > current[i - 1]).unwrap();
        current.swap(i - 1, j);
        current[i..].reverse();
    }
    out
}
