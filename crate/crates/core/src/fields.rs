//! Action fields: one action of `V` per base point, all with the same
//! translation image.
//!
//! `x + v̄^p` is the translation of `x` by `v` as seen from base point `p`.
//! The common image `𝒯` is stored once; `φ(p): v ↦ v̄^p` and its inverse are
//! index tables into it, which makes pullbacks two lookups.

use thiserror::Error;

use crate::actions::{classify, Action, ActionError, ClassificationReport};
use crate::affine::{verify_preaffine, AffineError, PreaffineSpace, SpaceKind};
use crate::carriers::{Endofunction, FiniteSet};
use crate::groups::{FiniteGroup, VectorGroup};

/// Bound on `|X|·|V|·|X|`, the number of stored table entries.
pub const FIELD_ENTRY_CAP: usize = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error(transparent)]
    Action(#[from] ActionError),
    #[error("expected one action per point ({expected}), found {found}")]
    PointCount { expected: usize, found: usize },
    #[error("action at `{point}` acts on `{found}`, not on the field carrier `{expected}`")]
    CarrierMismatch {
        point: String,
        expected: String,
        found: String,
    },
    #[error("action at `{point}`: {source}")]
    Point {
        point: String,
        #[source]
        source: Box<AffineError>,
    },
    #[error("action at `{point}` is not monoidal: {witness}")]
    NotMonoidal { point: String, witness: String },
    #[error("images differ: the translation [{translation}] of `{p}` is not a translation of `{q}`")]
    ImageMismatch { p: String, q: String, translation: String },
    #[error("field needs {entries} table entries, the cap is {cap}")]
    TooLarge { entries: usize, cap: usize },
}

/// Per-point requirement on the actions of a field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PointwiseKind {
    /// every `Φ(p)` is regular and monoidal (multiaffine)
    Monoidal,
    /// every `Φ(p)` is regular and premonoidal
    Premonoidal,
}

impl PointwiseKind {
    pub fn name(self) -> &'static str {
        match self {
            PointwiseKind::Monoidal => "monoidal",
            PointwiseKind::Premonoidal => "premonoidal",
        }
    }
}

/// A verified action field `Φ` of `V` on `X`.
#[derive(Clone, Debug)]
pub struct ActionField {
    v: VectorGroup,
    carrier: FiniteSet,
    per_point: Vec<Action>,
    kind: PointwiseKind,
    constant: bool,
    common: Vec<Endofunction>,
    // phi[p*k + v] = position of v̄^p in `common`
    phi: Vec<usize>,
    // phi_inv[p*k + t] = the vector v with v̄^p = common[t]
    phi_inv: Vec<usize>,
    // carry[x*n + y] = position of the translation sending x to y
    carry: Vec<usize>,
}

pub fn verify_field(
    v: &VectorGroup,
    carrier: &FiniteSet,
    per_point: Vec<Action>,
    kind: PointwiseKind,
) -> Result<ActionField, FieldError> {
    let n = carrier.len();
    let k = v.order();
    let entries = n.saturating_mul(k).saturating_mul(n);
    if entries > FIELD_ENTRY_CAP {
        return Err(FieldError::TooLarge {
            entries,
            cap: FIELD_ENTRY_CAP,
        });
    }
    if per_point.len() != n {
        return Err(FieldError::PointCount {
            expected: n,
            found: per_point.len(),
        });
    }
    for (p, a) in per_point.iter().enumerate() {
        if a.carrier().labels() != carrier.labels() {
            return Err(FieldError::CarrierMismatch {
                point: carrier.label(p).to_string(),
                expected: carrier.name().to_string(),
                found: a.carrier().name().to_string(),
            });
        }
        let space = verify_preaffine(v, a).map_err(|source| FieldError::Point {
            point: carrier.label(p).to_string(),
            source: Box::new(source),
        })?;
        if kind == PointwiseKind::Monoidal && space.kind() != SpaceKind::Affine {
            let r = classify(a);
            let w = r.group_flags()?.closed_group_contravariant.witness.clone();
            return Err(FieldError::NotMonoidal {
                point: carrier.label(p).to_string(),
                witness: w.map(|w| w.render(a)).unwrap_or_default(),
            });
        }
    }
    let common = per_point[0].image().to_vec();
    for p in 1..n {
        let img = per_point[p].image();
        if img != common.as_slice() {
            let (a, b, t) = match img.iter().find(|t| !common.contains(t)) {
                Some(t) => (p, 0, t),
                None => (0, p, common.iter().find(|t| !img.contains(t)).expect("differ")),
            };
            return Err(FieldError::ImageMismatch {
                p: carrier.label(a).to_string(),
                q: carrier.label(b).to_string(),
                translation: t.render(carrier),
            });
        }
    }
    let mut phi = vec![0; n * k];
    let mut phi_inv = vec![0; n * k];
    for (p, a) in per_point.iter().enumerate() {
        for u in 0..k {
            let t = a.image_of(u);
            phi[p * k + u] = t;
            phi_inv[p * k + t] = u;
        }
    }
    let mut carry = vec![0; n * n];
    for (t, f) in common.iter().enumerate() {
        for x in 0..n {
            carry[x * n + f.apply(x)] = t;
        }
    }
    let constant = per_point.windows(2).all(|w| w[0].maps() == w[1].maps());
    Ok(ActionField {
        v: v.clone(),
        carrier: carrier.clone(),
        per_point,
        kind,
        constant,
        common,
        phi,
        phi_inv,
        carry,
    })
}

impl ActionField {
    /// The field with the same action at every point.
    pub fn constant(space: &PreaffineSpace) -> ActionField {
        let kind = match space.kind() {
            SpaceKind::Affine => PointwiseKind::Monoidal,
            SpaceKind::StrictlyPreaffine => PointwiseKind::Premonoidal,
        };
        let per_point = vec![space.action().clone(); space.size()];
        verify_field(space.vectors(), space.carrier(), per_point, kind).expect("constant field")
    }

    /// `X = V` with `x + v̄^p = x + A_p(v)` for automorphisms `A_p` (given
    /// as index tables, one per point).
    pub fn from_automorphisms(v: &VectorGroup, autos: &[Vec<usize>]) -> Result<ActionField, FieldError> {
        let base = v.base();
        let per_point = autos
            .iter()
            .map(|a| Action::from_fn(base.clone(), base.carrier().clone(), |u, x| v.add(x, a[u])))
            .collect::<Result<Vec<_>, _>>()?;
        verify_field(v, base.carrier(), per_point, PointwiseKind::Monoidal)
    }

    /// `X = target` with `x + v̄^p = b_p(v)·x` for bijections `b_p: V → target`.
    pub fn from_bijections(
        v: &VectorGroup,
        target: &FiniteGroup,
        bs: &[Vec<usize>],
        kind: PointwiseKind,
    ) -> Result<ActionField, FieldError> {
        let per_point = bs
            .iter()
            .map(|b| Action::from_fn(v.base().clone(), target.carrier().clone(), |u, x| target.mul(b[u], x)))
            .collect::<Result<Vec<_>, _>>()?;
        verify_field(v, target.carrier(), per_point, kind)
    }

    pub fn vectors(&self) -> &VectorGroup {
        &self.v
    }

    pub fn carrier(&self) -> &FiniteSet {
        &self.carrier
    }

    pub fn size(&self) -> usize {
        self.carrier.len()
    }

    pub fn kind(&self) -> PointwiseKind {
        self.kind
    }

    pub fn is_constant(&self) -> bool {
        self.constant
    }

    pub fn action_at(&self, p: usize) -> &Action {
        &self.per_point[p]
    }

    pub fn actions(&self) -> &[Action] {
        &self.per_point
    }

    /// The common image `𝒯`.
    pub fn translations(&self) -> &[Endofunction] {
        &self.common
    }

    /// `x + v̄^p`.
    #[inline]
    pub fn translate(&self, p: usize, x: usize, v: usize) -> usize {
        self.common[self.phi[p * self.v.order() + v]].apply(x)
    }

    /// Position in [`ActionField::translations`] of `v̄^p`.
    #[inline]
    pub fn translation_index(&self, p: usize, v: usize) -> usize {
        self.phi[p * self.v.order() + v]
    }

    /// `φ(p)⁻¹` applied to the translation at position `t`.
    #[inline]
    pub fn vector_at(&self, p: usize, t: usize) -> usize {
        self.phi_inv[p * self.v.order() + t]
    }

    /// Position of the unique translation sending `x` to `y`.
    #[inline]
    pub fn carry(&self, x: usize, y: usize) -> usize {
        self.carry[x * self.size() + y]
    }

    /// `(x → y)_p`, the unique `v` with `x + v̄^p = y`.
    #[inline]
    pub fn division_at(&self, p: usize, x: usize, y: usize) -> usize {
        self.vector_at(p, self.carry(x, y))
    }

    /// `(v̄^q)_p = φ(p)⁻¹(φ(q)(v))`.
    #[inline]
    pub fn pullback(&self, v: usize, q: usize, p: usize) -> usize {
        self.vector_at(p, self.translation_index(q, v))
    }

    /// `α_Φ(v)(x) = x + v̄^x`.
    pub fn induced_action(&self) -> InducedAction {
        let base = self.v.base().clone();
        let action = Action::from_fn(base, self.carrier.clone(), |v, x| self.translate(x, x, v)).expect("well-formed");
        let report = classify(&action);
        let space = verify_preaffine(&self.v, &action).ok();
        InducedAction { action, report, space }
    }
}

/// The single action `α_Φ` of a field together with its classification.
#[derive(Clone, Debug)]
pub struct InducedAction {
    pub action: Action,
    pub report: ClassificationReport,
    /// `Some` when `α_Φ` is preaffine; `None` for a strictly semipreaffine
    /// space.
    pub space: Option<PreaffineSpace>,
}

impl InducedAction {
    pub fn is_preaffine(&self) -> bool {
        self.space.is_some()
    }

    pub fn kind_name(&self) -> &'static str {
        match &self.space {
            Some(s) => s.kind().name(),
            None => "strictly_semipreaffine",
        }
    }
}

pub fn pullback(f: &ActionField, v: usize, q: usize, p: usize) -> usize {
    f.pullback(v, q, p)
}

pub fn division_at(f: &ActionField, p: usize, x: usize, y: usize) -> usize {
    f.division_at(p, x, y)
}

pub fn induced_action(f: &ActionField) -> InducedAction {
    f.induced_action()
}

/// The `(Z_3, a)` field with `x + v̄^p = x + a_p·v`, `a_p ∈ {1, 2}`.
pub fn z3_scaling_field(a: &[usize]) -> Result<ActionField, FieldError> {
    let v = crate::groups::elementary_abelian(3, 1).expect("Z3");
    let autos: Vec<Vec<usize>> = a.iter().map(|&s| (0..3).map(|u| (u * s) % 3).collect()).collect();
    ActionField::from_automorphisms(&v, &autos)
}
