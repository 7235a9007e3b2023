//! Actions `α: G → F_X` of bare sets and of groups.
//!
//! An [`Action`] stores one endofunction per domain element together with
//! its distinct image. Duals, orbits and conduit sets are read straight off
//! the tables; [`classify`] evaluates the whole taxonomy at once.

mod binary;
mod classify;

pub use binary::{from_binary, to_binary, BinaryActionTable};
pub use classify::{
    classify, classify_with, ClassificationReport, Flag, GroupFlags, ImageStructure, Slot, Variance, Witness,
};

use thiserror::Error;

use crate::carriers::{all_endofunctions, CarrierError, Endofunction, FiniteSet};
use crate::groups::FiniteGroup;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ActionError {
    #[error(transparent)]
    Carrier(#[from] CarrierError),
    #[error("expected {expected} maps (one per domain element), found {found}")]
    MapCount { expected: usize, found: usize },
    #[error("map for `{element}` has degree {found}, the carrier has {expected} elements")]
    Degree {
        element: String,
        expected: usize,
        found: usize,
    },
    #[error("group-level predicates need a group domain, `{0}` is a bare set")]
    NotAGroupDomain(String),
    #[error("action is not regular: {0}")]
    NotRegular(String),
    #[error("domain mismatch: expected `{expected}`, found `{found}`")]
    DomainMismatch { expected: String, found: String },
}

/// The domain of an action: a bare set or a group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ActionDomain {
    Set(FiniteSet),
    Group(FiniteGroup),
}

impl ActionDomain {
    pub fn elements(&self) -> &FiniteSet {
        match self {
            ActionDomain::Set(s) => s,
            ActionDomain::Group(g) => g.carrier(),
        }
    }

    pub fn len(&self) -> usize {
        self.elements().len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn label(&self, g: usize) -> &str {
        self.elements().label(g)
    }

    pub fn group(&self) -> Option<&FiniteGroup> {
        match self {
            ActionDomain::Group(g) => Some(g),
            ActionDomain::Set(_) => None,
        }
    }
}

impl From<FiniteGroup> for ActionDomain {
    fn from(g: FiniteGroup) -> Self {
        ActionDomain::Group(g)
    }
}

impl From<FiniteSet> for ActionDomain {
    fn from(s: FiniteSet) -> Self {
        ActionDomain::Set(s)
    }
}

/// `α: G → F_X` as a table of endofunctions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Action {
    domain: ActionDomain,
    carrier: FiniteSet,
    maps: Vec<Endofunction>,
    image: Vec<Endofunction>,
    image_of: Vec<usize>,
}

impl Action {
    pub fn new(
        domain: impl Into<ActionDomain>,
        carrier: FiniteSet,
        maps: Vec<Endofunction>,
    ) -> Result<Self, ActionError> {
        let domain = domain.into();
        if maps.len() != domain.len() {
            return Err(ActionError::MapCount {
                expected: domain.len(),
                found: maps.len(),
            });
        }
        for (g, m) in maps.iter().enumerate() {
            if m.degree() != carrier.len() {
                return Err(ActionError::Degree {
                    element: domain.label(g).to_string(),
                    expected: carrier.len(),
                    found: m.degree(),
                });
            }
        }
        let mut image = maps.clone();
        image.sort();
        image.dedup();
        let image_of = maps.iter().map(|m| image.binary_search(m).expect("present")).collect();
        Ok(Action {
            domain,
            carrier,
            maps,
            image,
            image_of,
        })
    }

    /// Builds an action from a rule `(g, x) ↦ ḡ(x)`.
    pub fn from_fn(
        domain: impl Into<ActionDomain>,
        carrier: FiniteSet,
        rule: impl Fn(usize, usize) -> usize,
    ) -> Result<Self, ActionError> {
        let domain = domain.into();
        let n = carrier.len();
        let maps = (0..domain.len())
            .map(|g| Endofunction::from_fn(n, |x| rule(g, x)))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(domain, carrier, maps)
    }

    /// `g ↦ (x ↦ g□x)`: the left regular representation of a group.
    pub fn left_regular(g: &FiniteGroup) -> Action {
        Self::from_fn(g.clone(), g.carrier().clone(), |a, x| g.mul(a, x)).expect("well-formed")
    }

    /// `g ↦ (x ↦ x□g)`: the right regular representation of a group.
    pub fn right_regular(g: &FiniteGroup) -> Action {
        Self::from_fn(g.clone(), g.carrier().clone(), |a, x| g.mul(x, a)).expect("well-formed")
    }

    /// `g ↦ ε_X` for every `g`.
    pub fn trivial(domain: impl Into<ActionDomain>, carrier: FiniteSet) -> Action {
        Self::from_fn(domain, carrier, |_, x| x).expect("well-formed")
    }

    pub fn domain(&self) -> &ActionDomain {
        &self.domain
    }

    pub fn carrier(&self) -> &FiniteSet {
        &self.carrier
    }

    pub fn maps(&self) -> &[Endofunction] {
        &self.maps
    }

    #[inline]
    pub fn map(&self, g: usize) -> &Endofunction {
        &self.maps[g]
    }

    #[inline]
    pub fn apply(&self, g: usize, x: usize) -> usize {
        self.maps[g].apply(x)
    }

    /// The distinct endofunctions `ᾱ(G)`, sorted by image table.
    pub fn image(&self) -> &[Endofunction] {
        &self.image
    }

    /// Position of `ḡ` inside [`Action::image`].
    pub fn image_of(&self, g: usize) -> usize {
        self.image_of[g]
    }

    pub fn image_position(&self, f: &Endofunction) -> Option<usize> {
        self.image.binary_search(f).ok()
    }

    pub fn domain_size(&self) -> usize {
        self.domain.len()
    }

    pub fn carrier_size(&self) -> usize {
        self.carrier.len()
    }

    /// `x̄: g ↦ ḡ(x)`.
    pub fn dual(&self, x: usize) -> Vec<usize> {
        self.maps.iter().map(|m| m.apply(x)).collect()
    }

    /// `x̄(G)`, sorted.
    pub fn orbit(&self, x: usize) -> Vec<usize> {
        let mut o = self.dual(x);
        o.sort_unstable();
        o.dedup();
        o
    }

    /// `{ g : ḡ(x) = y }`, sorted.
    pub fn conduit(&self, x: usize, y: usize) -> Vec<usize> {
        (0..self.domain_size()).filter(|&g| self.apply(g, x) == y).collect()
    }

    pub fn stabilizer(&self, x: usize) -> Vec<usize> {
        self.conduit(x, x)
    }

    /// The unique `g` with `ḡ(x) = y`, for regular actions.
    pub fn division(&self, x: usize, y: usize) -> Result<usize, ActionError> {
        let c = self.conduit(x, y);
        match c.as_slice() {
            [g] => Ok(*g),
            _ => Err(ActionError::NotRegular(format!(
                "{} domain elements send {} to {}",
                c.len(),
                self.carrier.label(x),
                self.carrier.label(y)
            ))),
        }
    }

    /// Division table `d[x][y] = y/x`; fails unless the action is regular.
    pub fn division_table(&self) -> Result<Vec<Vec<usize>>, ActionError> {
        let n = self.carrier_size();
        if self.domain_size() != n {
            return Err(ActionError::NotRegular(format!(
                "domain has {} elements, carrier has {}",
                self.domain_size(),
                n
            )));
        }
        let mut table = vec![vec![usize::MAX; n]; n];
        for x in 0..n {
            for g in 0..n {
                let y = self.apply(g, x);
                if table[x][y] != usize::MAX {
                    return Err(ActionError::NotRegular(format!(
                        "{} and {} both send {} to {}",
                        self.domain.label(table[x][y]),
                        self.domain.label(g),
                        self.carrier.label(x),
                        self.carrier.label(y)
                    )));
                }
                table[x][y] = g;
            }
        }
        Ok(table)
    }

    /// Same maps over the opposite group.
    pub fn opposite(&self) -> Result<Action, ActionError> {
        match &self.domain {
            ActionDomain::Group(g) => Ok(Action {
                domain: ActionDomain::Group(g.opposite()),
                ..self.clone()
            }),
            ActionDomain::Set(s) => Err(ActionError::NotAGroupDomain(s.name().to_string())),
        }
    }

    /// Same maps over a different domain of equal size.
    pub fn with_domain(&self, domain: impl Into<ActionDomain>) -> Result<Action, ActionError> {
        Action::new(domain, self.carrier.clone(), self.maps.clone())
    }

    pub fn to_binary(&self) -> BinaryActionTable {
        BinaryActionTable::from_action(self)
    }

    pub fn classify(&self) -> ClassificationReport {
        classify(self)
    }
}

pub fn orbit(a: &Action, x: usize) -> Vec<usize> {
    a.orbit(x)
}

pub fn conduit(a: &Action, x: usize, y: usize) -> Vec<usize> {
    a.conduit(x, y)
}

pub fn division(a: &Action, x: usize, y: usize) -> Result<usize, ActionError> {
    a.division(x, y)
}

pub fn opposite_action(a: &Action) -> Result<Action, ActionError> {
    a.opposite()
}

/// Every action of `domain` on `carrier`, in lexicographic order of the
/// concatenated image tables.
pub fn enumerate(domain: ActionDomain, carrier: FiniteSet) -> impl Iterator<Item = Action> {
    let k = domain.len();
    let n = carrier.len();
    let maps: Vec<Endofunction> = all_endofunctions(n).collect();
    let total = maps.len().pow(k as u32);
    (0..total).map(move |mut code| {
        let mut chosen = vec![Endofunction::identity(n); k];
        for slot in chosen.iter_mut().rev() {
            *slot = maps[code % maps.len()].clone();
            code /= maps.len();
        }
        Action::new(domain.clone(), carrier.clone(), chosen).expect("well-formed")
    })
}
