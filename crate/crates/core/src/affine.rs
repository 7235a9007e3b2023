//! Affine and preaffine spaces: regular (pre)monoidal actions of a vector
//! group `V`.
//!
//! Point-plus-vector notation is right-handed: `x + ū + v̄` applies `ū`
//! first, then `v̄`. So the affine law `x + overline(u+v) = x + ū + v̄` is the
//! contravariant closure law; for abelian `V` both variances agree and
//! [`verify_preaffine`] asserts that they do.

use thiserror::Error;

use crate::actions::{Action, ActionError, Flag, Slot};
use crate::carriers::{Endofunction, FiniteSet};
use crate::groups::{FiniteGroup, GroupError, VectorGroup};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AffineError {
    #[error(transparent)]
    Action(#[from] ActionError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("action domain `{found}` is not the vector group `{expected}`")]
    DomainMismatch { expected: String, found: String },
    #[error("not unital: x + 0 ≠ x at x = {x}")]
    NotUnital { x: String },
    #[error("not transitive: no vector carries {x} to {y}")]
    NotTransitive { x: String, y: String },
    #[error("not free: {u} and {v} agree at {x}")]
    NotFree { x: String, u: String, v: String },
    #[error("not closed: translation by {u} then {v} is not a translation")]
    NotClosed { u: String, v: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SpaceKind {
    Affine,
    StrictlyPreaffine,
}

impl SpaceKind {
    pub fn name(self) -> &'static str {
        match self {
            SpaceKind::Affine => "affine",
            SpaceKind::StrictlyPreaffine => "strictly_preaffine",
        }
    }
}

/// A carrier with a regular premonoidal action of a vector group.
#[derive(Clone, Debug)]
pub struct PreaffineSpace {
    v: VectorGroup,
    action: Action,
    arrow: Vec<usize>,
    // vector whose translation sits at each image position
    vector_at: Vec<usize>,
    kind: SpaceKind,
}

pub fn verify_preaffine(v: &VectorGroup, action: &Action) -> Result<PreaffineSpace, AffineError> {
    let base = v.base();
    let same_domain = action.domain().group().is_some_and(|g| g.same_table(base))
        && action.domain().elements().labels() == base.carrier().labels();
    if !same_domain {
        return Err(AffineError::DomainMismatch {
            expected: base.name().to_string(),
            found: action.domain().elements().name().to_string(),
        });
    }
    let n = action.carrier_size();
    let k = action.domain_size();
    let pt = |x: usize| action.carrier().label(x).to_string();
    let vec = |u: usize| base.label(u).to_string();

    let zero = v.zero();
    if let Some(x) = (0..n).find(|&x| action.apply(zero, x) != x) {
        return Err(AffineError::NotUnital { x: pt(x) });
    }
    let mut arrow = vec![usize::MAX; n * n];
    for x in 0..n {
        for u in 0..k {
            let y = action.apply(u, x);
            if arrow[x * n + y] != usize::MAX {
                return Err(AffineError::NotFree {
                    x: pt(x),
                    u: vec(arrow[x * n + y]),
                    v: vec(u),
                });
            }
            arrow[x * n + y] = u;
        }
        if let Some(y) = (0..n).find(|&y| arrow[x * n + y] == usize::MAX) {
            return Err(AffineError::NotTransitive { x: pt(x), y: pt(y) });
        }
    }
    for u in 0..k {
        for w in 0..k {
            let uw = action.map(u).seq_unchecked(action.map(w));
            if action.image_position(&uw).is_none() {
                return Err(AffineError::NotClosed { u: vec(u), v: vec(w) });
            }
        }
    }
    let mut vector_at = vec![usize::MAX; action.image().len()];
    for u in 0..k {
        vector_at[action.image_of(u)] = u;
    }
    let contravariant = (0..n)
        .all(|x| (0..k).all(|u| (0..k).all(|w| action.apply(w, action.apply(u, x)) == action.apply(v.add(u, w), x))));
    let covariant = (0..n)
        .all(|x| (0..k).all(|u| (0..k).all(|w| action.apply(u, action.apply(w, x)) == action.apply(v.add(u, w), x))));
    assert_eq!(contravariant, covariant, "variance changed affinity over an abelian V");
    let kind = if contravariant {
        SpaceKind::Affine
    } else {
        SpaceKind::StrictlyPreaffine
    };
    Ok(PreaffineSpace {
        v: v.clone(),
        action: action.clone(),
        arrow,
        vector_at,
        kind,
    })
}

impl PreaffineSpace {
    /// The regular representation `x + v̄ = x + v` of `V` on itself.
    pub fn regular(v: &VectorGroup) -> PreaffineSpace {
        let a = Action::right_regular(v.base());
        verify_preaffine(v, &a).expect("regular representation is affine")
    }

    /// `X = target` with `v̄ = left multiplication by b(v)`.
    pub fn from_bijection(v: &VectorGroup, target: &FiniteGroup, b: &[usize]) -> Result<Self, AffineError> {
        let a = Action::from_fn(v.base().clone(), target.carrier().clone(), |u, x| target.mul(b[u], x))?;
        verify_preaffine(v, &a)
    }

    pub fn vectors(&self) -> &VectorGroup {
        &self.v
    }

    pub fn action(&self) -> &Action {
        &self.action
    }

    pub fn carrier(&self) -> &FiniteSet {
        self.action.carrier()
    }

    pub fn size(&self) -> usize {
        self.action.carrier_size()
    }

    pub fn kind(&self) -> SpaceKind {
        self.kind
    }

    /// `x + v̄`.
    #[inline]
    pub fn translate(&self, x: usize, v: usize) -> usize {
        self.action.apply(v, x)
    }

    /// `(x → y)`, the unique `v` with `x + v̄ = y`.
    #[inline]
    pub fn arrow(&self, x: usize, y: usize) -> usize {
        self.arrow[x * self.size() + y]
    }

    /// `v̄`.
    pub fn translation(&self, v: usize) -> &Endofunction {
        self.action.map(v)
    }

    /// The vector whose translation is `f`, if `f` is a translation.
    pub fn vector_of(&self, f: &Endofunction) -> Option<usize> {
        self.action.image_position(f).map(|i| self.vector_at[i])
    }

    pub fn translation_group(&self) -> TranslationGroup {
        TranslationGroup::of_space(self)
    }
}

/// The translations `ᾱ(V)` with composition.
#[derive(Clone, Debug)]
pub struct TranslationGroup {
    /// `elements[v]` is the translation by vector `v`
    pub elements: Vec<Endofunction>,
    /// `table[s][t] = s ∘ t`
    pub table: Vec<Vec<usize>>,
    pub identity: usize,
    group: FiniteGroup,
}

impl TranslationGroup {
    fn of_space(s: &PreaffineSpace) -> TranslationGroup {
        let k = s.v.order();
        let elements: Vec<Endofunction> = (0..k).map(|u| s.translation(u).clone()).collect();
        let table: Vec<Vec<usize>> = (0..k)
            .map(|a| {
                (0..k)
                    .map(|b| {
                        s.vector_of(&elements[a].compose_unchecked(&elements[b]))
                            .expect("closed")
                    })
                    .collect()
            })
            .collect();
        let carrier = s.v.base().carrier().renamed(format!("T({})", s.carrier().name()));
        let group = FiniteGroup::validate(carrier, table.clone()).expect("translations form a group");
        let identity = group.identity();
        debug_assert!(elements[identity].is_identity());
        for f in &elements {
            assert!(
                f.fixed_points().next().is_none() || f.is_identity(),
                "translation with a fixed point"
            );
        }
        TranslationGroup {
            elements,
            table,
            identity,
            group,
        }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// The composition table as a group labelled by vectors.
    pub fn as_group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn inverse(&self, s: usize) -> usize {
        self.group.inverse(s)
    }

    pub fn is_abelian(&self) -> bool {
        self.group.is_abelian()
    }
}

pub fn translation_group(s: &PreaffineSpace) -> TranslationGroup {
    s.translation_group()
}

/// Chasles' law at the vector level and at the translation level.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChaslesReport {
    /// `(x→y) + (y→z) = (x→z)`; witness `(x, y, z)`
    pub vector_level: Flag,
    /// `x + overline(x→y) + overline(y→z) = x + overline(x→z)` as maps;
    /// witness `(x, y, z)`
    pub translation_level: Flag,
}

impl ChaslesReport {
    pub fn holds(&self) -> bool {
        self.vector_level.holds
    }
}

pub fn chasles(s: &PreaffineSpace) -> ChaslesReport {
    let n = s.size();
    let triples = || (0..n).flat_map(move |x| (0..n).flat_map(move |y| (0..n).map(move |z| (x, y, z))));
    let slots = |(x, y, z)| vec![Slot::Point(x), Slot::Point(y), Slot::Point(z)];
    let vector_level = Flag::from_witness(
        triples()
            .find(|&(x, y, z)| s.v.add(s.arrow(x, y), s.arrow(y, z)) != s.arrow(x, z))
            .map(slots),
    );
    let translation_level = Flag::from_witness(
        triples()
            .find(|&(x, y, z)| {
                let lhs = s.translation(s.arrow(x, y)).seq_unchecked(s.translation(s.arrow(y, z)));
                &lhs != s.translation(s.arrow(x, z))
            })
            .map(slots),
    );
    ChaslesReport {
        vector_level,
        translation_level,
    }
}

/// The inverse of `overline(x→y)` in the translation group, checked to be
/// `overline(y→x)`.
pub fn neg_translation(s: &PreaffineSpace, x: usize, y: usize) -> Endofunction {
    let t = s.translation(s.arrow(x, y));
    let inv = t.inverse().expect("translations are bijections");
    assert!(s.vector_of(&inv).is_some(), "inverse leaves the translation group");
    assert_eq!(&inv, s.translation(s.arrow(y, x)));
    assert_eq!(s.arrow(x, x), s.v.zero());
    assert!(s.translation(s.arrow(x, x)).is_identity());
    inv
}

/// `x + ū + v̄ = x + v̄ + ū` for all `(x, u, v)`; witness `(x, u, v)`.
pub fn parallelogram(s: &PreaffineSpace) -> Flag {
    let n = s.size();
    let k = s.v.order();
    Flag::from_witness((0..n).find_map(|x| {
        (0..k).find_map(|u| {
            (0..k)
                .find(|&v| s.translate(s.translate(x, u), v) != s.translate(s.translate(x, v), u))
                .map(|v| vec![Slot::Point(x), Slot::Domain(u), Slot::Domain(v)])
        })
    }))
}

/// All identity-preserving bijections `V → target`, lexicographic.
pub fn identity_preserving_bijections(v: &VectorGroup, target: &FiniteGroup) -> Vec<Vec<usize>> {
    let n = v.order();
    if target.order() != n {
        return Vec::new();
    }
    let (z, e) = (v.zero(), target.identity());
    crate::carriers::all_permutations(n)
        .into_iter()
        .map(|p| p.images().to_vec())
        .filter(|p| p[z] == e)
        .collect()
}
