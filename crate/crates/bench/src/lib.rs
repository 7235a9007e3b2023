//! Shared inputs for the benchmarks.

use actfield::affine::{identity_preserving_bijections, PreaffineSpace};
use actfield::fields::{ActionField, PointwiseKind};
use actfield::groups::{catalog, elementary_abelian, FiniteGroup, VectorGroup};

pub fn z2cube() -> VectorGroup {
    elementary_abelian(2, 3).expect("Z2^3")
}

pub fn quaternions() -> FiniteGroup {
    catalog("Q").expect("catalog")
}

/// The strictly preaffine space on Q from the first identity-preserving bijection.
pub fn q_space() -> PreaffineSpace {
    let (v, q) = (z2cube(), quaternions());
    let b = identity_preserving_bijections(&v, &q).swap_remove(0);
    PreaffineSpace::from_bijection(&v, &q, &b).expect("preaffine")
}

/// A non-constant premonoidal field on Q, one bijection per point.
pub fn q_field() -> ActionField {
    let (v, q) = (z2cube(), quaternions());
    let bs = identity_preserving_bijections(&v, &q);
    let chosen: Vec<Vec<usize>> = (0..8).map(|p| bs[(p * 613) % bs.len()].clone()).collect();
    ActionField::from_bijections(&v, &q, &chosen, PointwiseKind::Premonoidal).expect("premonoidal field")
}
