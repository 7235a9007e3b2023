//! Torsion and curvature measures, bound vectors and parallel transport.
//!
//! Every measure is a division `(a → b)` taken at some base point, returned
//! as a [`DeformationValue`] carrying the vector, the corresponding
//! translation and the base. Sequences read left to right: `x + ū + v̄`
//! applies `ū` first.

use thiserror::Error;

use crate::affine::PreaffineSpace;
use crate::carriers::Endofunction;
use crate::fields::ActionField;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DeformationError {
    #[error("bound vector origin {bound} differs from the origin {along} of the path")]
    OriginMismatch { bound: usize, along: usize },
}

/// A vector together with its translation and the base of the division.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeformationValue {
    pub vector: usize,
    pub translation: Endofunction,
    pub base: usize,
}

impl DeformationValue {
    fn in_space(s: &PreaffineSpace, from: usize, to: usize) -> Self {
        let vector = s.arrow(from, to);
        DeformationValue {
            vector,
            translation: s.translation(vector).clone(),
            base: from,
        }
    }

    fn in_field(f: &ActionField, base: usize, from: usize, to: usize) -> Self {
        let t = f.carry(from, to);
        DeformationValue {
            vector: f.vector_at(base, t),
            translation: f.translations()[t].clone(),
            base,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.translation.is_identity()
    }
}

/// `T₀(x,u,v) = ((x + ū + v̄) → (x + overline(u+v)))`.
pub fn torsion0(s: &PreaffineSpace, x: usize, u: usize, v: usize) -> DeformationValue {
    let a = s.translate(s.translate(x, u), v);
    let b = s.translate(x, s.vectors().add(u, v));
    DeformationValue::in_space(s, a, b)
}

/// `T₁(x,u,v) = ((x + ū + v̄) → (x + v̄ + ū))`.
pub fn torsion1(s: &PreaffineSpace, x: usize, u: usize, v: usize) -> DeformationValue {
    let a = s.translate(s.translate(x, u), v);
    let b = s.translate(s.translate(x, v), u);
    DeformationValue::in_space(s, a, b)
}

/// `T₁*(x,u,v) = (t → t')_t` with `y = x + ū^x`, `z = x + v̄^x`,
/// `t = y + v̄^y`, `t' = z + ū^z`.
pub fn torsion1_star(f: &ActionField, x: usize, u: usize, v: usize) -> DeformationValue {
    let y = f.translate(x, x, u);
    let z = f.translate(x, x, v);
    let t = f.translate(y, y, v);
    let t2 = f.translate(z, z, u);
    DeformationValue::in_field(f, t, t, t2)
}

/// `T₀*(x,u,v) = (t → x + overline(u+v)^x)_t` with `y = x + ū^x`,
/// `t = y + v̄^y`.
pub fn torsion0_star(f: &ActionField, x: usize, u: usize, v: usize) -> DeformationValue {
    let y = f.translate(x, x, u);
    let t = f.translate(y, y, v);
    let t2 = f.translate(x, x, f.vectors().add(u, v));
    DeformationValue::in_field(f, t, t, t2)
}

/// `C₀*(x,w,u,v) = (t → r + overline(u + (v̄^s)_r)^r)_t` with
/// `r = x + w̄^x`, `s = r + ū^r`, `t = s + v̄^s`.
pub fn curvature0(f: &ActionField, x: usize, w: usize, u: usize, v: usize) -> DeformationValue {
    let r = f.translate(x, x, w);
    let s = f.translate(r, r, u);
    let t = f.translate(s, s, v);
    let t2 = f.translate(r, r, f.vectors().add(u, f.pullback(v, s, r)));
    DeformationValue::in_field(f, t, t, t2)
}

/// `C₁*(x,w,u,v) = overline(C₀*(x,w,u,v)) − overline(C₀*(x,w,v,u))`,
/// composed in the translation group (first term applied first). The vector
/// is read at `base`.
pub fn curvature1(f: &ActionField, x: usize, w: usize, u: usize, v: usize, base: usize) -> DeformationValue {
    let a = curvature0(f, x, w, u, v).translation;
    let b = curvature0(f, x, w, v, u).translation;
    let b_inv = b.inverse().expect("translations are bijections");
    let translation = a.seq(&b_inv).expect("same carrier");
    let t = f
        .translations()
        .binary_search(&translation)
        .expect("translations are closed under composition");
    DeformationValue {
        vector: f.vector_at(base, t),
        translation,
        base,
    }
}

/// `D*(x,p,d,v) = ((x + v̄^p) → (x + v̄^{p'}))_p` with `p' = p + d̄^p`.
pub fn dstar(f: &ActionField, x: usize, p: usize, d: usize, v: usize) -> DeformationValue {
    let p2 = f.translate(p, p, d);
    let a = f.translate(p, x, v);
    let b = f.translate(p2, x, v);
    DeformationValue::in_field(f, p, a, b)
}

/// An ordered pair of points.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BoundVector {
    pub origin: usize,
    pub tip: usize,
}

impl BoundVector {
    pub fn new(origin: usize, tip: usize) -> Self {
        BoundVector { origin, tip }
    }
}

fn same_origin(bv: BoundVector, along: BoundVector) -> Result<(), DeformationError> {
    if bv.origin != along.origin {
        return Err(DeformationError::OriginMismatch {
            bound: bv.origin,
            along: along.origin,
        });
    }
    Ok(())
}

/// `(x, z) ↦ (y, z + overline(x→y))` along `(x, y)`.
pub fn transport_preaffine(
    s: &PreaffineSpace,
    bv: BoundVector,
    along: BoundVector,
) -> Result<BoundVector, DeformationError> {
    same_origin(bv, along)?;
    let u = s.arrow(along.origin, along.tip);
    Ok(BoundVector::new(along.tip, s.translate(bv.tip, u)))
}

/// `(x, z) ↦ (y, z + overline((x→y)_x)^z)` along `(x, y)`: the tip moves by
/// the vector of the path, read at the tip itself.
pub fn transport_field(f: &ActionField, bv: BoundVector, along: BoundVector) -> Result<BoundVector, DeformationError> {
    same_origin(bv, along)?;
    let u = f.division_at(along.origin, along.origin, along.tip);
    Ok(BoundVector::new(along.tip, f.translate(bv.tip, bv.tip, u)))
}

/// Discrepancy between transporting `(x, r)` along `(x, y)` then `(y, z)`
/// and transporting it along `(x, z)` directly, as `(t → t')_t` where `t`
/// and `t'` are the two resulting tips.
pub fn transport_holonomy(f: &ActionField, x: usize, y: usize, z: usize, r: usize) -> DeformationValue {
    let step = transport_field(f, BoundVector::new(x, r), BoundVector::new(x, y)).expect("same origin");
    let two = transport_field(f, step, BoundVector::new(y, z)).expect("same origin");
    let direct = transport_field(f, BoundVector::new(x, r), BoundVector::new(x, z)).expect("same origin");
    DeformationValue::in_field(f, two.tip, two.tip, direct.tip)
}
