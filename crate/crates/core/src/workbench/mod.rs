//! File formats, reports, command runners, the structure miner and the
//! shipped example catalog.

mod format;
mod mine;
mod report;
mod run;

pub use format::{
    emit, emit_action, emit_field, emit_group, emit_malcev, parse, parse_action, parse_binary, parse_field,
    parse_group, parse_malcev, ParseError, Structure,
};
pub use mine::{
    first_nonzero_curvature, mine, mine_report, CurvatureWitness, Family, Filter, MineOptions, MineResult, Mined,
    DEFAULT_BUDGET,
};
pub use report::{Report, Status};
pub use run::{
    catalog_matches, image_group, run_affine, run_classify, run_deform, run_field, run_malcev, DeformTarget,
    MalcevCommand, Measure, TABULATION_LIMIT,
};

use crate::actions::Action;
use crate::affine::{identity_preserving_bijections, PreaffineSpace};
use crate::carriers::{Endofunction, FiniteSet};
use crate::fields::z3_scaling_field;
use crate::groups::{catalog, elementary_abelian, FiniteGroup};
use crate::malcev::MalcevStructure;

/// Example files embedded in the binary, by file name.
pub const SHIPPED: [(&str, &str); 9] = [
    ("C8.group", include_str!("../../catalog/C8.group")),
    ("Q.group", include_str!("../../catalog/Q.group")),
    ("eps_phi.action", include_str!("../../catalog/eps_phi.action")),
    ("c8_on_q.action", include_str!("../../catalog/c8_on_q.action")),
    ("z3_regular.action", include_str!("../../catalog/z3_regular.action")),
    (
        "z2cube_regular.action",
        include_str!("../../catalog/z2cube_regular.action"),
    ),
    ("q_preaffine.action", include_str!("../../catalog/q_preaffine.action")),
    ("z3_121.field", include_str!("../../catalog/z3_121.field")),
    ("z2_heap.malcev", include_str!("../../catalog/z2_heap.malcev")),
];

pub fn shipped(name: &str) -> Option<&'static str> {
    SHIPPED.iter().find(|(n, _)| *n == name).map(|(_, t)| *t)
}

/// `G = {e, f}` acting on `{a, b, c, d}` by `ε = (a a c d)` and
/// `φ = (a a d c)`: a closed group action whose image is a group with an
/// identity other than `ε_X`.
pub fn eps_phi_action() -> Action {
    let g = FiniteGroup::from_fn(FiniteSet::new("G", ["e", "f"]).expect("labels"), |a, b| a ^ b).expect("Z2");
    let x = FiniteSet::new("X", ["a", "b", "c", "d"]).expect("labels");
    let maps = vec![
        Endofunction::new(vec![0, 0, 2, 3]).expect("map"),
        Endofunction::new(vec![0, 0, 3, 2]).expect("map"),
    ];
    Action::new(g, x, maps).expect("well-formed")
}

/// C8 acting on Q by left multiplication, `a^k ↦ 1, i, j, k, -1, -k, -j, -i`.
pub fn c8_on_q_action() -> Action {
    let c8 = catalog("C8").expect("catalog");
    let q = catalog("Q").expect("catalog");
    let targets = ["1", "i", "j", "k", "-1", "-k", "-j", "-i"];
    Action::from_fn(c8, q.carrier().clone(), |a, x| {
        q.mul(q.carrier().lookup(targets[a]).expect("label"), x)
    })
    .expect("well-formed")
}

/// The values behind [`SHIPPED`], in the same order.
pub fn shipped_structures() -> Vec<(&'static str, Structure)> {
    let z3 = elementary_abelian(3, 1).expect("Z3");
    let z2cube = elementary_abelian(2, 3).expect("Z2^3");
    let q = catalog("Q").expect("catalog");
    let b = identity_preserving_bijections(&z2cube, &q).swap_remove(0);
    let q_space = PreaffineSpace::from_bijection(&z2cube, &q, &b).expect("preaffine");
    vec![
        ("C8.group", Structure::Group(catalog("C8").expect("catalog"))),
        ("Q.group", Structure::Group(q)),
        ("eps_phi.action", Structure::Action(eps_phi_action())),
        ("c8_on_q.action", Structure::Action(c8_on_q_action())),
        (
            "z3_regular.action",
            Structure::Action(PreaffineSpace::regular(&z3).action().clone()),
        ),
        (
            "z2cube_regular.action",
            Structure::Action(PreaffineSpace::regular(&z2cube).action().clone()),
        ),
        ("q_preaffine.action", Structure::Action(q_space.action().clone())),
        (
            "z3_121.field",
            Structure::Field(z3_scaling_field(&[1, 2, 1]).expect("field")),
        ),
        (
            "z2_heap.malcev",
            Structure::Malcev(MalcevStructure::from_group(&catalog("Z2").expect("catalog"))),
        ),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::actions::Variance;

    /// Rewrites the catalog files; run with `--ignored` after a format change.
    #[test]
    #[ignore]
    fn regenerate_shipped() {
        let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/catalog");
        for (name, s) in shipped_structures() {
            std::fs::write(format!("{dir}/{name}"), emit(&s)).unwrap();
        }
    }

    #[test]
    fn shipped_files_are_canonical() {
        for ((name, text), (name2, s)) in SHIPPED.iter().zip(shipped_structures()) {
            assert_eq!(*name, name2);
            assert_eq!(*text, emit(&s), "{name}");
            assert_eq!(emit(&parse(text).unwrap()), *text, "{name}");
        }
    }

    #[test]
    fn shipped_q_group_is_the_catalog_q() {
        assert_eq!(parse_group(shipped("Q.group").unwrap()).unwrap(), catalog("Q").unwrap());
    }

    #[test]
    fn classify_c8_on_q() {
        let a = parse_action(shipped("c8_on_q.action").unwrap()).unwrap();
        let r = run_classify(&a, Variance::Covariant);
        assert_eq!(r.get("premonoidal"), Some("true"));
        assert_eq!(r.get("monoidal"), Some("false"));
        assert_eq!(r.get("translation_group.order"), Some("8"));
        assert_eq!(r.get("translation_group.isomorphic_to"), Some("Q"));
        assert_eq!(r.get("translation_group.isomorphic_to_domain"), Some("false"));
    }

    #[test]
    fn torsion1_on_affine_z3() {
        let a = parse_action(shipped("z3_regular.action").unwrap()).unwrap();
        let v = crate::groups::VectorGroup::certify(a.domain().group().unwrap().clone()).unwrap();
        let s = crate::affine::verify_preaffine(&v, &a).unwrap();
        let r = run_deform(DeformTarget::Space(&s), Measure::Torsion1, false);
        assert_eq!(r.get("max_norm_nonzero"), Some("false"));
        assert_eq!(r.get("tuples"), Some("27"));
        assert_eq!(r.get("value(1, 2, 0)"), Some("(0)"));
    }

    #[test]
    fn heap_check() {
        let m = parse_malcev(shipped("z2_heap.malcev").unwrap()).unwrap();
        let r = run_malcev(&m, MalcevCommand::Check);
        assert_eq!(r.get("associative"), Some("true"));
        assert_eq!(r.get("commutative"), Some("true"));
    }

    #[test]
    fn z3_field_torsion_value() {
        let f = parse_field(shipped("z3_121.field").unwrap()).unwrap();
        let r = run_deform(DeformTarget::Field(&f), Measure::Torsion1Star, false);
        assert_eq!(r.get("value(0, 1, 2)"), Some("(1)"));
        let r = run_field(&f);
        assert_eq!(r.get("induced"), Some("strictly_semipreaffine"));
        assert_eq!(r.get("kappa.A4"), Some("false"));
        assert_eq!(r.get("holonomy_zero"), Some("false"));
        assert_eq!(r.get("curvature0_zero"), Some("true"));
    }

    #[test]
    fn affine_report_on_q_space() {
        let a = parse_action(shipped("q_preaffine.action").unwrap()).unwrap();
        let r = run_affine(None, &a);
        assert_eq!(r.get("space"), Some("strictly_preaffine"));
        assert_eq!(r.get("translation_group.isomorphic_to"), Some("Q"));
        assert_eq!(r.status, Status::Ok);
        let r = run_affine(None, &eps_phi_action());
        assert_eq!(r.status, Status::VerificationFailure);
    }
}
