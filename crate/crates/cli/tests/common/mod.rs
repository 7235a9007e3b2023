use std::path::PathBuf;
use std::process::Command;

/// One CLI invocation per verb and shipped example, named after its golden file.
pub const CASES: &[(&str, &[&str])] = &[
    ("catalog_list", &["catalog"]),
    ("catalog_q", &["catalog", "Q.group"]),
    ("classify_eps_phi", &["classify", "catalog:eps_phi.action"]),
    (
        "classify_eps_phi_contra",
        &["classify", "catalog:eps_phi.action", "--variance", "contravariant"],
    ),
    ("classify_c8_on_q", &["classify", "catalog:c8_on_q.action"]),
    ("classify_z3_regular", &["classify", "catalog:z3_regular.action"]),
    ("affine_z2cube", &["affine", "catalog:z2cube_regular.action"]),
    ("affine_q", &["affine", "catalog:q_preaffine.action"]),
    ("affine_c8_on_q", &["affine", "catalog:c8_on_q.action"]),
    ("field_z3_121", &["field", "catalog:z3_121.field"]),
    (
        "deform_torsion1_q",
        &["deform", "catalog:q_preaffine.action", "--measure", "torsion1"],
    ),
    (
        "deform_torsion0_z3",
        &["deform", "catalog:z3_regular.action", "--measure", "torsion0"],
    ),
    (
        "deform_torsion1_star",
        &["deform", "catalog:z3_121.field", "--measure", "torsion1_star"],
    ),
    (
        "deform_torsion0_star",
        &["deform", "catalog:z3_121.field", "--measure", "torsion0_star"],
    ),
    (
        "deform_curvature0",
        &["deform", "catalog:z3_121.field", "--measure", "curvature0"],
    ),
    (
        "deform_curvature1",
        &["deform", "catalog:z3_121.field", "--measure", "curvature1"],
    ),
    (
        "deform_dstar",
        &["deform", "catalog:z3_121.field", "--measure", "dstar"],
    ),
    (
        "deform_holonomy",
        &["deform", "catalog:z3_121.field", "--measure", "holonomy"],
    ),
    ("malcev_check", &["malcev", "catalog:z2_heap.malcev", "check"]),
    ("malcev_closure", &["malcev", "catalog:z2_heap.malcev", "closure"]),
    (
        "malcev_recover",
        &["malcev", "catalog:z2_heap.malcev", "recover", "--base", "1"],
    ),
    ("malcev_pointed", &["malcev", "catalog:z2_heap.malcev", "pointed"]),
    ("mine_malcev_2", &["mine", "malcev", "--n", "2", "--keep", "4"]),
    (
        "mine_malcev_3_nonassoc",
        &[
            "mine",
            "malcev",
            "--n",
            "3",
            "--filter",
            "non_associative",
            "--budget",
            "500",
        ],
    ),
    (
        "mine_q_bijections",
        &[
            "mine",
            "preaffine_bijections",
            "--vectors",
            "Z2^3",
            "--target",
            "Q",
            "--budget",
            "50",
        ],
    ),
    (
        "mine_z3_fields",
        &[
            "mine",
            "multiaffine_automorphism_fields",
            "--vectors",
            "Z3",
            "--filter",
            "strictly_semipreaffine",
        ],
    ),
    (
        "mine_q_curved",
        &[
            "mine",
            "premonoidal_fields",
            "--vectors",
            "Z2^3",
            "--target",
            "Q",
            "--filter",
            "nonzero_curvature",
            "--limit",
            "1",
            "--keep",
            "1",
        ],
    ),
    ("convert_eps_phi", &["convert", "catalog:eps_phi.action"]),
    ("convert_c8_on_q", &["convert", "catalog:c8_on_q.action"]),
];

pub fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join("golden")
}

/// Stdout followed by an `exit = <code>` line.
pub fn run(args: &[&str]) -> Vec<u8> {
    let out = Command::new(env!("CARGO_BIN_EXE_actfield"))
        .args(args)
        .output()
        .expect("binary runs");
    let mut bytes = out.stdout;
    bytes.extend_from_slice(format!("exit = {}\n", out.status.code().unwrap_or(-1)).as_bytes());
    bytes
}
