//! Set `UPDATE_GOLDEN=1` to rewrite the expected outputs.

mod common;

use std::fs;

use common::{golden_dir, run, CASES};

#[test]
fn every_verb_matches_its_golden_file() {
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    let dir = golden_dir();
    let mut mismatched = Vec::new();
    for (name, args) in CASES {
        let path = dir.join(format!("{name}.txt"));
        let got = run(args);
        if update {
            fs::write(&path, &got).unwrap();
            continue;
        }
        let want = fs::read(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        if got != want {
            mismatched.push(*name);
        }
    }
    assert!(mismatched.is_empty(), "golden mismatch: {mismatched:?}");
}

#[test]
fn two_runs_are_byte_identical() {
    for (name, args) in CASES {
        assert_eq!(run(args), run(args), "{name}");
    }
}

#[test]
fn convert_round_trips() {
    for file in ["eps_phi.action", "c8_on_q.action", "z3_regular.action"] {
        let binary = run(&["convert", &format!("catalog:{file}")]);
        let text = String::from_utf8(binary).unwrap();
        let body = text.strip_suffix("exit = 0\n").expect("convert succeeds");
        let tmp = std::env::temp_dir().join(format!("actfield-{}-{file}.binary", std::process::id()));
        fs::write(&tmp, body).unwrap();
        let back = run(&["convert", tmp.to_str().unwrap()]);
        fs::remove_file(&tmp).unwrap();
        assert_eq!(back, run(&["catalog", file]), "{file}");
    }
}

#[test]
fn exit_statuses() {
    let tail = |args: &[&str]| {
        String::from_utf8(run(args))
            .unwrap()
            .lines()
            .last()
            .unwrap()
            .to_string()
    };
    assert_eq!(tail(&["classify", "catalog:eps_phi.action"]), "exit = 0");
    assert_eq!(tail(&["affine", "catalog:eps_phi.action"]), "exit = 1");
    assert_eq!(tail(&["classify", "catalog:no_such"]), "exit = 2");
    assert_eq!(tail(&["malcev", "catalog:eps_phi.action", "check"]), "exit = 2");
    assert_eq!(
        tail(&["deform", "catalog:z3_121.field", "--measure", "nope"]),
        "exit = 2"
    );
    assert_eq!(
        tail(&[
            "mine",
            "preaffine_bijections",
            "--vectors",
            "Z2^3",
            "--target",
            "Q",
            "--budget",
            "10"
        ]),
        "exit = 3"
    );
}

#[test]
fn parse_errors_carry_positions() {
    let tmp = std::env::temp_dir().join(format!("actfield-{}-bad.group", std::process::id()));
    fs::write(&tmp, "kind group\nname X\nelements a b\nidentity q\n").unwrap();
    let out = std::process::Command::new(env!("CARGO_BIN_EXE_actfield"))
        .args(["classify", tmp.to_str().unwrap()])
        .output()
        .unwrap();
    fs::remove_file(&tmp).unwrap();
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line 4, column 10"), "{err}");
}
