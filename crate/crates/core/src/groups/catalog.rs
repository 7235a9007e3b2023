use super::{elementary_abelian, FiniteGroup, GroupError};
use crate::carriers::{all_permutations, FiniteSet};

const C8_LABELS: [&str; 8] = ["e", "a", "a2", "a3", "a4", "a5", "a6", "a7"];

const Q_LABELS: [&str; 8] = ["1", "i", "j", "k", "-1", "-i", "-j", "-k"];

// Rows transcribed from the printed quaternion table (row times column).
const Q_ROWS: [[&str; 8]; 8] = [
    ["1", "i", "j", "k", "-1", "-i", "-j", "-k"],
    ["i", "-1", "k", "-j", "-i", "1", "-k", "j"],
    ["j", "-k", "-1", "i", "-j", "k", "1", "-i"],
    ["k", "j", "-i", "-1", "-k", "-j", "i", "1"],
    ["-1", "-i", "-j", "-k", "1", "i", "j", "k"],
    ["-i", "1", "-k", "j", "i", "-1", "k", "-j"],
    ["-j", "k", "1", "-i", "j", "-k", "-1", "i"],
    ["-k", "-j", "i", "1", "k", "j", "-i", "-1"],
];

pub fn catalog_names() -> Vec<&'static str> {
    let mut names = vec!["C8", "Q"];
    names.extend([
        "Z1", "Z2", "Z3", "Z4", "Z5", "Z6", "Z7", "Z8", "Z9", "Z10", "Z11", "Z12",
    ]);
    names.extend(["Z2^2", "Z2^3", "S3", "D4"]);
    names
}

/// Looks up a built-in group by name.
pub fn catalog(name: &str) -> Result<FiniteGroup, GroupError> {
    match name {
        "C8" => c8(),
        "Q" => quaternion(),
        "S3" => symmetric3(),
        "D4" => dihedral4(),
        "Z2^2" => Ok(elementary_abelian(2, 2)?.base().clone()),
        "Z2^3" => Ok(elementary_abelian(2, 3)?.base().clone()),
        _ => match name.strip_prefix('Z').and_then(|s| s.parse::<usize>().ok()) {
            Some(n) if (1..=12).contains(&n) && name == format!("Z{n}") => cyclic(n),
            _ => Err(GroupError::UnknownCatalogGroup(name.to_string())),
        },
    }
}

/// Every catalog group, in `catalog_names` order.
pub fn builtin_catalog() -> Vec<FiniteGroup> {
    catalog_names()
        .into_iter()
        .map(|n| catalog(n).expect("catalog groups validate"))
        .collect()
}

fn c8() -> Result<FiniteGroup, GroupError> {
    let x = FiniteSet::new("C8", C8_LABELS)?;
    FiniteGroup::from_fn(x, |g, h| (g + h) % 8)
}

fn quaternion() -> Result<FiniteGroup, GroupError> {
    let x = FiniteSet::new("Q", Q_LABELS)?;
    let rows: Vec<Vec<&str>> = Q_ROWS.iter().map(|r| r.to_vec()).collect();
    FiniteGroup::from_label_rows(x, &rows)
}

/// `Z_n` with labels `0 … n-1`.
pub(crate) fn cyclic(n: usize) -> Result<FiniteGroup, GroupError> {
    let x = FiniteSet::indexed(format!("Z{n}"), n)?;
    FiniteGroup::from_fn(x, |g, h| (g + h) % n)
}

fn one_line(p: &[usize]) -> String {
    p.iter().map(|i| (i + 1).to_string()).collect()
}

// A permutation group given by its one-line members; g□h = g∘h.
fn permutation_group(name: &str, members: Vec<Vec<usize>>) -> Result<FiniteGroup, GroupError> {
    let labels: Vec<String> = members.iter().map(|p| one_line(p)).collect();
    let x = FiniteSet::new(name, labels)?;
    let index = |p: &[usize]| members.iter().position(|m| m == p).expect("closed");
    let rows = members
        .iter()
        .map(|g| {
            members
                .iter()
                .map(|h| index(&h.iter().map(|&i| g[i]).collect::<Vec<_>>()))
                .collect()
        })
        .collect();
    FiniteGroup::validate(x, rows)
}

fn symmetric3() -> Result<FiniteGroup, GroupError> {
    let members = all_permutations(3).into_iter().map(|p| p.images().to_vec()).collect();
    permutation_group("S3", members)
}

fn dihedral4() -> Result<FiniteGroup, GroupError> {
    // symmetries of a square with vertices 1..4 in cyclic order
    let members: Vec<Vec<usize>> = all_permutations(4)
        .into_iter()
        .map(|p| p.images().to_vec())
        .filter(|p| {
            (0..4).all(|i| {
                let d = (p[(i + 1) % 4] + 4 - p[i]) % 4;
                d == 1 || d == 3
            })
        })
        .collect();
    permutation_group("D4", members)
}
