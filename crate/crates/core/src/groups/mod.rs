//! Finite groups as validated Cayley tables.
//!
//! `table[g][h]` is `g□h` (row times column), the orientation of the
//! printed C8 and Q tables.

mod catalog;
mod iso;
mod vector;

pub use catalog::{builtin_catalog, catalog, catalog_names};
pub use iso::{is_isomorphic, ISOMORPHISM_CAP};
pub use vector::{elementary_abelian, VectorGroup};

use thiserror::Error;

use crate::carriers::{CarrierError, FiniteSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error(transparent)]
    Carrier(#[from] CarrierError),
    #[error("table has {found} rows, expected {expected}")]
    RowCount { expected: usize, found: usize },
    #[error("row `{row}` has {found} entries, expected {expected}")]
    RowLength { row: String, expected: usize, found: usize },
    #[error("table entry {entry} is out of range")]
    EntryOutOfRange { entry: usize },
    #[error("not a Latin square: {g}□{h1} = {g}□{h2} = {value}")]
    LatinRow {
        g: String,
        h1: String,
        h2: String,
        value: String,
    },
    #[error("not a Latin square: {h1}□{g} = {h2}□{g} = {value}")]
    LatinColumn {
        g: String,
        h1: String,
        h2: String,
        value: String,
    },
    #[error("no two-sided identity element")]
    NoIdentity,
    #[error("declared identity `{declared}` is not the identity (found `{found}`)")]
    WrongIdentity { declared: String, found: String },
    #[error("element `{0}` has no two-sided inverse")]
    NoInverse(String),
    #[error("not associative: ({g}□{h})□{k} ≠ {g}□({h}□{k})")]
    NotAssociative { g: String, h: String, k: String },
    #[error("group order {order} exceeds the brute-force cap {cap}")]
    OrderCap { order: usize, cap: usize },
    #[error("{0} is not prime")]
    NotPrime(usize),
    #[error("{p}^{n} exceeds the carrier cap {cap}")]
    VectorCap { p: usize, n: usize, cap: usize },
    #[error("group `{0}` is not elementary abelian")]
    NotElementaryAbelian(String),
    #[error("no catalog group named `{0}`")]
    UnknownCatalogGroup(String),
}

/// A finite group given by its full multiplication table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    carrier: FiniteSet,
    table: Vec<usize>,
    identity: usize,
    inverses: Vec<usize>,
}

impl FiniteGroup {
    /// Validates a square table. Axioms are checked in the order: entry
    /// range, Latin rows and columns, identity, inverses, associativity; the
    /// first failure is reported with a witness.
    pub fn validate(carrier: FiniteSet, rows: Vec<Vec<usize>>) -> Result<Self, GroupError> {
        let n = carrier.len();
        if rows.len() != n {
            return Err(GroupError::RowCount {
                expected: n,
                found: rows.len(),
            });
        }
        let mut table = Vec::with_capacity(n * n);
        for (g, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(GroupError::RowLength {
                    row: carrier.label(g).to_string(),
                    expected: n,
                    found: row.len(),
                });
            }
            if let Some(&entry) = row.iter().find(|&&v| v >= n) {
                return Err(GroupError::EntryOutOfRange { entry });
            }
            table.extend_from_slice(row);
        }
        let at = |g: usize, h: usize| table[g * n + h];
        let name = |i: usize| carrier.label(i).to_string();

        for g in 0..n {
            let mut seen_row = vec![usize::MAX; n];
            let mut seen_col = vec![usize::MAX; n];
            for h in 0..n {
                let v = at(g, h);
                if seen_row[v] != usize::MAX {
                    return Err(GroupError::LatinRow {
                        g: name(g),
                        h1: name(seen_row[v]),
                        h2: name(h),
                        value: name(v),
                    });
                }
                seen_row[v] = h;
                let w = at(h, g);
                if seen_col[w] != usize::MAX {
                    return Err(GroupError::LatinColumn {
                        g: name(g),
                        h1: name(seen_col[w]),
                        h2: name(h),
                        value: name(w),
                    });
                }
                seen_col[w] = h;
            }
        }

        let identity = (0..n)
            .find(|&e| (0..n).all(|g| at(e, g) == g && at(g, e) == g))
            .ok_or(GroupError::NoIdentity)?;

        let mut inverses = Vec::with_capacity(n);
        for g in 0..n {
            let inv = (0..n)
                .find(|&h| at(g, h) == identity && at(h, g) == identity)
                .ok_or_else(|| GroupError::NoInverse(name(g)))?;
            inverses.push(inv);
        }

        for g in 0..n {
            for h in 0..n {
                let gh = at(g, h);
                for k in 0..n {
                    if at(gh, k) != at(g, at(h, k)) {
                        return Err(GroupError::NotAssociative {
                            g: name(g),
                            h: name(h),
                            k: name(k),
                        });
                    }
                }
            }
        }

        Ok(FiniteGroup {
            carrier,
            table,
            identity,
            inverses,
        })
    }

    /// Builds a group from a product function on indices.
    pub fn from_fn(carrier: FiniteSet, mul: impl Fn(usize, usize) -> usize) -> Result<Self, GroupError> {
        let n = carrier.len();
        let rows = (0..n).map(|g| (0..n).map(|h| mul(g, h)).collect()).collect();
        Self::validate(carrier, rows)
    }

    /// Builds a group from rows of labels.
    pub fn from_label_rows<S: AsRef<str>>(carrier: FiniteSet, rows: &[Vec<S>]) -> Result<Self, GroupError> {
        let mut out = Vec::with_capacity(rows.len());
        for row in rows {
            let mut r = Vec::with_capacity(row.len());
            for label in row {
                r.push(carrier.lookup(label.as_ref())?);
            }
            out.push(r);
        }
        Self::validate(carrier, out)
    }

    pub fn carrier(&self) -> &FiniteSet {
        &self.carrier
    }

    pub fn name(&self) -> &str {
        self.carrier.name()
    }

    pub fn order(&self) -> usize {
        self.carrier.len()
    }

    pub fn label(&self, g: usize) -> &str {
        self.carrier.label(g)
    }

    #[inline]
    pub fn mul(&self, g: usize, h: usize) -> usize {
        self.table[g * self.order() + h]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn inverse(&self, g: usize) -> usize {
        self.inverses[g]
    }

    pub fn inverses(&self) -> &[usize] {
        &self.inverses
    }

    pub fn row(&self, g: usize) -> &[usize] {
        let n = self.order();
        &self.table[g * n..(g + 1) * n]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.order()).map(|g| self.row(g).to_vec()).collect()
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|g| (g + 1..n).all(|h| self.mul(g, h) == self.mul(h, g)))
    }

    /// Smallest `k ≥ 1` with `g^k = e`.
    pub fn element_order(&self, g: usize) -> usize {
        let mut k = 1;
        let mut x = g;
        while x != self.identity {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    pub fn element_orders(&self) -> Vec<usize> {
        (0..self.order()).map(|g| self.element_order(g)).collect()
    }

    /// Sorted multiset of element orders.
    pub fn order_profile(&self) -> Vec<usize> {
        let mut p = self.element_orders();
        p.sort_unstable();
        p
    }

    pub fn power(&self, g: usize, k: usize) -> usize {
        (0..k).fold(self.identity, |acc, _| self.mul(acc, g))
    }

    /// The group with `g□'h = h□g` on the same carrier.
    pub fn opposite(&self) -> FiniteGroup {
        let n = self.order();
        let mut table = vec![0; n * n];
        for g in 0..n {
            for h in 0..n {
                table[g * n + h] = self.mul(h, g);
            }
        }
        FiniteGroup {
            carrier: self.carrier.renamed(format!("{}^op", self.name())),
            table,
            identity: self.identity,
            inverses: self.inverses.clone(),
        }
    }

    pub fn renamed(&self, name: impl Into<String>) -> FiniteGroup {
        FiniteGroup {
            carrier: self.carrier.renamed(name),
            ..self.clone()
        }
    }

    /// True iff the table equals `other`'s entry by entry (labels ignored).
    pub fn same_table(&self, other: &FiniteGroup) -> bool {
        self.table == other.table
    }

    /// `f` is a homomorphism `self → other` given as an index table.
    pub fn is_homomorphism(&self, other: &FiniteGroup, f: &[usize]) -> bool {
        let n = self.order();
        f.len() == n && (0..n).all(|g| (0..n).all(|h| f[self.mul(g, h)] == other.mul(f[g], f[h])))
    }
}

pub fn is_abelian(g: &FiniteGroup) -> bool {
    g.is_abelian()
}

pub fn opposite_group(g: &FiniteGroup) -> FiniteGroup {
    g.opposite()
}

pub fn validate_group(carrier: FiniteSet, rows: Vec<Vec<usize>>) -> Result<FiniteGroup, GroupError> {
    FiniteGroup::validate(carrier, rows)
}
