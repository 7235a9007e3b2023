//! Exhaustive search for ternary tables satisfying a set of identities.
//!
//! A1 and A2 are imposed by pre-filling the entries with `y = z` or `x = y`;
//! the remaining entries are assigned in table order with every other
//! identity re-checked on each partial table, so structures arrive in
//! lexicographic order of their tables.

use std::ops::ControlFlow;

use super::{Identity, MalcevError, MalcevStructure};
use crate::carriers::FiniteSet;

/// Largest carrier accepted by [`enumerate_malcev`].
pub const ENUMERATION_CAP: usize = 4;

const UNSET: usize = usize::MAX;

struct Search<'a> {
    n: usize,
    carrier: FiniteSet,
    table: Vec<usize>,
    free: Vec<usize>,
    checks: Vec<Identity>,
    visit: &'a mut dyn FnMut(&MalcevStructure) -> ControlFlow<()>,
}

impl Search<'_> {
    fn consistent(&self) -> bool {
        let n = self.n;
        let t = &self.table;
        let k = |x: usize, y: usize, z: usize| {
            let w = t[(x * n + y) * n + z];
            (w != UNSET).then_some(w)
        };
        self.checks
            .iter()
            .all(|&id| super::search(n, id.arity(), |v| matches!(id.sides(&k, v), Some((l, r)) if l != r)).is_none())
    }

    fn run(&mut self, depth: usize) -> ControlFlow<()> {
        if depth == self.free.len() {
            let m = MalcevStructure {
                carrier: self.carrier.clone(),
                table: self.table.clone(),
            };
            return (self.visit)(&m);
        }
        let slot = self.free[depth];
        for w in 0..self.n {
            self.table[slot] = w;
            if self.checks.is_empty() || self.consistent() {
                self.run(depth + 1)?;
            }
        }
        self.table[slot] = UNSET;
        ControlFlow::Continue(())
    }
}

fn prefill(n: usize, constraints: &[Identity]) -> (Vec<usize>, Vec<usize>) {
    let a1 = constraints.contains(&Identity::A1);
    let a2 = constraints.contains(&Identity::A2);
    let mut table = vec![UNSET; n * n * n];
    let mut free = Vec::new();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let i = (x * n + y) * n + z;
                if a1 && y == z {
                    table[i] = x;
                } else if a2 && x == y {
                    table[i] = z;
                } else {
                    free.push(i);
                }
            }
        }
    }
    (table, free)
}

/// Visits every table on `n` points satisfying `constraints`, in
/// lexicographic order, until the visitor breaks.
pub fn enumerate_malcev(
    n: usize,
    constraints: &[Identity],
    visit: &mut dyn FnMut(&MalcevStructure) -> ControlFlow<()>,
) -> Result<(), MalcevError> {
    if n == 0 || n > ENUMERATION_CAP {
        return Err(MalcevError::SizeCap {
            n,
            cap: ENUMERATION_CAP,
        });
    }
    let carrier = FiniteSet::indexed("X", n)?;
    let (table, free) = prefill(n, constraints);
    let mut checks: Vec<Identity> = constraints
        .iter()
        .copied()
        .filter(|i| !matches!(i, Identity::A1 | Identity::A2))
        .collect();
    checks.sort();
    checks.dedup();
    let mut s = Search {
        n,
        carrier,
        table,
        free,
        checks,
        visit,
    };
    let _ = s.run(0);
    Ok(())
}

/// Number of tables on `n` points satisfying `constraints`. When only A1
/// and A2 are requested the count is `n^free` without search.
pub fn count_malcev(n: usize, constraints: &[Identity]) -> Result<u64, MalcevError> {
    if n == 0 || n > ENUMERATION_CAP {
        return Err(MalcevError::SizeCap {
            n,
            cap: ENUMERATION_CAP,
        });
    }
    if constraints.iter().all(|i| matches!(i, Identity::A1 | Identity::A2)) {
        let (_, free) = prefill(n, constraints);
        return Ok((n as u64).pow(free.len() as u32));
    }
    let mut count = 0u64;
    enumerate_malcev(n, constraints, &mut |_| {
        count += 1;
        ControlFlow::Continue(())
    })?;
    Ok(count)
}
