use super::{FiniteGroup, GroupError};

/// Largest order accepted by the brute-force isomorphism search.
pub const ISOMORPHISM_CAP: usize = 12;

/// Searches for an isomorphism `g → h`.
///
/// Returns the lexicographically least witness (as an image table indexed by
/// the elements of `g`) or `None`. Groups of different orders are rejected
/// without search. Candidates are pruned by element order and by checking
/// every product whose factors and result are already assigned.
pub fn is_isomorphic(g: &FiniteGroup, h: &FiniteGroup) -> Result<Option<Vec<usize>>, GroupError> {
    for grp in [g, h] {
        if grp.order() > ISOMORPHISM_CAP {
            return Err(GroupError::OrderCap {
                order: grp.order(),
                cap: ISOMORPHISM_CAP,
            });
        }
    }
    if g.order() != h.order() {
        return Ok(None);
    }
    if g.order_profile() != h.order_profile() || g.is_abelian() != h.is_abelian() {
        return Ok(None);
    }
    let n = g.order();
    let go = g.element_orders();
    let ho = h.element_orders();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    map[g.identity()] = h.identity();
    used[h.identity()] = true;
    if search(g, h, &go, &ho, 0, &mut map, &mut used) {
        Ok(Some(map))
    } else {
        Ok(None)
    }
}

fn search(
    g: &FiniteGroup,
    h: &FiniteGroup,
    go: &[usize],
    ho: &[usize],
    next: usize,
    map: &mut Vec<usize>,
    used: &mut Vec<bool>,
) -> bool {
    let n = g.order();
    if next == n {
        return true;
    }
    if map[next] != usize::MAX {
        return search(g, h, go, ho, next + 1, map, used);
    }
    for cand in 0..n {
        if used[cand] || ho[cand] != go[next] {
            continue;
        }
        map[next] = cand;
        used[cand] = true;
        if consistent(g, h, next, map) && search(g, h, go, ho, next + 1, map, used) {
            return true;
        }
        map[next] = usize::MAX;
        used[cand] = false;
    }
    false
}

// Every product involving `a` whose factors and result are mapped must be
// preserved.
fn consistent(g: &FiniteGroup, h: &FiniteGroup, a: usize, map: &[usize]) -> bool {
    let n = g.order();
    for b in 0..n {
        if map[b] == usize::MAX {
            continue;
        }
        for (x, y) in [(a, b), (b, a)] {
            let p = g.mul(x, y);
            if map[p] != usize::MAX && map[p] != h.mul(map[x], map[y]) {
                return false;
            }
        }
    }
    true
}
