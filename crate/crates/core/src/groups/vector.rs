use super::{FiniteGroup, GroupError};
use crate::carriers::{FiniteSet, DEFAULT_CARRIER_CAP};

/// An elementary abelian `p`-group, i.e. the additive group of an
/// `n`-dimensional vector space over the `p`-element field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorGroup {
    base: FiniteGroup,
    prime: usize,
    dimension: usize,
    coords: Vec<Vec<usize>>,
}

fn is_prime(p: usize) -> bool {
    p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

fn digits(mut i: usize, p: usize, n: usize) -> Vec<usize> {
    let mut out = vec![0; n];
    for slot in out.iter_mut().rev() {
        *slot = i % p;
        i /= p;
    }
    out
}

/// `(Z_p)^n` with componentwise addition. Element `i` has the base-`p`
/// digits of `i` as components, so index 0 is the zero vector.
pub fn elementary_abelian(p: usize, n: usize) -> Result<VectorGroup, GroupError> {
    if !is_prime(p) {
        return Err(GroupError::NotPrime(p));
    }
    let order = p
        .checked_pow(n as u32)
        .filter(|&o| o <= DEFAULT_CARRIER_CAP)
        .ok_or(GroupError::VectorCap {
            p,
            n,
            cap: DEFAULT_CARRIER_CAP,
        })?;
    let labels = (0..order).map(|i| {
        let d = digits(i, p, n);
        if p < 10 {
            d.iter().map(|c| c.to_string()).collect::<String>()
        } else {
            d.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(".")
        }
    });
    let name = if n == 1 { format!("Z{p}") } else { format!("Z{p}^{n}") };
    let carrier = FiniteSet::new(name, labels)?;
    let base = FiniteGroup::from_fn(carrier, |g, h| {
        let (a, b) = (digits(g, p, n), digits(h, p, n));
        a.iter().zip(&b).fold(0, |acc, (x, y)| acc * p + (x + y) % p)
    })?;
    VectorGroup::certify(base)
}

impl VectorGroup {
    /// Certifies that `group` is elementary abelian and fixes coordinates
    /// from a greedy basis (smallest index outside the current span).
    pub fn certify(group: FiniteGroup) -> Result<Self, GroupError> {
        let not_ea = || GroupError::NotElementaryAbelian(group.name().to_string());
        if !group.is_abelian() {
            return Err(not_ea());
        }
        let size = group.order();
        if size == 1 {
            let coords = vec![vec![]];
            return Ok(VectorGroup {
                base: group,
                prime: 1,
                dimension: 0,
                coords,
            });
        }
        let e = group.identity();
        let p = group.element_order((0..size).find(|&g| g != e).unwrap());
        if !is_prime(p) || (0..size).any(|g| g != e && group.element_order(g) != p) {
            return Err(not_ea());
        }
        // span[i] holds the coordinate vector of element i once reached
        let mut basis: Vec<usize> = Vec::new();
        let mut span: Vec<Option<Vec<usize>>> = vec![None; size];
        span[e] = Some(vec![]);
        while let Some(b) = (0..size).find(|&g| span[g].is_none()) {
            let mut next = vec![None; size];
            for (g, c) in span.iter().enumerate() {
                let Some(c) = c else { continue };
                let mut x = g;
                for k in 0..p {
                    let mut cc = c.clone();
                    cc.push(k);
                    next[x] = Some(cc);
                    x = group.mul(x, b);
                }
            }
            basis.push(b);
            span = next;
        }
        let dimension = basis.len();
        if p.pow(dimension as u32) != size {
            return Err(not_ea());
        }
        // reversed so the first basis vector is the last component
        let coords = span
            .into_iter()
            .map(|c| {
                let mut c = c.expect("spanned");
                c.reverse();
                c
            })
            .collect();
        Ok(VectorGroup {
            base: group,
            prime: p,
            dimension,
            coords,
        })
    }

    pub fn base(&self) -> &FiniteGroup {
        &self.base
    }

    pub fn prime(&self) -> usize {
        self.prime
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn order(&self) -> usize {
        self.base.order()
    }

    pub fn zero(&self) -> usize {
        self.base.identity()
    }

    #[inline]
    pub fn add(&self, u: usize, v: usize) -> usize {
        self.base.mul(u, v)
    }

    #[inline]
    pub fn neg(&self, u: usize) -> usize {
        self.base.inverse(u)
    }

    pub fn sub(&self, u: usize, v: usize) -> usize {
        self.add(u, self.neg(v))
    }

    pub fn components(&self, v: usize) -> &[usize] {
        &self.coords[v]
    }

    pub fn from_components(&self, c: &[usize]) -> Option<usize> {
        self.coords.iter().position(|x| x == c)
    }

    /// Renders a vector as its component tuple, e.g. `(1, 0, 1)`.
    pub fn render(&self, v: usize) -> String {
        let parts: Vec<String> = self.coords[v].iter().map(|c| c.to_string()).collect();
        format!("({})", parts.join(", "))
    }

    /// All automorphisms of the group as index tables, identity first,
    /// remaining ones in lexicographic order of their tables.
    pub fn automorphisms(&self) -> Vec<Vec<usize>> {
        let n = self.dimension;
        let p = self.prime;
        if n == 0 {
            return vec![vec![0]];
        }
        let cells = n * n;
        let total = p.pow(cells as u32);
        let mut out = Vec::new();
        for code in 0..total {
            let m = digits(code, p, cells);
            let image: Vec<usize> = (0..self.order())
                .map(|v| {
                    let c = &self.coords[v];
                    let w: Vec<usize> = (0..n)
                        .map(|r| (0..n).map(|k| m[r * n + k] * c[k]).sum::<usize>() % p)
                        .collect();
                    self.from_components(&w).expect("in range")
                })
                .collect();
            let mut seen = vec![false; image.len()];
            if image.iter().all(|&y| !std::mem::replace(&mut seen[y], true)) {
                out.push(image);
            }
        }
        out.sort();
        out
    }
}
