//! Ternary Malcev operations `[x, y, z]`: identity checks, translations
//! `[-, a, b]` and their sums, pointed sums, and the group `(X, ◊_e)`
//! recovered from an associative operation.

mod enumerate;

pub use enumerate::{count_malcev, enumerate_malcev, ENUMERATION_CAP};

use std::collections::{BTreeMap, HashMap, VecDeque};

use thiserror::Error;

use crate::actions::{Action, ActionError};
use crate::affine::PreaffineSpace;
use crate::carriers::{CarrierError, Endofunction, FiniteSet};
use crate::groups::{FiniteGroup, GroupError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MalcevError {
    #[error(transparent)]
    Carrier(#[from] CarrierError),
    #[error(transparent)]
    Action(#[from] ActionError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("table has {found} entries, expected {expected}")]
    TableSize { expected: usize, found: usize },
    #[error("entry {index} is {value}, outside the carrier")]
    EntryOutOfRange { index: usize, value: usize },
    #[error("{translation} is not a pointed translation at {base}")]
    NotPointed { translation: String, base: String },
    #[error("carrier of size {n} exceeds the cap {cap}")]
    SizeCap { n: usize, cap: usize },
    #[error("iteration closure exceeds {cap} maps")]
    ClosureCap { cap: usize },
}

/// The identities a ternary operation may satisfy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Identity {
    /// `[x,y,y] = x`
    A1,
    /// `[x,x,y] = y`
    A2,
    /// `[p,x,[x,y,z]] = [p,y,z]`
    A3,
    /// `[[p,x,y],y,z] = [p,x,z]`
    A4,
    /// `[x,y,[y,x,z]] = z`
    K3,
    /// `[[y,x,z],z,x] = y`
    K4,
    /// `[x,y,z] = [z,y,x]`
    Commutative,
    /// `[[x,y,z],r,t] = [x,y,[z,r,t]]`
    Associative,
}

impl Identity {
    pub const ALL: [Identity; 8] = [
        Identity::A1,
        Identity::A2,
        Identity::A3,
        Identity::A4,
        Identity::K3,
        Identity::K4,
        Identity::Commutative,
        Identity::Associative,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Identity::A1 => "A1",
            Identity::A2 => "A2",
            Identity::A3 => "A3",
            Identity::A4 => "A4",
            Identity::K3 => "K3",
            Identity::K4 => "K4",
            Identity::Commutative => "commutative",
            Identity::Associative => "associative",
        }
    }

    pub fn parse(s: &str) -> Option<Identity> {
        Identity::ALL.into_iter().find(|i| i.name().eq_ignore_ascii_case(s))
    }

    /// Number of universally quantified variables.
    pub fn arity(self) -> usize {
        match self {
            Identity::A1 | Identity::A2 => 2,
            Identity::K3 | Identity::K4 | Identity::Commutative => 3,
            Identity::A3 | Identity::A4 => 4,
            Identity::Associative => 5,
        }
    }

    /// Variable names in quantifier order.
    pub fn variables(self) -> &'static [&'static str] {
        match self {
            Identity::A1 => &["x", "y"],
            Identity::A2 => &["x", "y"],
            Identity::A3 | Identity::A4 => &["p", "x", "y", "z"],
            Identity::K3 | Identity::K4 | Identity::Commutative => &["x", "y", "z"],
            Identity::Associative => &["x", "y", "z", "r", "t"],
        }
    }

    /// Both sides at `v`, or `None` if some needed entry is unknown.
    #[inline]
    pub(crate) fn sides(
        self,
        k: &impl Fn(usize, usize, usize) -> Option<usize>,
        v: &[usize],
    ) -> Option<(usize, usize)> {
        Some(match self {
            Identity::A1 => (k(v[0], v[1], v[1])?, v[0]),
            Identity::A2 => (k(v[0], v[0], v[1])?, v[1]),
            Identity::A3 => {
                let (p, x, y, z) = (v[0], v[1], v[2], v[3]);
                (k(p, x, k(x, y, z)?)?, k(p, y, z)?)
            }
            Identity::A4 => {
                let (p, x, y, z) = (v[0], v[1], v[2], v[3]);
                (k(k(p, x, y)?, y, z)?, k(p, x, z)?)
            }
            Identity::K3 => {
                let (x, y, z) = (v[0], v[1], v[2]);
                (k(x, y, k(y, x, z)?)?, z)
            }
            Identity::K4 => {
                let (x, y, z) = (v[0], v[1], v[2]);
                (k(k(y, x, z)?, z, x)?, y)
            }
            Identity::Commutative => (k(v[0], v[1], v[2])?, k(v[2], v[1], v[0])?),
            Identity::Associative => {
                let (x, y, z, r, t) = (v[0], v[1], v[2], v[3], v[4]);
                (k(k(x, y, z)?, r, t)?, k(x, y, k(z, r, t)?)?)
            }
        })
    }
}

/// Outcome of a universally quantified check; the witness is the
/// lexicographically least failing assignment in quantifier order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub holds: bool,
    pub witness: Option<Vec<usize>>,
}

impl Check {
    fn from_witness(w: Option<Vec<usize>>) -> Check {
        Check {
            holds: w.is_none(),
            witness: w,
        }
    }

    pub fn render(&self, carrier: &FiniteSet) -> String {
        match &self.witness {
            None => "none".to_string(),
            Some(w) => carrier.render_tuple(w),
        }
    }
}

/// Least `v ∈ [0,n)^arity` (lexicographic) with `bad(v)`.
pub(crate) fn search(n: usize, arity: usize, mut bad: impl FnMut(&[usize]) -> bool) -> Option<Vec<usize>> {
    let mut v = vec![0; arity];
    if n == 0 {
        return None;
    }
    loop {
        if bad(&v) {
            return Some(v);
        }
        let mut i = arity;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            v[i] += 1;
            if v[i] < n {
                break;
            }
            v[i] = 0;
        }
    }
}

/// A ternary operation table on a finite carrier.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MalcevStructure {
    carrier: FiniteSet,
    table: Vec<usize>,
}

impl MalcevStructure {
    /// `table[(x·n + y)·n + z] = [x, y, z]`.
    pub fn new(carrier: FiniteSet, table: Vec<usize>) -> Result<Self, MalcevError> {
        let n = carrier.len();
        let expected = n * n * n;
        if table.len() != expected {
            return Err(MalcevError::TableSize {
                expected,
                found: table.len(),
            });
        }
        if let Some((index, &value)) = table.iter().enumerate().find(|(_, &w)| w >= n) {
            return Err(MalcevError::EntryOutOfRange { index, value });
        }
        Ok(MalcevStructure { carrier, table })
    }

    pub fn from_fn(carrier: FiniteSet, f: impl Fn(usize, usize, usize) -> usize) -> Result<Self, MalcevError> {
        let n = carrier.len();
        let mut table = Vec::with_capacity(n * n * n);
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    table.push(f(x, y, z));
                }
            }
        }
        MalcevStructure::new(carrier, table)
    }

    /// The heap `[x, y, z] = x □ y⁻¹ □ z`.
    pub fn from_group(g: &FiniteGroup) -> MalcevStructure {
        MalcevStructure::from_fn(g.carrier().clone(), |x, y, z| g.mul(g.mul(x, g.inverse(y)), z))
            .expect("group products stay in the carrier")
    }

    /// `[x, y, z] = x + overline(y → z)`.
    pub fn from_preaffine(s: &PreaffineSpace) -> MalcevStructure {
        MalcevStructure::from_fn(s.carrier().clone(), |x, y, z| s.translate(x, s.arrow(y, z)))
            .expect("translations stay in the carrier")
    }

    /// `[x, y, z] = α(y → z)(x)` for a regular action `α`, e.g. the single
    /// action induced by a field.
    pub fn from_regular_action(a: &Action) -> Result<MalcevStructure, MalcevError> {
        let div = a.division_table()?;
        MalcevStructure::from_fn(a.carrier().clone(), |x, y, z| a.apply(div[y][z], x))
    }

    pub fn carrier(&self) -> &FiniteSet {
        &self.carrier
    }

    pub fn size(&self) -> usize {
        self.carrier.len()
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    /// `[x, y, z]`.
    #[inline]
    pub fn get(&self, x: usize, y: usize, z: usize) -> usize {
        let n = self.size();
        self.table[(x * n + y) * n + z]
    }

    pub fn check(&self, id: Identity) -> Check {
        let k = |x, y, z| Some(self.get(x, y, z));
        Check::from_witness(search(self.size(), id.arity(), |v| {
            let (l, r) = id.sides(&k, v).expect("total table");
            l != r
        }))
    }

    pub fn holds(&self, id: Identity) -> bool {
        self.check(id).holds
    }

    /// A1 ∧ A2.
    pub fn is_malcev(&self) -> bool {
        self.holds(Identity::A1) && self.holds(Identity::A2)
    }

    pub fn check_identities(&self) -> IdentityReport {
        let checks: Vec<(Identity, Check)> = Identity::ALL.iter().map(|&i| (i, self.check(i))).collect();
        IdentityReport::new(checks)
    }

    /// `[y, x, z] = [z, x, y]`, the torsion-free law, witness `(x, y, z)`.
    pub fn swap_symmetric(&self) -> Check {
        Check::from_witness(search(self.size(), 3, |v| {
            let (x, y, z) = (v[0], v[1], v[2]);
            self.get(y, x, z) != self.get(z, x, y)
        }))
    }

    /// `[-, a, b]`.
    pub fn translation(&self, a: usize, b: usize) -> MalcevTranslation {
        let map = Endofunction::from_fn(self.size(), |x| self.get(x, a, b)).expect("entries in range");
        MalcevTranslation { a, b, map }
    }

    /// Every pair `(a, b)` grouped by the map `[-, a, b]`; classes are
    /// ordered by their least representative.
    pub fn translation_classes(&self) -> TranslationClasses {
        let n = self.size();
        let mut index: HashMap<Endofunction, usize> = HashMap::new();
        let mut maps = Vec::new();
        let mut reps: Vec<Vec<(usize, usize)>> = Vec::new();
        let mut class_of = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                let t = self.translation(a, b);
                let c = *index.entry(t.map.clone()).or_insert_with(|| {
                    maps.push(t.map.clone());
                    reps.push(Vec::new());
                    maps.len() - 1
                });
                reps[c].push((a, b));
                class_of[a * n + b] = c;
            }
        }
        TranslationClasses {
            n,
            maps,
            reps,
            class_of,
        }
    }

    /// `[-, a′, b′] = [-, a, b] ⇔ b′ = [a′, a, b]`, witness `(a, b, a′, b′)`.
    pub fn representative_criterion(&self) -> Check {
        let n = self.size();
        let maps: Vec<Endofunction> = (0..n * n).map(|i| self.translation(i / n, i % n).map).collect();
        Check::from_witness(search(n, 4, |v| {
            let (a, b, a2, b2) = (v[0], v[1], v[2], v[3]);
            let equal = maps[a * n + b] == maps[a2 * n + b2];
            equal != (b2 == self.get(a2, a, b))
        }))
    }

    /// The sum `t1 + t2 = x ↦ [[x, a, b], c, d]`. Translations compare as
    /// maps, so the sum never depends on the representatives chosen.
    pub fn sum(&self, t1: &MalcevTranslation, t2: &MalcevTranslation) -> TranslationSum {
        let map = t1.map.seq_unchecked(&t2.map);
        let translation =
            search(self.size(), 2, |v| self.translation(v[0], v[1]).map == map).map(|v| self.translation(v[0], v[1]));
        TranslationSum { map, translation }
    }

    /// Whether `+` on `𝒯_X` is independent of representatives; witness
    /// `(a, b, c, d, a′, b′, c′, d′)` where the primed pairs represent the
    /// same translations and give a different sum.
    pub fn sum_well_defined(&self) -> Check {
        let n = self.size();
        let classes = self.translation_classes();
        // class pair -> first representatives and their sum
        let mut seen: HashMap<(usize, usize), ([usize; 4], Endofunction)> = HashMap::new();
        let mut witness = None;
        'outer: for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for d in 0..n {
                        let key = (classes.class_of(a, b), classes.class_of(c, d));
                        let map = Endofunction::from_fn(n, |x| self.get(self.get(x, a, b), c, d)).expect("in range");
                        match seen.get(&key) {
                            Some((first, m)) => {
                                if *m != map {
                                    witness = Some([first.as_slice(), &[a, b, c, d]].concat());
                                    break 'outer;
                                }
                            }
                            None => {
                                seen.insert(key, ([a, b, c, d], map));
                            }
                        }
                    }
                }
            }
        }
        Check::from_witness(witness)
    }

    /// A translation with a fixed point is the identity; witness `(a, b, p)`.
    pub fn fixed_point_law(&self) -> Check {
        let n = self.size();
        Check::from_witness(search(n, 3, |v| {
            let (a, b, p) = (v[0], v[1], v[2]);
            self.get(p, a, b) == p && (0..n).any(|x| self.get(x, a, b) != x)
        }))
    }

    /// The closure `𝒯*_X` of the translations under `+`.
    pub fn iteration_closure(&self) -> Result<IterationClosure, MalcevError> {
        let n = self.size();
        let classes = self.translation_classes();
        let generators = classes.maps.clone();
        let mut index: HashMap<Endofunction, usize> = HashMap::new();
        let mut elements: Vec<Endofunction> = Vec::new();
        let mut queue = VecDeque::new();
        for g in &generators {
            if !index.contains_key(g) {
                index.insert(g.clone(), elements.len());
                elements.push(g.clone());
                queue.push_back(elements.len() - 1);
            }
        }
        while let Some(i) = queue.pop_front() {
            for g in &generators {
                // elements[i] + g: apply elements[i] first
                let next = elements[i].seq_unchecked(g);
                if !index.contains_key(&next) {
                    if elements.len() >= CLOSURE_CAP {
                        return Err(MalcevError::ClosureCap { cap: CLOSURE_CAP });
                    }
                    index.insert(next.clone(), elements.len());
                    elements.push(next);
                    queue.push_back(elements.len() - 1);
                }
            }
        }
        let identity = index.get(&Endofunction::identity(n)).copied();
        let all_bijective = elements.iter().all(Endofunction::is_bijection);
        // a finite monoid of bijections is a group
        let is_group = identity.is_some() && all_bijective;
        let translations_closed = elements.len() == generators.len();
        let group = if is_group && elements.len() <= GROUP_TABLE_CAP {
            let labels: Vec<String> = elements
                .iter()
                .enumerate()
                .map(|(i, m)| match classes.position(m) {
                    Some(c) => {
                        let (a, b) = classes.reps[c][0];
                        format!("[-,{},{}]", self.carrier.label(a), self.carrier.label(b))
                    }
                    None => format!("t{i}"),
                })
                .collect();
            let carrier = FiniteSet::with_cap("T*", labels, GROUP_TABLE_CAP)?;
            let rows: Vec<Vec<usize>> = elements
                .iter()
                .map(|f| elements.iter().map(|g| index[&f.seq_unchecked(g)]).collect())
                .collect();
            Some(FiniteGroup::validate(carrier, rows)?)
        } else {
            None
        };
        Ok(IterationClosure {
            translations: generators.len(),
            elements,
            identity,
            is_monoid: identity.is_some(),
            is_group,
            translations_closed,
            fixed_point_law: self.fixed_point_law(),
            group,
        })
    }

    /// `[-, e, b] +_e [-, e, d] = [-, e, [b, e, d]]`. Operands given by other
    /// representatives are rewritten as `[-, e, t(e)]` when that is the
    /// same map.
    pub fn pointed_sum(
        &self,
        e: usize,
        t1: &MalcevTranslation,
        t2: &MalcevTranslation,
    ) -> Result<MalcevTranslation, MalcevError> {
        let b = self.pointed_tip(e, t1)?;
        let d = self.pointed_tip(e, t2)?;
        Ok(self.translation(e, self.get(b, e, d)))
    }

    fn pointed_tip(&self, e: usize, t: &MalcevTranslation) -> Result<usize, MalcevError> {
        if t.a == e {
            return Ok(t.b);
        }
        let b = t.map.apply(e);
        if self.translation(e, b).map == t.map {
            Ok(b)
        } else {
            Err(MalcevError::NotPointed {
                translation: format!("[-,{},{}]", self.carrier.label(t.a), self.carrier.label(t.b)),
                base: self.carrier.label(e).to_string(),
            })
        }
    }

    /// The laws of `+_e` on pointed translations `[-, e, b]`.
    pub fn pointed_laws(&self, e: usize) -> PointedLaws {
        let n = self.size();
        let p = |b: usize, d: usize| self.get(b, e, d);
        let tr = |b: usize| self.translation(e, b).map;
        // the tip of the pointed sum determines the translation only extensionally
        let same = |b: usize, d: usize| b == d || tr(b) == tr(d);
        let identity = Check::from_witness(search(n, 1, |v| !same(p(v[0], e), v[0]) || !same(p(e, v[0]), v[0])));
        let right_inverse = Check::from_witness(search(n, 1, |v| !same(p(v[0], self.get(e, v[0], e)), e)));
        let left_inverse = Check::from_witness(search(n, 1, |v| !same(p(self.get(e, v[0], e), v[0]), e)));
        let associative = Check::from_witness(search(n, 3, |v| !same(p(p(v[0], v[1]), v[2]), p(v[0], p(v[1], v[2])))));
        let commutative = Check::from_witness(search(n, 2, |v| !same(p(v[0], v[1]), p(v[1], v[0]))));
        // [-,a,b] +_e [-,c,d] = [-,a,b] + [-,c,d] with pointed forms [-,e,[e,a,b]]
        let agrees_with_sum = Check::from_witness(search(n, 4, |v| {
            let (a, b, c, d) = (v[0], v[1], v[2], v[3]);
            let pointed = tr(p(self.get(e, a, b), self.get(e, c, d)));
            (0..n).any(|x| pointed.apply(x) != self.get(self.get(x, a, b), c, d))
        }));
        PointedLaws {
            base: e,
            identity,
            right_inverse,
            left_inverse,
            associative,
            commutative,
            agrees_with_sum,
        }
    }

    /// The magma `x ◊_e y = [x, e, y]` with group diagnostics, and the
    /// canonical maps `φ` and `ψ` when it is a group.
    pub fn recovered_group(&self, e: usize) -> Result<RecoveredGroup, MalcevError> {
        let n = self.size();
        let rows: Vec<Vec<usize>> = (0..n).map(|x| (0..n).map(|y| self.get(x, e, y)).collect()).collect();
        let m = |x: usize, y: usize| rows[x][y];
        let identity = Check::from_witness(search(n, 1, |v| m(e, v[0]) != v[0] || m(v[0], e) != v[0]));
        let right_inverse = Check::from_witness(search(n, 1, |v| m(v[0], self.get(e, v[0], e)) != e));
        let left_inverse = Check::from_witness(search(n, 1, |v| m(self.get(e, v[0], e), v[0]) != e));
        let associative = Check::from_witness(search(n, 3, |v| m(m(v[0], v[1]), v[2]) != m(v[0], m(v[1], v[2]))));
        let commutative = Check::from_witness(search(n, 2, |v| m(v[0], v[1]) != m(v[1], v[0])));
        let group = match FiniteGroup::validate(
            self.carrier.renamed(format!("◊{}", self.carrier.label(e))),
            rows.clone(),
        ) {
            Ok(g) if g.identity() == e => Some(g),
            _ => None,
        };
        let (phi, psi) = match &group {
            Some(g) => (Some(self.phi_check(e, g)), Some(self.psi_checks(e, g))),
            None => (None, None),
        };
        Ok(RecoveredGroup {
            base: e,
            table: rows,
            identity,
            right_inverse,
            left_inverse,
            associative,
            commutative,
            group,
            phi,
            psi,
        })
    }

    /// `φ: p ↦ [-, e, p]` is a bijection onto `𝒯_X` carrying `◊_e` to `+_e`
    /// and to `+`; witness `(p)` for a bijection failure or `(p, q)` for a
    /// homomorphism failure.
    fn phi_check(&self, e: usize, g: &FiniteGroup) -> Check {
        let n = self.size();
        let classes = self.translation_classes();
        let images: Vec<Endofunction> = (0..n).map(|p| self.translation(e, p).map).collect();
        // onto 𝒯_X and injective
        if classes.len() != n {
            return Check::from_witness(Some(vec![]));
        }
        if let Some(w) = search(n, 1, |v| images[..v[0]].contains(&images[v[0]])) {
            return Check::from_witness(Some(w));
        }
        Check::from_witness(search(n, 2, |v| {
            let (p, q) = (v[0], v[1]);
            let target = &images[g.mul(p, q)];
            let pointed = self
                .pointed_sum(e, &self.translation(e, p), &self.translation(e, q))
                .map(|t| t.map);
            let plain = images[p].seq_unchecked(&images[q]);
            pointed.as_ref() != Ok(target) || &plain != target
        }))
    }

    /// For each `e′`, whether `ψ: x ↦ [x, e, e′]` is an isomorphism
    /// `(X, ◊_e) → (X, ◊_e′)`; witness `(x)` or `(x, y)`.
    fn psi_checks(&self, e: usize, g: &FiniteGroup) -> Vec<Check> {
        let n = self.size();
        (0..n)
            .map(|e2| {
                let psi: Vec<usize> = (0..n).map(|x| self.get(x, e, e2)).collect();
                if let Some(w) = search(n, 1, |v| psi[..v[0]].contains(&psi[v[0]])) {
                    return Check::from_witness(Some(w));
                }
                Check::from_witness(search(n, 2, |v| {
                    let (x, y) = (v[0], v[1]);
                    psi[g.mul(x, y)] != self.get(psi[x], e2, psi[y])
                }))
            })
            .collect()
    }

    /// Canonical text body lines `entry x y z : w`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, usize, usize)> + '_ {
        let n = self.size();
        (0..n * n * n).map(move |i| (i / (n * n), (i / n) % n, i % n, self.table[i]))
    }
}

const CLOSURE_CAP: usize = 40_320;
const GROUP_TABLE_CAP: usize = 720;

/// Identity outcomes in the fixed order of [`Identity::ALL`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub checks: Vec<(Identity, Check)>,
    pub malcev: bool,
    pub semiassociative: bool,
    /// Names of violated implications among the identities; always empty.
    pub theorem_violations: Vec<&'static str>,
}

impl IdentityReport {
    fn new(checks: Vec<(Identity, Check)>) -> IdentityReport {
        let h = |i: Identity| {
            checks
                .iter()
                .find(|(j, _)| *j == i)
                .map(|(_, c)| c.holds)
                .unwrap_or(false)
        };
        let malcev = h(Identity::A1) && h(Identity::A2);
        let semiassociative = h(Identity::A3) || h(Identity::A4);
        let mut theorem_violations = Vec::new();
        if malcev && h(Identity::Associative) != (h(Identity::A3) && h(Identity::A4)) {
            theorem_violations.push("associative_iff_A3_and_A4");
        }
        if h(Identity::A2) && h(Identity::A3) && !h(Identity::K3) {
            theorem_violations.push("A2_and_A3_imply_K3");
        }
        if h(Identity::A1) && h(Identity::A4) && !h(Identity::K4) {
            theorem_violations.push("A1_and_A4_imply_K4");
        }
        assert!(
            theorem_violations.is_empty(),
            "identity implications violated: {theorem_violations:?}"
        );
        IdentityReport {
            checks,
            malcev,
            semiassociative,
            theorem_violations,
        }
    }

    pub fn get(&self, id: Identity) -> &Check {
        &self
            .checks
            .iter()
            .find(|(j, _)| *j == id)
            .expect("all identities checked")
            .1
    }
}

/// `[-, a, b]` with its representative pair; equality is extensional.
#[derive(Clone, Debug)]
pub struct MalcevTranslation {
    pub a: usize,
    pub b: usize,
    pub map: Endofunction,
}

impl PartialEq for MalcevTranslation {
    fn eq(&self, other: &Self) -> bool {
        self.map == other.map
    }
}

impl Eq for MalcevTranslation {}

#[derive(Clone, Debug)]
pub struct TranslationSum {
    pub map: Endofunction,
    /// The sum as a translation `[-, a, b]` (least representative) when it
    /// is one.
    pub translation: Option<MalcevTranslation>,
}

#[derive(Clone, Debug)]
pub struct TranslationClasses {
    n: usize,
    pub maps: Vec<Endofunction>,
    pub reps: Vec<Vec<(usize, usize)>>,
    class_of: Vec<usize>,
}

impl TranslationClasses {
    pub fn len(&self) -> usize {
        self.maps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.maps.is_empty()
    }

    pub fn class_of(&self, a: usize, b: usize) -> usize {
        self.class_of[a * self.n + b]
    }

    pub fn position(&self, f: &Endofunction) -> Option<usize> {
        self.maps.iter().position(|m| m == f)
    }
}

#[derive(Clone, Debug)]
pub struct IterationClosure {
    /// `|𝒯_X|`
    pub translations: usize,
    /// `𝒯*_X`, translations first
    pub elements: Vec<Endofunction>,
    pub identity: Option<usize>,
    pub is_monoid: bool,
    pub is_group: bool,
    /// `𝒯*_X = 𝒯_X`
    pub translations_closed: bool,
    pub fixed_point_law: Check,
    /// `(𝒯*_X, +)` as a group table when it is a group.
    pub group: Option<FiniteGroup>,
}

#[derive(Clone, Debug)]
pub struct PointedLaws {
    pub base: usize,
    pub identity: Check,
    pub right_inverse: Check,
    pub left_inverse: Check,
    pub associative: Check,
    pub commutative: Check,
    pub agrees_with_sum: Check,
}

#[derive(Clone, Debug)]
pub struct RecoveredGroup {
    pub base: usize,
    /// `table[x][y] = x ◊_e y`
    pub table: Vec<Vec<usize>>,
    pub identity: Check,
    pub right_inverse: Check,
    pub left_inverse: Check,
    pub associative: Check,
    pub commutative: Check,
    pub group: Option<FiniteGroup>,
    pub phi: Option<Check>,
    /// indexed by `e′`
    pub psi: Option<Vec<Check>>,
}

impl RecoveredGroup {
    pub fn psi_all(&self) -> Option<bool> {
        self.psi.as_ref().map(|v| v.iter().all(|c| c.holds))
    }
}

/// Tallies of identity outcomes across a stream of structures.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IdentityCensus {
    pub total: u64,
    pub counts: BTreeMap<Identity, u64>,
}

impl IdentityCensus {
    pub fn record(&mut self, m: &MalcevStructure) {
        self.total += 1;
        for id in Identity::ALL {
            if m.holds(id) {
                *self.counts.entry(id).or_default() += 1;
            }
        }
    }
}
