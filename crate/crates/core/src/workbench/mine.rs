//! Deterministic generators of spaces, fields and Malcev tables, with
//! filters. Every structure that passes a filter is re-verified from its
//! raw data before it is reported.

use std::ops::ControlFlow;

use crate::affine::{identity_preserving_bijections, verify_preaffine, PreaffineSpace, SpaceKind};
use crate::deformation::{curvature0, DeformationValue};
use crate::fields::{verify_field, ActionField, PointwiseKind};
use crate::groups::{FiniteGroup, VectorGroup};
use crate::malcev::{enumerate_malcev, Identity, MalcevError, MalcevStructure};

use super::report::{Report, Status};

/// Candidates examined when no budget is given.
pub const DEFAULT_BUDGET: u64 = 20_000;

#[derive(Clone, Debug)]
pub enum Family {
    /// Spaces `x + v̄ = b(v)·x` for identity-preserving bijections `b`.
    PreaffineBijections { vectors: VectorGroup, target: FiniteGroup },
    /// Fields on `V` with an automorphism chosen at every point.
    AutomorphismFields { vectors: VectorGroup },
    /// Fields on `target` with an identity-preserving bijection chosen at
    /// every point.
    PremonoidalFields { vectors: VectorGroup, target: FiniteGroup },
    /// Ternary tables on `n` points satisfying `constraints`.
    Malcev { n: usize, constraints: Vec<Identity> },
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::PreaffineBijections { .. } => "preaffine_bijections",
            Family::AutomorphismFields { .. } => "multiaffine_automorphism_fields",
            Family::PremonoidalFields { .. } => "premonoidal_fields",
            Family::Malcev { .. } => "malcev",
        }
    }

    fn parameters(&self) -> String {
        match self {
            Family::PreaffineBijections { vectors, target } | Family::PremonoidalFields { vectors, target } => {
                format!("({}, {})", vectors.base().name(), target.name())
            }
            Family::AutomorphismFields { vectors } => format!("({})", vectors.base().name()),
            Family::Malcev { n, constraints } => {
                let c: Vec<&str> = constraints.iter().map(|i| i.name()).collect();
                format!("({n}, {{{}}})", c.join(", "))
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Filter {
    Any,
    Affine,
    StrictlyPreaffine,
    StrictlySemipreaffine,
    Nonconstant,
    NonzeroCurvature,
    Associative,
    NonAssociative,
}

impl Filter {
    pub const ALL: [Filter; 8] = [
        Filter::Any,
        Filter::Affine,
        Filter::StrictlyPreaffine,
        Filter::StrictlySemipreaffine,
        Filter::Nonconstant,
        Filter::NonzeroCurvature,
        Filter::Associative,
        Filter::NonAssociative,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Filter::Any => "any",
            Filter::Affine => "affine",
            Filter::StrictlyPreaffine => "strictly_preaffine",
            Filter::StrictlySemipreaffine => "strictly_semipreaffine",
            Filter::Nonconstant => "nonconstant",
            Filter::NonzeroCurvature => "nonzero_curvature",
            Filter::Associative => "associative",
            Filter::NonAssociative => "non_associative",
        }
    }

    pub fn parse(s: &str) -> Option<Filter> {
        Filter::ALL.into_iter().find(|f| f.name() == s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MineOptions {
    /// Maximum number of candidates examined.
    pub budget: u64,
    /// Stop after this many structures pass.
    pub limit: Option<u64>,
    /// Number of passing structures kept in the result.
    pub keep: usize,
}

impl Default for MineOptions {
    fn default() -> Self {
        MineOptions {
            budget: DEFAULT_BUDGET,
            limit: None,
            keep: 3,
        }
    }
}

/// A nonzero `ℭ₀*(x, w, u, v)`, the least such tuple.
#[derive(Clone, Debug)]
pub struct CurvatureWitness {
    pub x: usize,
    pub w: usize,
    pub u: usize,
    pub v: usize,
    pub value: DeformationValue,
}

#[derive(Clone, Debug)]
pub enum Mined {
    Space {
        bijection: Vec<usize>,
        space: PreaffineSpace,
    },
    Field {
        choice: Vec<usize>,
        field: ActionField,
        curvature: Option<CurvatureWitness>,
    },
    Malcev(MalcevStructure),
}

#[derive(Clone, Debug)]
pub struct MineResult {
    pub family: String,
    pub parameters: String,
    pub filter: Filter,
    pub examined: u64,
    pub passed: u64,
    /// Passing structures that re-verified from raw data; equals `passed`.
    pub reverified: u64,
    /// The budget ran out before the family was exhausted or the limit met.
    pub partial: bool,
    pub kept: Vec<Mined>,
}

pub fn first_nonzero_curvature(f: &ActionField) -> Option<CurvatureWitness> {
    let n = f.size();
    let k = f.vectors().order();
    for x in 0..n {
        for w in 0..k {
            for u in 0..k {
                for v in 0..k {
                    let value = curvature0(f, x, w, u, v);
                    if !value.is_zero() {
                        return Some(CurvatureWitness { x, w, u, v, value });
                    }
                }
            }
        }
    }
    None
}

struct Miner {
    opts: MineOptions,
    filter: Filter,
    examined: u64,
    passed: u64,
    reverified: u64,
    partial: bool,
    kept: Vec<Mined>,
}

impl Miner {
    /// Records one candidate; breaks when the budget or limit is reached.
    fn offer(&mut self, candidate: impl FnOnce(Filter) -> Option<(Mined, bool)>) -> ControlFlow<()> {
        if self.examined >= self.opts.budget {
            self.partial = true;
            return ControlFlow::Break(());
        }
        self.examined += 1;
        if let Some((m, ok)) = candidate(self.filter) {
            self.passed += 1;
            self.reverified += u64::from(ok);
            if self.kept.len() < self.opts.keep {
                self.kept.push(m);
            }
            if self.opts.limit.is_some_and(|l| self.passed >= l) {
                return ControlFlow::Break(());
            }
        }
        ControlFlow::Continue(())
    }
}

/// Odometer over `radix^len`, last coordinate fastest.
fn odometer(len: usize, radix: usize, mut f: impl FnMut(&[usize]) -> ControlFlow<()>) {
    if radix == 0 {
        return;
    }
    let mut c = vec![0; len];
    loop {
        if f(&c).is_break() {
            return;
        }
        let mut i = len;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            c[i] += 1;
            if c[i] < radix {
                break;
            }
            c[i] = 0;
        }
    }
}

fn field_passes(f: &ActionField, filter: Filter) -> Option<Option<CurvatureWitness>> {
    match filter {
        Filter::Any => Some(None),
        Filter::Nonconstant => (!f.is_constant()).then_some(None),
        Filter::StrictlySemipreaffine => (!f.induced_action().is_preaffine()).then_some(None),
        Filter::Affine | Filter::StrictlyPreaffine => {
            let ind = f.induced_action();
            let want = if filter == Filter::Affine {
                SpaceKind::Affine
            } else {
                SpaceKind::StrictlyPreaffine
            };
            ind.space.filter(|s| s.kind() == want).map(|_| None)
        }
        Filter::NonzeroCurvature => first_nonzero_curvature(f).map(Some),
        Filter::Associative | Filter::NonAssociative => None,
    }
}

fn reverify_field(f: &ActionField) -> bool {
    verify_field(f.vectors(), f.carrier(), f.actions().to_vec(), f.kind()).is_ok()
}

pub fn mine(family: &Family, filter: Filter, opts: MineOptions) -> Result<MineResult, MalcevError> {
    let mut m = Miner {
        opts,
        filter,
        examined: 0,
        passed: 0,
        reverified: 0,
        partial: false,
        kept: Vec::new(),
    };
    match family {
        Family::PreaffineBijections { vectors, target } => {
            for b in identity_preserving_bijections(vectors, target) {
                let flow = m.offer(|flt| {
                    let s = PreaffineSpace::from_bijection(vectors, target, &b).ok()?;
                    let pass = match flt {
                        Filter::Any => true,
                        Filter::Affine => s.kind() == SpaceKind::Affine,
                        Filter::StrictlyPreaffine => s.kind() == SpaceKind::StrictlyPreaffine,
                        _ => false,
                    };
                    if !pass {
                        return None;
                    }
                    let ok = verify_preaffine(vectors, s.action())
                        .map(|t| t.kind() == s.kind())
                        .unwrap_or(false);
                    Some((
                        Mined::Space {
                            bijection: b.clone(),
                            space: s,
                        },
                        ok,
                    ))
                });
                if flow.is_break() {
                    break;
                }
            }
        }
        Family::AutomorphismFields { vectors } => {
            let autos = vectors.automorphisms();
            odometer(vectors.order(), autos.len(), |c| {
                m.offer(|flt| {
                    let chosen: Vec<Vec<usize>> = c.iter().map(|&i| autos[i].clone()).collect();
                    let f = ActionField::from_automorphisms(vectors, &chosen).ok()?;
                    let curvature = field_passes(&f, flt)?;
                    let ok = reverify_field(&f);
                    Some((
                        Mined::Field {
                            choice: c.to_vec(),
                            field: f,
                            curvature,
                        },
                        ok,
                    ))
                })
            });
        }
        Family::PremonoidalFields { vectors, target } => {
            let bs = identity_preserving_bijections(vectors, target);
            odometer(target.order(), bs.len(), |c| {
                m.offer(|flt| {
                    let chosen: Vec<Vec<usize>> = c.iter().map(|&i| bs[i].clone()).collect();
                    let f = ActionField::from_bijections(vectors, target, &chosen, PointwiseKind::Premonoidal).ok()?;
                    let curvature = field_passes(&f, flt)?;
                    let ok = reverify_field(&f);
                    Some((
                        Mined::Field {
                            choice: c.to_vec(),
                            field: f,
                            curvature,
                        },
                        ok,
                    ))
                })
            });
        }
        Family::Malcev { n, constraints } => {
            enumerate_malcev(*n, constraints, &mut |k| {
                m.offer(|flt| {
                    let pass = match flt {
                        Filter::Any => true,
                        Filter::Associative => k.holds(Identity::Associative),
                        Filter::NonAssociative => !k.holds(Identity::Associative),
                        Filter::StrictlySemipreaffine => {
                            k.is_malcev() && k.holds(Identity::A3) && !k.holds(Identity::A4)
                        }
                        _ => false,
                    };
                    if !pass {
                        return None;
                    }
                    let ok = constraints.iter().all(|&i| k.holds(i));
                    Some((Mined::Malcev(k.clone()), ok))
                })
            })?;
        }
    }
    Ok(MineResult {
        family: family.name().to_string(),
        parameters: family.parameters(),
        filter,
        examined: m.examined,
        passed: m.passed,
        reverified: m.reverified,
        partial: m.partial,
        kept: m.kept,
    })
}

/// Renders a mining result as a report. An empty result is a verification
/// failure; a partial one exits with the budget status.
pub fn mine_report(res: &MineResult, budget: u64) -> Report {
    let mut r = Report::new();
    r.push("family", &res.family);
    r.push("parameters", &res.parameters);
    r.push("filter", res.filter.name());
    r.push("budget", budget);
    r.push("examined", res.examined);
    r.push("passed", res.passed);
    r.push("reverified", res.reverified);
    r.push("partial", res.partial);
    for (i, s) in res.kept.iter().enumerate() {
        match s {
            Mined::Space { bijection, space } => {
                let t = space.carrier();
                let img: Vec<&str> = bijection.iter().map(|&y| t.label(y)).collect();
                r.push(format!("structure[{i}]"), format!("bijection [{}]", img.join(" ")));
                r.push(format!("structure[{i}].kind"), space.kind().name());
            }
            Mined::Field {
                choice,
                field,
                curvature,
            } => {
                let c: Vec<String> = choice.iter().map(|x| x.to_string()).collect();
                r.push(format!("structure[{i}]"), format!("choice ({})", c.join(", ")));
                r.push(format!("structure[{i}].induced"), field.induced_action().kind_name());
                if let Some(w) = curvature {
                    let (p, vl) = (field.carrier(), field.vectors());
                    r.push(
                        format!("structure[{i}].curvature0"),
                        format!(
                            "({}, {}, {}, {}) -> {}",
                            p.label(w.x),
                            vl.base().label(w.w),
                            vl.base().label(w.u),
                            vl.base().label(w.v),
                            vl.render(w.value.vector)
                        ),
                    );
                }
            }
            Mined::Malcev(k) => {
                let c = k.carrier();
                let t: Vec<&str> = k.table().iter().map(|&w| c.label(w)).collect();
                r.push(format!("structure[{i}]"), format!("table [{}]", t.join(" ")));
            }
        }
    }
    if res.partial {
        r.fail(Status::BudgetExceeded);
    } else if res.passed == 0 {
        r.fail(Status::VerificationFailure);
    }
    r
}
