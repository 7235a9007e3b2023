//! Acceptance criteria, one PASS/FAIL line each with its runtime limit.
//! Oracles here evaluate raw group tables and modular arithmetic directly
//! rather than going through the library's derived quantities.

mod common;

use std::collections::BTreeMap;
use std::ops::ControlFlow;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use actfield::actions::{classify, enumerate};
use actfield::affine::{
    chasles, identity_preserving_bijections, parallelogram, verify_preaffine, PreaffineSpace, SpaceKind,
};
use actfield::deformation::{curvature0, curvature1, dstar, torsion0, torsion1, torsion1_star, transport_holonomy};
use actfield::fields::{z3_scaling_field, ActionField, PointwiseKind};
use actfield::groups::{builtin_catalog, catalog, elementary_abelian, is_isomorphic};
use actfield::malcev::{count_malcev, enumerate_malcev};
use actfield::workbench::{mine, Family, Filter, MineOptions, Mined};
use actfield::{Action, FiniteGroup, FiniteSet, Identity, MalcevStructure, VectorGroup};

type Outcome = Result<String, String>;

/// Number, name, runtime limit in seconds, check.
type Criterion<'a> = (u32, &'static str, Option<u64>, Box<dyn Fn() -> Outcome + 'a>);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn q() -> FiniteGroup {
    catalog("Q").unwrap()
}

fn z2cube() -> VectorGroup {
    elementary_abelian(2, 3).unwrap()
}

/// `key = value` lines of a CLI run, plus its exit code.
fn cli_report(args: &[&str]) -> (BTreeMap<String, String>, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_actfield"))
        .args(args)
        .output()
        .unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    let map = text
        .lines()
        .filter_map(|l| l.split_once(" = "))
        .map(|(k, v)| (k.to_string(), v.to_string()))
        .collect();
    (map, out.status.code().unwrap_or(-1))
}

fn expect_keys(report: &BTreeMap<String, String>, want: &[(&str, &str)]) -> Result<(), String> {
    for (k, v) in want {
        let got = report.get(*k).map(String::as_str);
        ensure!(got == Some(*v), "{k}: expected {v}, got {got:?}");
    }
    Ok(())
}

fn classify_eps_phi() -> Outcome {
    let (r, code) = cli_report(&["classify", "catalog:eps_phi.action"]);
    ensure!(code == 0, "exit {code}");
    expect_keys(
        &r,
        &[
            ("closed_group_covariant", "true"),
            ("image.is_group", "true"),
            ("image.identity_is_epsilon", "false"),
            ("unital_set", "false"),
            ("reversible", "false"),
            ("monoidal", "false"),
        ],
    )?;
    Ok(format!("image identity {}", r["image.identity"]))
}

fn classify_c8_on_q() -> Outcome {
    let (r, code) = cli_report(&["classify", "catalog:c8_on_q.action"]);
    ensure!(code == 0, "exit {code}");
    expect_keys(
        &r,
        &[
            ("unital_group", "true"),
            ("closed_set", "true"),
            ("regular", "true"),
            ("premonoidal", "true"),
            ("monoidal", "false"),
            ("translation_group.order", "8"),
            ("translation_group.abelian", "false"),
            ("translation_group.isomorphic_to", "Q"),
            ("translation_group.isomorphic_to_domain", "false"),
        ],
    )?;
    ensure!(catalog("C8").unwrap().is_abelian(), "C8 should be abelian");
    Ok("translation group Q, not C8".into())
}

/// Every action at the exhaustive sizes: |G| = 2 on 3 points, |G| = 3 on 2
/// and on 3 points.
fn small_actions() -> Vec<Action> {
    let mut out = Vec::new();
    for (g, n) in [("Z2", 3), ("Z3", 2), ("Z3", 3)] {
        out.extend(enumerate(
            catalog(g).unwrap().into(),
            FiniteSet::indexed("X", n).unwrap(),
        ));
    }
    out
}

fn reversibility(actions: &[Action]) -> Outcome {
    let mut counts = BTreeMap::new();
    for a in actions {
        let r = classify(a);
        let [c1, c2, c3] = r.reversible_conditions;
        ensure!(c1 == c2 && c2 == c3, "conditions disagree on {:?}", a.maps());
        // oracle: every map is a permutation of its carrier
        let n = a.carrier_size();
        let bij = a.maps().iter().all(|m| {
            let mut seen = vec![false; n];
            (0..n).for_each(|x| seen[m.apply(x)] = true);
            seen.iter().all(|&s| s)
        });
        ensure!(
            c1 == bij && r.reversible.holds == bij,
            "reversible flag disagrees with the oracle"
        );
        *counts.entry((a.domain_size(), n)).or_insert(0usize) += 1;
    }
    let want = [((2, 3), 729), ((3, 2), 64), ((3, 3), 19683)];
    for (k, c) in want {
        ensure!(
            counts.get(&k) == Some(&c),
            "expected {c} actions at {k:?}, saw {:?}",
            counts.get(&k)
        );
    }
    Ok("729 (|G|=2,|X|=3) + 64 (|G|=3,|X|=2) + 19683 (|G|=3,|X|=3) actions agree".into())
}

fn free_lemmas(actions: &[Action]) -> Outcome {
    let mut free = 0;
    for a in actions {
        let r = classify(a);
        if !r.free.holds {
            continue;
        }
        free += 1;
        ensure!(r.injective_as_function.holds, "free but not injective");
        let k = a.domain_size();
        let n = a.carrier_size();
        let unital = r.unital_group().unwrap().holds;
        for g in 0..k {
            for h in 0..k {
                if (0..n).any(|x| a.apply(g, x) == a.apply(h, x)) {
                    ensure!(g == h, "distinct maps agree at a point: {:?}", a.maps());
                }
            }
            if unital && (0..n).any(|x| a.apply(g, x) == x) {
                ensure!((0..n).all(|x| a.apply(g, x) == x), "fixed point without identity");
            }
        }
    }
    Ok(format!("{free} free actions, 0 violations"))
}

/// Regular representations of `(Z_p)^n` with `p^n ≤ 27`, relabelled by a
/// deterministic carrier permutation so no two of the 50 coincide as tables.
fn affine_spaces() -> Vec<PreaffineSpace> {
    let shapes = [
        (2, 1),
        (2, 2),
        (2, 3),
        (2, 4),
        (3, 1),
        (3, 2),
        (3, 3),
        (5, 1),
        (5, 2),
        (7, 1),
        (11, 1),
        (13, 1),
        (17, 1),
        (19, 1),
        (23, 1),
    ];
    (0..50)
        .map(|i| {
            let (p, n) = shapes[i % shapes.len()];
            let v = elementary_abelian(p, n).unwrap();
            let size = v.order();
            let shift = i / shapes.len();
            let sigma: Vec<usize> = (0..size).map(|x| (x * (2 * shift + 1) + shift) % size).collect();
            let sigma = if (0..size).all(|y| sigma.contains(&y)) {
                sigma
            } else {
                (0..size).collect()
            };
            let mut inv = vec![0; size];
            sigma.iter().enumerate().for_each(|(x, &y)| inv[y] = x);
            let a = Action::from_fn(v.base().clone(), FiniteSet::indexed("X", size).unwrap(), |u, x| {
                sigma[v.add(inv[x], u)]
            })
            .unwrap();
            verify_preaffine(&v, &a).unwrap()
        })
        .collect()
}

fn affine_laws() -> Outcome {
    let spaces = affine_spaces();
    for s in &spaces {
        ensure!(s.kind() == SpaceKind::Affine, "regular representation not affine");
        let c = chasles(s);
        ensure!(c.vector_level.holds && c.translation_level.holds, "Chasles fails");
        ensure!(parallelogram(s).holds, "parallelogram fails");
        let n = s.size();
        let v = s.vectors();
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    ensure!(
                        v.add(s.arrow(x, y), s.arrow(y, z)) == s.arrow(x, z),
                        "Chasles at ({x},{y},{z})"
                    );
                }
            }
        }
        for x in 0..n {
            for u in 0..n {
                for w in 0..n {
                    ensure!(torsion0(s, x, u, w).is_zero(), "T0 ≠ 0");
                    ensure!(torsion1(s, x, u, w).is_zero(), "T1 ≠ 0");
                }
            }
        }
    }
    Ok(format!("{} spaces, orders up to 27", spaces.len()))
}

fn strictly_preaffine() -> Outcome {
    let v = z2cube();
    let g = q();
    let bs = identity_preserving_bijections(&v, &g);
    ensure!(bs.len() == 5040, "{} bijections", bs.len());
    for b in &bs {
        let s = PreaffineSpace::from_bijection(&v, &g, b).map_err(|e| e.to_string())?;
        ensure!(
            s.kind() == SpaceKind::StrictlyPreaffine,
            "bijection {b:?} not strictly preaffine"
        );
    }
    let sampled: Vec<&Vec<usize>> = bs.iter().step_by(50).collect();
    let mut nonzero = 0usize;
    let mut shown = None;
    for b in &sampled {
        let s = PreaffineSpace::from_bijection(&v, &g, b).unwrap();
        let mut binv = [0; 8];
        b.iter().enumerate().for_each(|(i, &e)| binv[e] = i);
        for x in 0..8 {
            for u in 0..8 {
                for w in 0..8 {
                    let t = torsion1(&s, x, u, w);
                    ensure!(t.vector == v.neg(torsion1(&s, x, w, u).vector), "T1 not skew");
                    // oracle: x + ū + w̄ = b(w)b(u)x, so T1 is b⁻¹ of the commutator
                    let (bu, bw) = (b[u], b[w]);
                    let comm = g.mul(g.mul(bu, bw), g.mul(g.inverse(bu), g.inverse(bw)));
                    ensure!(
                        t.vector == binv[comm],
                        "T1({x},{u},{w}) disagrees with the Q-table commutator"
                    );
                    if !t.is_zero() {
                        nonzero += 1;
                        shown.get_or_insert((x, u, w, v.render(t.vector)));
                    }
                }
            }
        }
    }
    ensure!(nonzero > 0, "no nonzero T1");
    let (x, u, w, val) = shown.unwrap();
    Ok(format!(
        "5040 strictly preaffine; {} sampled; {nonzero} nonzero T1, first T1({}, {}, {}) = {val}",
        sampled.len(),
        g.label(x),
        v.render(u),
        v.render(w)
    ))
}

/// Every `(Z_3)` automorphism field and every 16th `(Z_2)²` one.
fn automorphism_fields() -> Vec<ActionField> {
    let mut out = Vec::new();
    for (p, n, stride) in [(3, 1, 1), (2, 2, 16)] {
        let v = elementary_abelian(p, n).unwrap();
        let autos = v.automorphisms();
        let size = v.order();
        let total = autos.len().pow(size as u32);
        for code in (0..total).step_by(stride) {
            let mut c = code;
            let chosen: Vec<Vec<usize>> = (0..size)
                .map(|_| {
                    let a = autos[c % autos.len()].clone();
                    c /= autos.len();
                    a
                })
                .collect();
            out.push(ActionField::from_automorphisms(&v, &chosen).unwrap());
        }
    }
    out
}

fn constant_fields() -> Vec<ActionField> {
    [(3, 1), (2, 2), (2, 3)]
        .into_iter()
        .map(|(p, n)| ActionField::constant(&PreaffineSpace::regular(&elementary_abelian(p, n).unwrap())))
        .collect()
}

/// `T₁*` on the scaling field `x + v̄^p = x + a_p·v (mod 3)`.
fn z3_torsion1_star(a: &[usize], x: usize, u: usize, v: usize) -> usize {
    let y = (x + a[x] * u) % 3;
    let z = (x + a[x] * v) % 3;
    let t = (y + a[y] * v) % 3;
    let t2 = (z + a[z] * u) % 3;
    // a_t is its own inverse mod 3
    ((t2 + 3 - t) * a[t]) % 3
}

fn multiaffine() -> Outcome {
    let fields = automorphism_fields();
    ensure!(fields.len() >= 20, "only {} fields", fields.len());
    for f in &fields {
        let n = f.size();
        let v = f.vectors();
        let k = v.order();
        for p in 0..n {
            for x in 0..n {
                ensure!(f.translate(p, x, v.zero()) == x, "unitaladd-m");
                for u in 0..k {
                    for w in 0..k {
                        ensure!(
                            f.translate(p, f.translate(p, x, u), w) == f.translate(p, x, v.add(u, w)),
                            "closedgrpadd-m"
                        );
                    }
                    ensure!(f.division_at(p, x, f.translate(p, x, u)) == u, "reg2add-m");
                }
                for y in 0..n {
                    ensure!(f.translate(p, x, f.division_at(p, x, y)) == y, "reg1add-m");
                    for q in 0..n {
                        ensure!(
                            f.pullback(f.division_at(p, x, y), p, q) == f.division_at(q, x, y),
                            "inv2"
                        );
                    }
                }
            }
            for u in 0..k {
                ensure!(f.pullback(u, p, p) == u, "inv1");
                for q in 0..n {
                    ensure!(
                        f.action_at(p).map(f.pullback(u, q, p)) == f.action_at(q).map(u),
                        "inv1b"
                    );
                }
            }
        }
    }
    for f in constant_fields() {
        let n = f.size();
        for x in 0..n {
            for w in 0..n {
                for u in 0..n {
                    ensure!(torsion1_star(&f, x, w, u).is_zero(), "constant field T1* ≠ 0");
                    for t in 0..n {
                        ensure!(curvature0(&f, x, w, u, t).is_zero(), "constant field C0* ≠ 0");
                    }
                }
            }
        }
    }
    let mut scalings = 0;
    for code in 0..8usize {
        let a: Vec<usize> = (0..3).map(|i| 1 + (code >> i & 1)).collect();
        let f = z3_scaling_field(&a).unwrap();
        for x in 0..3 {
            for u in 0..3 {
                for w in 0..3 {
                    ensure!(
                        torsion1_star(&f, x, u, w).vector == z3_torsion1_star(&a, x, u, w),
                        "T1* on {a:?}"
                    );
                }
            }
        }
        scalings += 1;
    }
    let f = z3_scaling_field(&[1, 2, 1]).unwrap();
    let got = torsion1_star(&f, 0, 1, 2).vector;
    ensure!(
        got == 1 && z3_torsion1_star(&[1, 2, 1], 0, 1, 2) == 1,
        "T1*(0,1,2) = {got}"
    );
    Ok(format!(
        "{} automorphism fields, 3 constant controls, {scalings} scaling fields vs mod-3 oracle; T1*(0,1,2) = 1",
        fields.len()
    ))
}

/// The Q premonoidal fields the miner returns first, with their bijections.
fn mined_q_fields(
    filter: Filter,
    limit: u64,
) -> Vec<(
    ActionField,
    Vec<Vec<usize>>,
    Option<actfield::workbench::CurvatureWitness>,
)> {
    let v = z2cube();
    let g = q();
    let bs = identity_preserving_bijections(&v, &g);
    let opts = MineOptions {
        limit: Some(limit),
        keep: limit as usize,
        ..MineOptions::default()
    };
    let res = mine(&Family::PremonoidalFields { vectors: v, target: g }, filter, opts).unwrap();
    res.kept
        .into_iter()
        .map(|m| match m {
            Mined::Field {
                choice,
                field,
                curvature,
            } => {
                let chosen = choice.iter().map(|&i| bs[i].clone()).collect();
                (field, chosen, curvature)
            }
            _ => unreachable!("field family"),
        })
        .collect()
}

/// `C₀*(x,w,u,v)` on the field `x + v̄^p = b_p(v)·x`, evaluated on the Q table.
/// Vectors of `(Z_2)³` add by XOR of their indices.
fn q_curvature0(g: &FiniteGroup, bs: &[Vec<usize>], x: usize, w: usize, u: usize, v: usize) -> usize {
    let inv_b = |p: usize, e: usize| bs[p].iter().position(|&c| c == e).unwrap();
    let r = g.mul(bs[x][w], x);
    let s = g.mul(bs[r][u], r);
    let t = g.mul(bs[s][v], s);
    let pulled = inv_b(r, bs[s][v]);
    let t2 = g.mul(bs[r][u ^ pulled], r);
    inv_b(t, g.mul(t2, g.inverse(t)))
}

fn generated_fields() -> Vec<ActionField> {
    let mut out = automorphism_fields();
    out.extend(constant_fields());
    out.push(ActionField::constant(
        &PreaffineSpace::from_bijection(&z2cube(), &q(), &identity_preserving_bijections(&z2cube(), &q())[0]).unwrap(),
    ));
    out.extend(mined_q_fields(Filter::Nonconstant, 6).into_iter().map(|(f, _, _)| f));
    out
}

fn curvature_laws(fields: &[ActionField]) -> Outcome {
    let mut w_zero_informational = 0;
    for f in fields {
        let n = f.size();
        let vg = f.vectors();
        let k = vg.order();
        let z = vg.zero();
        for x in 0..n {
            for a in 0..k {
                for b in 0..k {
                    ensure!(curvature0(f, x, a, z, b).is_zero(), "C0*(x,w,0,v) ≠ 0");
                    ensure!(curvature0(f, x, a, b, z).is_zero(), "C0*(x,w,u,0) ≠ 0");
                    let w_zero = curvature0(f, x, z, a, b).is_zero();
                    if f.kind() == PointwiseKind::Monoidal {
                        ensure!(w_zero, "C0*(x,0,u,v) ≠ 0 on a monoidal field");
                        ensure!(curvature1(f, x, z, a, b, x).is_zero(), "C1*(x,0,u,v) ≠ 0");
                    } else if !w_zero {
                        w_zero_informational += 1;
                    }
                    ensure!(curvature1(f, x, a, z, b, x).is_zero(), "C1*(x,w,0,v) ≠ 0");
                    ensure!(curvature1(f, x, a, b, z, x).is_zero(), "C1*(x,w,u,0) ≠ 0");
                    ensure!(curvature1(f, x, a, b, b, x).is_zero(), "C1*(x,w,u,u) ≠ 0");
                    for c in 0..k {
                        let p = curvature1(f, x, a, b, c, x).translation;
                        let r = curvature1(f, x, a, c, b, x).translation;
                        ensure!(p == r.inverse().unwrap(), "C1* not skew");
                    }
                }
            }
        }
    }
    let g = q();
    let mined = mined_q_fields(Filter::NonzeroCurvature, 4);
    ensure!(!mined.is_empty(), "no curved premonoidal field mined");
    let mut first = None;
    for (f, bs, wit) in &mined {
        let wit = wit.as_ref().ok_or("curved field without witness")?;
        let direct = q_curvature0(&g, bs, wit.x, wit.w, wit.u, wit.v);
        ensure!(direct != 0, "oracle gives zero at the witness");
        ensure!(
            direct == wit.value.vector,
            "witness {} vs oracle {direct}",
            wit.value.vector
        );
        ensure!(
            curvature0(f, wit.x, wit.w, wit.u, wit.v).vector == direct,
            "recomputed value differs"
        );
        let vg = f.vectors();
        first.get_or_insert(format!(
            "C0*({}, {}, {}, {}) = {}",
            g.label(wit.x),
            vg.render(wit.w),
            vg.render(wit.u),
            vg.render(wit.v),
            vg.render(direct)
        ));
    }
    Ok(format!(
        "{} fields; {} mined witnesses match the Q-table oracle, first {}; w = 0 nonzero on premonoidal fields at {w_zero_informational} tuples (informational)",
        fields.len(),
        mined.len(),
        first.unwrap()
    ))
}

fn dstar_law(fields: &[ActionField]) -> Outcome {
    let mut tuples = 0usize;
    for f in fields {
        let z = f.vectors().zero();
        for x in 0..f.size() {
            for p in 0..f.size() {
                for v in 0..f.vectors().order() {
                    ensure!(dstar(f, x, p, z, v).is_zero(), "D*(x,p,0,v) ≠ 0");
                    tuples += 1;
                }
            }
        }
    }
    Ok(format!("{} fields, {tuples} tuples", fields.len()))
}

fn direct_holds(k: &MalcevStructure, id: Identity) -> bool {
    let n = k.size();
    let g = |x, y, z| k.get(x, y, z);
    let r = 0..n;
    match id {
        Identity::A3 => r
            .clone()
            .all(|p| (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| g(p, x, g(x, y, z)) == g(p, y, z))))),
        Identity::A4 => r
            .clone()
            .all(|p| (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| g(g(p, x, y), y, z) == g(p, x, z))))),
        Identity::Associative => r.clone().all(|x| {
            (0..n).all(|y| (0..n).all(|z| (0..n).all(|s| (0..n).all(|t| g(g(x, y, z), s, t) == g(x, y, g(z, s, t))))))
        }),
        _ => unreachable!(),
    }
}

fn malcev_theorem() -> Outcome {
    let mut seen = 0u64;
    let mut associative = 0u64;
    let mut exceptions = 0u64;
    enumerate_malcev(3, &[Identity::A1, Identity::A2], &mut |k| {
        seen += 1;
        let assoc = direct_holds(k, Identity::Associative);
        let a34 = direct_holds(k, Identity::A3) && direct_holds(k, Identity::A4);
        associative += u64::from(assoc);
        exceptions += u64::from(assoc != a34 || assoc != k.holds(Identity::Associative));
        ControlFlow::Continue(())
    })
    .map_err(|e| e.to_string())?;
    ensure!(seen == 531441, "{seen} tables on 3 points");
    ensure!(exceptions == 0, "{exceptions} exceptions");
    let mut two = 0u64;
    enumerate_malcev(2, &[Identity::A1, Identity::A2], &mut |_| {
        two += 1;
        ControlFlow::Continue(())
    })
    .map_err(|e| e.to_string())?;
    // oracle: scan all 2⁸ ternary tables on 2 points
    let brute = (0u32..256)
        .filter(|bits| {
            let t = |x: usize, y: usize, z: usize| (bits >> (x * 4 + y * 2 + z) & 1) as usize;
            (0..2).all(|x| (0..2).all(|y| t(x, y, y) == x && t(x, x, y) == y))
        })
        .count() as u64;
    let counted = count_malcev(2, &[Identity::A1, Identity::A2]).map_err(|e| e.to_string())?;
    ensure!(
        two == 4 && brute == 4 && counted == 4,
        "2-point structures: {two} enumerated, {brute} brute, {counted} counted"
    );
    Ok(format!(
        "531441 tables, {associative} associative, 0 exceptions; 4 Malcev structures on 2 points"
    ))
}

fn heap_round_trip() -> Outcome {
    let mut groups = 0;
    let mut bases = 0;
    for g in builtin_catalog().into_iter().filter(|g| g.order() <= 8) {
        let k = MalcevStructure::from_group(&g);
        for e in 0..g.order() {
            let r = k.recovered_group(e).map_err(|err| err.to_string())?;
            // oracle: x ◊_e y = x·e⁻¹·y
            for x in 0..g.order() {
                for y in 0..g.order() {
                    ensure!(
                        r.table[x][y] == g.mul(g.mul(x, g.inverse(e)), y),
                        "{} ◊_{e} table",
                        g.name()
                    );
                }
            }
            let h = r
                .group
                .as_ref()
                .ok_or_else(|| format!("{} base {e}: no group", g.name()))?;
            ensure!(
                is_isomorphic(h, &g).unwrap().is_some(),
                "{} base {e}: not isomorphic",
                g.name()
            );
            ensure!(r.phi.as_ref().is_some_and(|c| c.holds), "{} base {e}: φ", g.name());
            ensure!(r.psi_all() == Some(true), "{} base {e}: ψ", g.name());
            bases += 1;
        }
        groups += 1;
    }
    Ok(format!("{groups} groups, {bases} base points"))
}

fn bridges(fields: &[ActionField]) -> Outcome {
    let v = z2cube();
    let g = q();
    let mut spaces = affine_spaces();
    spaces.extend(
        identity_preserving_bijections(&v, &g)
            .iter()
            .step_by(97)
            .map(|b| PreaffineSpace::from_bijection(&v, &g, b).unwrap()),
    );
    let mut torsion_counts = [0usize; 2];
    for s in &spaces {
        let n = s.size();
        let k = s.vectors().order();
        let torsion_free = (0..n).all(|x| (0..k).all(|u| (0..k).all(|w| torsion1(s, x, u, w).is_zero())));
        let swap = MalcevStructure::from_preaffine(s).swap_symmetric().holds;
        ensure!(torsion_free == swap, "torsion bridge fails");
        torsion_counts[usize::from(torsion_free)] += 1;
    }
    let mut flat_counts = [0usize; 2];
    let mut skipped = 0;
    for f in fields {
        let ind = f.induced_action();
        let Ok(k) = MalcevStructure::from_regular_action(&ind.action) else {
            skipped += 1;
            continue;
        };
        let n = f.size();
        let flat =
            (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| (0..n).all(|r| transport_holonomy(f, x, y, z, r).is_zero()))));
        ensure!(flat == k.holds(Identity::A4), "flatness bridge fails");
        ensure!(flat == ind.is_preaffine(), "flat but not preaffine");
        flat_counts[usize::from(flat)] += 1;
    }
    ensure!(skipped == 0, "{skipped} induced actions not regular");
    Ok(format!(
        "torsion: {} spaces ({} torsion-free); flatness: {} induced actions ({} flat)",
        spaces.len(),
        torsion_counts[1],
        fields.len(),
        flat_counts[1]
    ))
}

fn determinism() -> Outcome {
    for (name, args) in common::CASES {
        let first = common::run(args);
        ensure!(first == common::run(args), "{name}: runs differ");
        let want = std::fs::read(common::golden_dir().join(format!("{name}.txt"))).map_err(|e| e.to_string())?;
        ensure!(first == want, "{name}: differs from golden file");
    }
    Ok(format!("{} invocations", common::CASES.len()))
}

fn main() -> ExitCode {
    let actions = small_actions();
    let fields = generated_fields();
    let criteria: Vec<Criterion> = vec![
        (1, "eps/phi example", Some(1), Box::new(classify_eps_phi)),
        (2, "C8 acting on Q", Some(1), Box::new(classify_c8_on_q)),
        (
            3,
            "reversibility equivalence",
            Some(5),
            Box::new(|| reversibility(&actions)),
        ),
        (4, "free-action lemmas", None, Box::new(|| free_lemmas(&actions))),
        (5, "affine laws", Some(30), Box::new(affine_laws)),
        (6, "strictly preaffine family", Some(60), Box::new(strictly_preaffine)),
        (7, "multiaffine identities", Some(30), Box::new(multiaffine)),
        (
            8,
            "curvature zero laws",
            Some(120),
            Box::new(|| curvature_laws(&fields)),
        ),
        (9, "D* law", Some(10), Box::new(|| dstar_law(&fields))),
        (10, "Malcev theorem", Some(60), Box::new(malcev_theorem)),
        (11, "heap round trip", Some(30), Box::new(heap_round_trip)),
        (12, "bridges", Some(30), Box::new(|| bridges(&fields))),
        (13, "determinism", None, Box::new(determinism)),
    ];
    let mut failed = 0;
    for (n, name, limit, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        let outcome = match (outcome, limit) {
            (Ok(_), Some(s)) if took > Duration::from_secs(s) => Err(format!("took {took:.2?}, limit {s} s")),
            (o, _) => o,
        };
        match outcome {
            Ok(detail) => println!("PASS criterion {n:>2} {name} [{took:.2?}]: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {n:>2} {name} [{took:.2?}]: {why}");
            }
        }
    }
    if failed > 0 {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
