//! Report builders for each command. Key order is fixed per command and
//! documented in the README.

use crate::actions::{classify_with, Action, Flag, Variance};
use crate::affine::{chasles, parallelogram, verify_preaffine, PreaffineSpace};
use crate::carriers::{Endofunction, FiniteSet};
use crate::deformation::{
    curvature0, curvature1, dstar, torsion0, torsion0_star, torsion1, torsion1_star, transport_holonomy,
    DeformationValue,
};
use crate::fields::ActionField;
use crate::groups::{builtin_catalog, is_isomorphic, FiniteGroup, VectorGroup, ISOMORPHISM_CAP};
use crate::malcev::{Check, Identity, MalcevStructure};

use super::report::{Report, Status};

/// Argument spaces larger than this are summarized unless tabulation is
/// forced.
pub const TABULATION_LIMIT: usize = 10_000;

fn flag_lines(r: &mut Report, key: &str, f: &Flag, domain: &FiniteSet, carrier: &FiniteSet) {
    r.push(key, f.holds);
    if let Some(w) = &f.witness {
        r.push(format!("{key}.witness"), w.render_with(domain, carrier));
    }
}

fn check_lines(r: &mut Report, key: &str, c: &Check, carrier: &FiniteSet) {
    r.push(key, c.holds);
    if let Some(w) = &c.witness {
        r.push(format!("{key}.witness"), carrier.render_tuple(w));
    }
}

/// Catalog groups isomorphic to `g`, comma-separated, or `none`.
pub fn catalog_matches(g: &FiniteGroup) -> String {
    if g.order() > ISOMORPHISM_CAP {
        return "unknown".to_string();
    }
    let names: Vec<String> = builtin_catalog()
        .iter()
        .filter(|h| h.order() == g.order())
        .filter(|h| matches!(is_isomorphic(g, h), Ok(Some(_))))
        .map(|h| h.name().to_string())
        .collect();
    if names.is_empty() {
        "none".to_string()
    } else {
        names.join(",")
    }
}

/// The image `ᾱ(G)` as a group under composition, when it is one.
pub fn image_group(a: &Action) -> Option<FiniteGroup> {
    let img = a.image();
    let labels: Vec<String> = (0..img.len()).map(|i| format!("t{i}")).collect();
    let set = FiniteSet::with_cap("T", labels, img.len().max(1)).ok()?;
    let rows: Option<Vec<Vec<usize>>> = img
        .iter()
        .map(|f| img.iter().map(|g| a.image_position(&f.compose(g).ok()?)).collect())
        .collect();
    FiniteGroup::validate(set, rows?).ok()
}

fn isomorphic(g: &FiniteGroup, h: &FiniteGroup) -> String {
    if g.order() != h.order() {
        return false.to_string();
    }
    match is_isomorphic(g, h) {
        Ok(w) => w.is_some().to_string(),
        Err(_) => "unknown".to_string(),
    }
}

pub fn run_classify(a: &Action, variance: Variance) -> Report {
    let rep = classify_with(a, variance);
    let dom = a.domain().elements();
    let car = a.carrier();
    let mut r = Report::new();
    r.push("kind", "action");
    r.push("domain", dom.name());
    r.push(
        "domain_kind",
        if a.domain().group().is_some() { "group" } else { "set" },
    );
    r.push("domain_size", a.domain_size());
    r.push("carrier_size", a.carrier_size());
    r.push("variance", variance.name());
    for (key, f) in rep.flags() {
        flag_lines(&mut r, key, f, dom, car);
    }
    let [a1, a2, a3] = rep.reversible_conditions;
    r.push("reversible_conditions", format!("{a1} {a2} {a3}"));
    if let Some(g) = &rep.group {
        flag_lines(&mut r, "closed_group", g.closed_group(), dom, car);
    }
    let im = &rep.image;
    r.push("image.size", im.size);
    r.push("image.closed", im.closed);
    r.push("image.is_monoid", im.is_monoid);
    r.push("image.is_group", im.is_group);
    r.push(
        "image.identity",
        im.identity
            .map_or("none".to_string(), |i| render_map(&a.image()[i], car)),
    );
    r.push("image.identity_is_epsilon", im.identity_is_epsilon);
    r.push("image.all_bijections", im.all_bijections);
    if let Some(t) = image_group(a) {
        r.push("translation_group.order", t.order());
        r.push("translation_group.abelian", t.is_abelian());
        r.push("translation_group.isomorphic_to", catalog_matches(&t));
        if let Some(g) = a.domain().group() {
            r.push("translation_group.isomorphic_to_domain", isomorphic(&t, g));
        }
    }
    r
}

/// Affine/preaffine verification of an action of a vector group. `vectors`,
/// when given, must have the same table as the action's domain.
pub fn run_affine(vectors: Option<&FiniteGroup>, a: &Action) -> Report {
    let mut r = Report::new();
    let Some(dom) = a.domain().group() else {
        r.push("space", "none");
        r.push("error", "action domain is a set, not a vector group");
        r.fail(Status::VerificationFailure);
        return r;
    };
    if let Some(v) = vectors {
        if !v.same_table(dom) {
            r.push("space", "none");
            r.push(
                "error",
                format!("action domain `{}` is not the vector group `{}`", dom.name(), v.name()),
            );
            r.fail(Status::VerificationFailure);
            return r;
        }
    }
    let v = match VectorGroup::certify(dom.clone()) {
        Ok(v) => v,
        Err(e) => {
            r.push("space", "none");
            r.push("error", e);
            r.fail(Status::VerificationFailure);
            return r;
        }
    };
    match verify_preaffine(&v, a) {
        Ok(s) => affine_lines(&mut r, &s),
        Err(e) => {
            r.push("space", "none");
            r.push("vectors", v.base().name());
            r.push("error", e);
            r.fail(Status::VerificationFailure);
        }
    }
    r
}

fn affine_lines(r: &mut Report, s: &PreaffineSpace) {
    let vset = s.vectors().base().carrier();
    r.push("space", s.kind().name());
    r.push("vectors", s.vectors().base().name());
    r.push("size", s.size());
    let c = chasles(s);
    flag_lines(r, "chasles.vector_level", &c.vector_level, vset, s.carrier());
    flag_lines(r, "chasles.translation_level", &c.translation_level, vset, s.carrier());
    flag_lines(r, "parallelogram", &parallelogram(s), vset, s.carrier());
    let t = s.translation_group();
    r.push("translation_group.order", t.order());
    r.push("translation_group.abelian", t.is_abelian());
    r.push("translation_group.isomorphic_to", catalog_matches(t.as_group()));
    let k = MalcevStructure::from_preaffine(s);
    r.push("kappa.commutative", k.holds(Identity::Commutative));
    r.push("kappa.swap_symmetric", k.swap_symmetric().holds);
}

fn all_zero(n: usize, k: usize, arity_vectors: usize, f: impl Fn(usize, &[usize]) -> bool) -> bool {
    let mut v = vec![0; arity_vectors];
    (0..n).all(|x| {
        v.iter_mut().for_each(|c| *c = 0);
        loop {
            if !f(x, &v) {
                return false;
            }
            let mut i = arity_vectors;
            loop {
                if i == 0 {
                    return true;
                }
                i -= 1;
                v[i] += 1;
                if v[i] < k {
                    break;
                }
                v[i] = 0;
            }
        }
    })
}

pub fn run_field(f: &ActionField) -> Report {
    let mut r = Report::new();
    let n = f.size();
    let k = f.vectors().order();
    r.push("kind", "field");
    r.push("vectors", f.vectors().base().name());
    r.push("size", n);
    r.push("pointwise", f.kind().name());
    r.push("constant", f.is_constant());
    let ind = f.induced_action();
    r.push("induced", ind.kind_name());
    r.push("induced.regular", ind.report.regular.holds);
    r.push("induced.closed_set", ind.report.closed_set.holds);
    if let Ok(kappa) = MalcevStructure::from_regular_action(&ind.action) {
        for id in [Identity::A1, Identity::A2, Identity::A3, Identity::A4] {
            check_lines(&mut r, &format!("kappa.{}", id.name()), &kappa.check(id), f.carrier());
        }
    }
    let t1 = all_zero(n, k, 2, |x, v| torsion1_star(f, x, v[0], v[1]).is_zero());
    let c0 = all_zero(n, k, 3, |x, v| curvature0(f, x, v[0], v[1], v[2]).is_zero());
    let d0 = all_zero(n, n, 1, |x, v| (0..k).all(|u| dstar(f, x, v[0], 0, u).is_zero()));
    let hol = all_zero(n, n, 3, |x, v| transport_holonomy(f, x, v[0], v[1], v[2]).is_zero());
    r.push("torsion1_star_zero", t1);
    r.push("curvature0_zero", c0);
    r.push("dstar_zero_law", d0);
    r.push("holonomy_zero", hol);
    r
}

/// Deformation measures selectable by name.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Measure {
    Torsion0,
    Torsion1,
    Torsion1Star,
    Torsion0Star,
    Curvature0,
    Curvature1,
    DStar,
    Holonomy,
}

impl Measure {
    pub const ALL: [Measure; 8] = [
        Measure::Torsion0,
        Measure::Torsion1,
        Measure::Torsion1Star,
        Measure::Torsion0Star,
        Measure::Curvature0,
        Measure::Curvature1,
        Measure::DStar,
        Measure::Holonomy,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Measure::Torsion0 => "torsion0",
            Measure::Torsion1 => "torsion1",
            Measure::Torsion1Star => "torsion1_star",
            Measure::Torsion0Star => "torsion0_star",
            Measure::Curvature0 => "curvature0",
            Measure::Curvature1 => "curvature1",
            Measure::DStar => "dstar",
            Measure::Holonomy => "holonomy",
        }
    }

    pub fn parse(s: &str) -> Option<Measure> {
        Measure::ALL.into_iter().find(|m| m.name() == s)
    }

    /// Argument kinds after the leading point `x`: `true` for a point,
    /// `false` for a vector.
    pub fn arguments(self) -> &'static [bool] {
        match self {
            Measure::Torsion0 | Measure::Torsion1 | Measure::Torsion1Star | Measure::Torsion0Star => &[false, false],
            Measure::Curvature0 | Measure::Curvature1 => &[false, false, false],
            Measure::DStar => &[true, false, false],
            Measure::Holonomy => &[true, true, true],
        }
    }

    pub fn needs_field(self) -> bool {
        !matches!(self, Measure::Torsion0 | Measure::Torsion1)
    }
}

/// What a measure is evaluated on.
pub enum DeformTarget<'a> {
    Space(&'a PreaffineSpace),
    Field(&'a ActionField),
}

fn norm(v: &VectorGroup, x: usize) -> usize {
    v.components(x).iter().filter(|&&c| c != 0).count()
}

pub fn run_deform(target: DeformTarget<'_>, m: Measure, exhaustive: bool) -> Report {
    let mut r = Report::new();
    r.push("measure", m.name());
    let constant;
    let (space, field): (Option<&PreaffineSpace>, Option<&ActionField>) = match target {
        DeformTarget::Space(s) => {
            r.push("target", s.kind().name());
            if m.needs_field() {
                constant = ActionField::constant(s);
                (Some(s), Some(&constant))
            } else {
                (Some(s), None)
            }
        }
        DeformTarget::Field(f) => {
            r.push("target", format!("{}_field", f.kind().name()));
            (None, Some(f))
        }
    };
    if !m.needs_field() && space.is_none() {
        r.push(
            "error",
            format!("{} is defined on preaffine spaces, not fields", m.name()),
        );
        r.fail(Status::VerificationFailure);
        return r;
    }
    let (v, carrier) = match (space, field) {
        (Some(s), _) => (s.vectors().clone(), s.carrier().clone()),
        (None, Some(f)) => (f.vectors().clone(), f.carrier().clone()),
        (None, None) => unreachable!("one target is present"),
    };
    let n = carrier.len();
    let k = v.order();
    let kinds = m.arguments();
    let eval = |x: usize, a: &[usize]| -> DeformationValue {
        match m {
            Measure::Torsion0 => torsion0(space.expect("space"), x, a[0], a[1]),
            Measure::Torsion1 => torsion1(space.expect("space"), x, a[0], a[1]),
            Measure::Torsion1Star => torsion1_star(field.expect("field"), x, a[0], a[1]),
            Measure::Torsion0Star => torsion0_star(field.expect("field"), x, a[0], a[1]),
            Measure::Curvature0 => curvature0(field.expect("field"), x, a[0], a[1], a[2]),
            Measure::Curvature1 => curvature1(field.expect("field"), x, a[0], a[1], a[2], x),
            Measure::DStar => dstar(field.expect("field"), x, a[0], a[1], a[2]),
            Measure::Holonomy => transport_holonomy(field.expect("field"), x, a[0], a[1], a[2]),
        }
    };
    let radix: Vec<usize> = kinds.iter().map(|&p| if p { n } else { k }).collect();
    let tuples = radix.iter().product::<usize>() * n;
    let tabulate = exhaustive || tuples <= TABULATION_LIMIT;
    r.push("tuples", tuples);
    r.push("tabulated", tabulate);
    let render_tuple = |x: usize, a: &[usize]| {
        let mut parts = vec![carrier.label(x).to_string()];
        for (i, &c) in a.iter().enumerate() {
            parts.push(if kinds[i] { carrier.label(c) } else { v.base().label(c) }.to_string());
        }
        format!("({})", parts.join(", "))
    };
    let mut table = Vec::new();
    let mut nonzero = 0usize;
    let mut max_norm = 0usize;
    let mut first_nonzero: Option<String> = None;
    let mut extremal: Option<String> = None;
    let mut a = vec![0; radix.len()];
    for x in 0..n {
        a.iter_mut().for_each(|c| *c = 0);
        loop {
            let val = eval(x, &a);
            let nv = norm(&v, val.vector);
            if !val.is_zero() {
                nonzero += 1;
                if first_nonzero.is_none() {
                    first_nonzero = Some(format!("{} -> {}", render_tuple(x, &a), v.render(val.vector)));
                }
            }
            if nv > max_norm {
                max_norm = nv;
                extremal = Some(format!("{} -> {}", render_tuple(x, &a), v.render(val.vector)));
            }
            if tabulate {
                table.push((format!("value{}", render_tuple(x, &a)), v.render(val.vector)));
            }
            let mut i = a.len();
            let mut done = false;
            loop {
                if i == 0 {
                    done = true;
                    break;
                }
                i -= 1;
                a[i] += 1;
                if a[i] < radix[i] {
                    break;
                }
                a[i] = 0;
            }
            if done {
                break;
            }
        }
    }
    r.push("nonzero_count", nonzero);
    r.push("max_norm", max_norm);
    r.push("max_norm_nonzero", max_norm > 0);
    r.push("first_nonzero", first_nonzero.unwrap_or_else(|| "none".to_string()));
    r.push("extremal", extremal.unwrap_or_else(|| "none".to_string()));
    for (key, val) in table {
        r.push(key, val);
    }
    r
}

/// Subcommands of `run_malcev`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MalcevCommand {
    Check,
    Closure,
    Recover(usize),
    Pointed(usize),
}

pub fn run_malcev(k: &MalcevStructure, cmd: MalcevCommand) -> Report {
    let mut r = Report::new();
    let c = k.carrier();
    r.push("kind", "malcev");
    r.push("size", k.size());
    match cmd {
        MalcevCommand::Check => {
            r.push("command", "check");
            let rep = k.check_identities();
            for (id, chk) in &rep.checks {
                check_lines(&mut r, id.name(), chk, c);
            }
            r.push("malcev", rep.malcev);
            r.push("semiassociative", rep.semiassociative);
            check_lines(&mut r, "swap_symmetric", &k.swap_symmetric(), c);
        }
        MalcevCommand::Closure => {
            r.push("command", "closure");
            match k.iteration_closure() {
                Ok(cl) => {
                    r.push("translations", cl.translations);
                    r.push("closure_size", cl.elements.len());
                    r.push("monoid", cl.is_monoid);
                    r.push("group", cl.is_group);
                    r.push("translations_closed", cl.translations_closed);
                    check_lines(&mut r, "fixed_point_law", &cl.fixed_point_law, c);
                    check_lines(&mut r, "sum_well_defined", &k.sum_well_defined(), c);
                    if let Some(g) = &cl.group {
                        r.push("group.abelian", g.is_abelian());
                        r.push("group.isomorphic_to", catalog_matches(g));
                    }
                }
                Err(e) => {
                    r.push("error", e);
                    r.fail(Status::BudgetExceeded);
                }
            }
        }
        MalcevCommand::Recover(e) => {
            r.push("command", "recover");
            r.push("base", c.label(e));
            let rg = k.recovered_group(e).expect("table-sized inputs");
            check_lines(&mut r, "identity", &rg.identity, c);
            check_lines(&mut r, "right_inverse", &rg.right_inverse, c);
            check_lines(&mut r, "left_inverse", &rg.left_inverse, c);
            check_lines(&mut r, "associative", &rg.associative, c);
            check_lines(&mut r, "commutative", &rg.commutative, c);
            r.push("group", rg.group.is_some());
            match (&rg.group, &rg.phi, &rg.psi) {
                (Some(g), Some(phi), Some(psi)) => {
                    r.push("group.isomorphic_to", catalog_matches(g));
                    check_lines(&mut r, "phi", phi, c);
                    for (e2, chk) in psi.iter().enumerate() {
                        check_lines(&mut r, &format!("psi[{}]", c.label(e2)), chk, c);
                    }
                }
                _ => r.fail(Status::VerificationFailure),
            }
        }
        MalcevCommand::Pointed(e) => {
            r.push("command", "pointed");
            r.push("base", c.label(e));
            let p = k.pointed_laws(e);
            check_lines(&mut r, "identity", &p.identity, c);
            check_lines(&mut r, "right_inverse", &p.right_inverse, c);
            check_lines(&mut r, "left_inverse", &p.left_inverse, c);
            check_lines(&mut r, "associative", &p.associative, c);
            check_lines(&mut r, "commutative", &p.commutative, c);
            check_lines(&mut r, "agrees_with_sum", &p.agrees_with_sum, c);
            for b in 0..k.size() {
                let inv = k.get(e, b, e);
                r.push(
                    format!("inverse[-,{},{}]", c.label(e), c.label(b)),
                    format!("[-,{},{}]", c.label(e), c.label(inv)),
                );
            }
        }
    }
    r
}

/// An endofunction as its bracketed image list.
fn render_map(f: &Endofunction, carrier: &FiniteSet) -> String {
    format!("[{}]", f.render(carrier))
}
