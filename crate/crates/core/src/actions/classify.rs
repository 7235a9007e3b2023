use super::{Action, ActionError};
use crate::carriers::{Endofunction, FiniteSet};

/// Which product law "closed action of groups" refers to.
///
/// Covariant: `ḡ ∘ h̄ = overline(g□h)`. Contravariant: `h̄ ∘ ḡ = overline(g□h)`,
/// i.e. `ḡ` is applied first.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Variance {
    #[default]
    Covariant,
    Contravariant,
}

impl Variance {
    pub fn name(self) -> &'static str {
        match self {
            Variance::Covariant => "covariant",
            Variance::Contravariant => "contravariant",
        }
    }
}

/// One coordinate of a counterexample tuple.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Slot {
    Domain(usize),
    Point(usize),
}

/// A counterexample tuple, lexicographically least among all
/// counterexamples in the quantifier order of its flag.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Witness(pub Vec<Slot>);

impl Witness {
    pub fn render(&self, a: &Action) -> String {
        self.render_with(a.domain().elements(), a.carrier())
    }

    pub fn render_with(&self, domain: &FiniteSet, carrier: &FiniteSet) -> String {
        let parts: Vec<&str> = self
            .0
            .iter()
            .map(|s| match *s {
                Slot::Domain(g) => domain.label(g),
                Slot::Point(x) => carrier.label(x),
            })
            .collect();
        format!("({})", parts.join(", "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Flag {
    pub holds: bool,
    pub witness: Option<Witness>,
}

impl Flag {
    pub(crate) fn ok() -> Self {
        Flag {
            holds: true,
            witness: None,
        }
    }

    pub(crate) fn fail(slots: Vec<Slot>) -> Self {
        Flag {
            holds: false,
            witness: Some(Witness(slots)),
        }
    }

    pub(crate) fn from_witness(w: Option<Vec<Slot>>) -> Self {
        w.map_or_else(Flag::ok, Flag::fail)
    }

    /// `self ∧ other`, keeping the first available witness.
    pub(crate) fn and(&self, other: &Flag) -> Flag {
        if !self.holds {
            self.clone()
        } else {
            other.clone()
        }
    }
}

/// Structure of the image `ᾱ(G)` under composition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ImageStructure {
    pub size: usize,
    pub closed: bool,
    pub is_monoid: bool,
    pub is_group: bool,
    /// Position in [`Action::image`] of the identity element of the image
    /// monoid, when there is one.
    pub identity: Option<usize>,
    pub identity_is_epsilon: bool,
    pub all_bijections: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupFlags {
    pub variance: Variance,
    pub unital_group: Flag,
    pub invertible_group: Flag,
    pub closed_group_covariant: Flag,
    pub closed_group_contravariant: Flag,
    pub monoidal: Flag,
    pub premonoidal: Flag,
}

impl GroupFlags {
    pub fn closed_group(&self) -> &Flag {
        match self.variance {
            Variance::Covariant => &self.closed_group_covariant,
            Variance::Contravariant => &self.closed_group_contravariant,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationReport {
    pub unital_set: Flag,
    pub invertible_set: Flag,
    pub closed_set: Flag,
    pub reversible: Flag,
    /// The three reversibility conditions: a two-sided witness, unique
    /// solvability, bijectivity. They always agree.
    pub reversible_conditions: [bool; 3],
    pub transitive: Flag,
    pub free: Flag,
    pub regular: Flag,
    pub injective_as_function: Flag,
    pub image: ImageStructure,
    pub group: Option<GroupFlags>,
    domain_name: String,
}

impl ClassificationReport {
    pub fn group_flags(&self) -> Result<&GroupFlags, ActionError> {
        self.group
            .as_ref()
            .ok_or_else(|| ActionError::NotAGroupDomain(self.domain_name.clone()))
    }

    pub fn unital_group(&self) -> Result<&Flag, ActionError> {
        Ok(&self.group_flags()?.unital_group)
    }

    pub fn invertible_group(&self) -> Result<&Flag, ActionError> {
        Ok(&self.group_flags()?.invertible_group)
    }

    pub fn closed_group_covariant(&self) -> Result<&Flag, ActionError> {
        Ok(&self.group_flags()?.closed_group_covariant)
    }

    pub fn closed_group_contravariant(&self) -> Result<&Flag, ActionError> {
        Ok(&self.group_flags()?.closed_group_contravariant)
    }

    pub fn monoidal(&self) -> Result<&Flag, ActionError> {
        Ok(&self.group_flags()?.monoidal)
    }

    pub fn premonoidal(&self) -> Result<&Flag, ActionError> {
        Ok(&self.group_flags()?.premonoidal)
    }

    /// Every flag under its report key, in report order.
    pub fn flags(&self) -> Vec<(&'static str, &Flag)> {
        let mut out = vec![
            ("unital_set", &self.unital_set),
            ("invertible_set", &self.invertible_set),
            ("closed_set", &self.closed_set),
            ("reversible", &self.reversible),
            ("transitive", &self.transitive),
            ("free", &self.free),
            ("regular", &self.regular),
            ("injective_as_function", &self.injective_as_function),
        ];
        if let Some(g) = &self.group {
            out.extend([
                ("unital_group", &g.unital_group),
                ("invertible_group", &g.invertible_group),
                ("closed_group_covariant", &g.closed_group_covariant),
                ("closed_group_contravariant", &g.closed_group_contravariant),
                ("monoidal", &g.monoidal),
                ("premonoidal", &g.premonoidal),
            ]);
        }
        out
    }
}

pub fn classify(a: &Action) -> ClassificationReport {
    classify_with(a, Variance::Covariant)
}

pub fn classify_with(a: &Action, variance: Variance) -> ClassificationReport {
    let k = a.domain_size();
    let n = a.carrier_size();
    let maps = a.maps();
    let eps = Endofunction::identity(n);

    let first_moved = |f: &Endofunction| (0..n).find(|&x| f.apply(x) != x);

    let unital_set = if a.image_position(&eps).is_some() {
        Flag::ok()
    } else {
        Flag::fail(
            (0..k)
                .flat_map(|g| [Slot::Domain(g), Slot::Point(first_moved(&maps[g]).unwrap())])
                .collect(),
        )
    };

    let invertible_set = Flag::from_witness(
        (0..k)
            .find(|&g| {
                !(0..k).any(|h| {
                    (0..n).all(|x| maps[g].apply(maps[h].apply(x)) == x && maps[h].apply(maps[g].apply(x)) == x)
                })
            })
            .map(|g| vec![Slot::Domain(g)]),
    );

    let closed_set = Flag::from_witness((0..k).find_map(|g| {
        (0..k)
            .find(|&h| a.image_position(&maps[g].compose_unchecked(&maps[h])).is_none())
            .map(|h| vec![Slot::Domain(g), Slot::Domain(h)])
    }));

    let c1 = maps.iter().all(|m| m.two_sided_witness().is_some());
    let c2 = maps.iter().all(|m| m.uniquely_solvable());
    let c3 = maps.iter().all(|m| m.is_bijection());
    assert!(c1 == c2 && c2 == c3, "reversibility conditions disagree");
    let reversible = Flag::from_witness((0..k).find_map(|g| {
        let counts = maps[g].preimage_counts();
        counts
            .iter()
            .position(|&c| c != 1)
            .map(|y| vec![Slot::Domain(g), Slot::Point(y)])
    }));

    let transitive = Flag::from_witness((0..n).find_map(|x| {
        let mut hit = vec![false; n];
        for m in maps {
            hit[m.apply(x)] = true;
        }
        hit.iter()
            .position(|&h| !h)
            .map(|y| vec![Slot::Point(x), Slot::Point(y)])
    }));

    let free = Flag::from_witness((0..n).find_map(|x| {
        (0..k).find_map(|g| {
            (g + 1..k)
                .find(|&h| maps[g].apply(x) == maps[h].apply(x))
                .map(|h| vec![Slot::Point(x), Slot::Domain(g), Slot::Domain(h)])
        })
    }));

    let regular = transitive.and(&free);

    let injective_as_function = Flag::from_witness((0..k).find_map(|g| {
        (g + 1..k)
            .find(|&h| a.image_of(g) == a.image_of(h))
            .map(|h| vec![Slot::Domain(g), Slot::Domain(h)])
    }));

    let image = image_structure(a, &eps);

    let group = a.domain().group().map(|grp| {
        let e = grp.identity();
        let unital_group = Flag::from_witness(first_moved(&maps[e]).map(|x| vec![Slot::Domain(e), Slot::Point(x)]));
        let invertible_group = Flag::from_witness((0..k).find_map(|g| {
            let gi = grp.inverse(g);
            (0..n)
                .find(|&x| maps[g].apply(maps[gi].apply(x)) != x || maps[gi].apply(maps[g].apply(x)) != x)
                .map(|x| vec![Slot::Domain(g), Slot::Point(x)])
        }));
        let closed_in = |cov: bool| {
            Flag::from_witness((0..k).find_map(|g| {
                (0..k).find_map(|h| {
                    let gh = grp.mul(g, h);
                    (0..n)
                        .find(|&x| {
                            let lhs = if cov {
                                maps[g].apply(maps[h].apply(x))
                            } else {
                                maps[h].apply(maps[g].apply(x))
                            };
                            lhs != maps[gh].apply(x)
                        })
                        .map(|x| vec![Slot::Domain(g), Slot::Domain(h), Slot::Point(x)])
                })
            }))
        };
        let closed_group_covariant = closed_in(true);
        let closed_group_contravariant = closed_in(false);
        let chosen = match variance {
            Variance::Covariant => &closed_group_covariant,
            Variance::Contravariant => &closed_group_contravariant,
        };
        let monoidal = unital_group.and(chosen);
        let premonoidal = unital_group.and(&closed_set);
        GroupFlags {
            variance,
            unital_group,
            invertible_group,
            closed_group_covariant,
            closed_group_contravariant,
            monoidal,
            premonoidal,
        }
    });

    ClassificationReport {
        unital_set,
        invertible_set,
        closed_set,
        reversible,
        reversible_conditions: [c1, c2, c3],
        transitive,
        free,
        regular,
        injective_as_function,
        image,
        group,
        domain_name: a.domain().elements().name().to_string(),
    }
}

fn image_structure(a: &Action, eps: &Endofunction) -> ImageStructure {
    let img = a.image();
    let m = img.len();
    let mut comp = vec![None; m * m];
    for i in 0..m {
        for j in 0..m {
            comp[i * m + j] = a.image_position(&img[i].compose_unchecked(&img[j]));
        }
    }
    let closed = comp.iter().all(Option::is_some);
    let identity = if closed {
        (0..m).find(|&u| (0..m).all(|f| comp[u * m + f] == Some(f) && comp[f * m + u] == Some(f)))
    } else {
        None
    };
    let is_group = identity
        .is_some_and(|u| (0..m).all(|f| (0..m).any(|h| comp[f * m + h] == Some(u) && comp[h * m + f] == Some(u))));
    ImageStructure {
        size: m,
        closed,
        is_monoid: identity.is_some(),
        is_group,
        identity,
        identity_is_epsilon: identity.is_some_and(|u| &img[u] == eps),
        all_bijections: img.iter().all(Endofunction::is_bijection),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::actions::enumerate;
    use crate::actions::fixtures::{c8_on_q, eps_phi};
    use crate::carriers::FiniteSet;
    use crate::groups::{catalog, FiniteGroup};

    #[test]
    fn eps_phi_report() {
        let a = eps_phi();
        let r = classify(&a);
        let g = r.group_flags().unwrap();
        assert!(g.closed_group_covariant.holds);
        assert!(r.image.is_group);
        assert!(!r.image.identity_is_epsilon);
        assert!(!r.unital_set.holds);
        assert!(!g.unital_group.holds);
        assert!(!g.monoidal.holds);
        assert!(!r.reversible.holds);
        assert_eq!(r.reversible_conditions, [false, false, false]);
        // ε moves b, so does φ
        assert_eq!(r.unital_set.witness.as_ref().unwrap().render(&a), "(e, b, f, b)");
        assert_eq!(r.reversible.witness.as_ref().unwrap().render(&a), "(e, a)");
        assert_eq!(g.unital_group.witness.as_ref().unwrap().render(&a), "(e, b)");
    }

    #[test]
    fn c8_on_q_report() {
        let a = c8_on_q();
        let r = classify(&a);
        let g = r.group_flags().unwrap();
        assert!(g.unital_group.holds);
        assert!(r.closed_set.holds);
        assert!(r.regular.holds);
        assert!(g.premonoidal.holds);
        assert!(g.invertible_group.holds);
        assert!(!g.monoidal.holds);
        assert!(!g.closed_group_contravariant.holds);
        // σ(a)∘σ(a) is left multiplication by -1, σ(a2) by j
        let w = g.monoidal.witness.as_ref().unwrap().render(&a);
        assert_eq!(w, "(a, a, 1)");
        assert!(r.image.is_group && r.image.identity_is_epsilon);
    }

    #[test]
    fn regular_representation_is_monoidal() {
        let z3 = catalog("Z3").unwrap();
        let r = classify(&Action::right_regular(&z3));
        let g = r.group_flags().unwrap();
        for f in [&r.unital_set, &r.closed_set, &r.regular, &g.monoidal, &g.premonoidal] {
            assert!(f.holds);
        }
    }

    #[test]
    fn left_and_right_regular_variance() {
        let s3 = catalog("S3").unwrap();
        let left = classify(&Action::left_regular(&s3));
        let right = classify(&Action::right_regular(&s3));
        assert!(left.closed_group_covariant().unwrap().holds);
        assert!(!left.closed_group_contravariant().unwrap().holds);
        assert!(right.closed_group_contravariant().unwrap().holds);
        assert!(!right.closed_group_covariant().unwrap().holds);
        let rc = classify_with(&Action::right_regular(&s3), Variance::Contravariant);
        assert!(rc.monoidal().unwrap().holds);
    }

    #[test]
    fn opposite_swaps_variances() {
        for a in [eps_phi(), c8_on_q(), Action::left_regular(&catalog("D4").unwrap())] {
            let r = classify(&a);
            let o = classify(&a.opposite().unwrap());
            let (rg, og) = (r.group_flags().unwrap(), o.group_flags().unwrap());
            assert_eq!(rg.closed_group_covariant.holds, og.closed_group_contravariant.holds);
            assert_eq!(rg.closed_group_contravariant.holds, og.closed_group_covariant.holds);
            assert_eq!(rg.premonoidal.holds, og.premonoidal.holds);
            assert_eq!(r.regular, o.regular);
        }
    }

    #[test]
    fn abelian_opposite_changes_nothing() {
        let z4 = catalog("Z4").unwrap();
        let x = FiniteSet::indexed("X", 2).unwrap();
        for a in enumerate(z4.into(), x).step_by(7) {
            let (r, o) = (classify(&a), classify(&a.opposite().unwrap()));
            assert_eq!(r.flags(), o.flags());
            assert_eq!(r.image, o.image);
        }
    }

    #[test]
    fn bare_set_domain_has_no_group_flags() {
        let s = FiniteSet::new("S", ["p", "q"]).unwrap();
        let a = Action::trivial(s, FiniteSet::indexed("X", 2).unwrap());
        let r = classify(&a);
        assert!(matches!(r.monoidal(), Err(ActionError::NotAGroupDomain(_))));
        assert_eq!(r.flags().len(), 8);
    }

    #[test]
    fn degenerate_domains() {
        let z1 = catalog("Z1").unwrap();
        let one = FiniteSet::indexed("X", 1).unwrap();
        let r = classify(&Action::trivial(z1.clone(), one));
        assert!(r.regular.holds && r.monoidal().unwrap().holds);
        let r2 = classify(&Action::trivial(z1, FiniteSet::indexed("X", 2).unwrap()));
        assert!(r2.monoidal().unwrap().holds);
        assert!(!r2.regular.holds);
    }

    // Exhaustive structural checks at |G| ≤ 2 / |X| ≤ 3 and |G| = 3, |X| ≤ 2.
    fn small_actions() -> Vec<Action> {
        let mut out = Vec::new();
        for (g, n) in [("Z1", 1), ("Z1", 3), ("Z2", 1), ("Z2", 2), ("Z2", 3), ("Z3", 2)] {
            let grp: FiniteGroup = catalog(g).unwrap();
            out.extend(enumerate(grp.into(), FiniteSet::indexed("X", n).unwrap()));
        }
        out
    }

    #[test]
    fn set_level_implications() {
        for a in small_actions() {
            let r = classify(&a);
            let [c1, c2, c3] = r.reversible_conditions;
            assert!(c1 == c2 && c2 == c3);
            if r.invertible_set.holds {
                assert!(r.reversible.holds);
            }
            if r.closed_set.holds && r.unital_set.holds {
                assert!(r.image.is_monoid);
            }
            if r.closed_set.holds && r.invertible_set.holds {
                assert!(r.image.is_group);
            }
            for (_, f) in r.flags() {
                assert_eq!(f.holds, f.witness.is_none());
            }
            let g = r.group_flags().unwrap();
            assert_eq!(g.monoidal.holds, g.unital_group.holds && g.closed_group_covariant.holds);
            assert_eq!(g.premonoidal.holds, g.unital_group.holds && r.closed_set.holds);
            assert_eq!(r.regular.holds, r.transitive.holds && r.free.holds);
        }
    }

    #[test]
    fn free_action_lemmas() {
        for a in small_actions() {
            let r = classify(&a);
            if !r.free.holds {
                continue;
            }
            assert!(r.injective_as_function.holds);
            let k = a.domain_size();
            for g in 0..k {
                for h in 0..k {
                    if (0..a.carrier_size()).any(|x| a.apply(g, x) == a.apply(h, x)) {
                        assert_eq!(g, h);
                    }
                }
                if r.unital_group().unwrap().holds && a.map(g).fixed_points().next().is_some() {
                    assert!(a.map(g).is_identity());
                }
            }
        }
    }

    #[test]
    fn closed_group_actions_give_groups() {
        for a in small_actions() {
            let r = classify(&a);
            let g = r.group_flags().unwrap();
            if g.closed_group_covariant.holds {
                assert!(r.image.is_group);
                let e = a.domain().group().unwrap().identity();
                assert_eq!(r.image.identity, Some(a.image_of(e)));
            }
            if g.monoidal.holds {
                let grp = a.domain().group().unwrap();
                assert!(a.map(grp.identity()).is_identity());
                assert!(r.image.all_bijections);
                for x in 0..a.domain_size() {
                    assert_eq!(a.map(grp.inverse(x)), &a.map(x).inverse().unwrap());
                }
            }
        }
    }

    #[test]
    fn regular_premonoidal_translation_groups() {
        let mut seen = 0;
        for a in small_actions().into_iter().chain([c8_on_q()]) {
            let r = classify(&a);
            if !(r.regular.holds && r.premonoidal().unwrap().holds) {
                continue;
            }
            seen += 1;
            assert!(r.image.is_group && r.image.identity_is_epsilon);
            for f in a.image() {
                if f.fixed_points().next().is_some() {
                    assert!(f.is_identity());
                }
            }
        }
        assert!(seen > 1);
    }
}
