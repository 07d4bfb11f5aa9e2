//! Executable statements about involution ordered semigroups.
//!
//! Each [`Claim`] has a hypothesis (a set of axiom tiers plus an optional
//! structure-level premise) and a body quantified over `arity` elements. A
//! body instance may be vacuous, when its guard (for instance "`a` is a left
//! ideal element and `a ∧ b` exists") is not met; only non-vacuous instances
//! are counted. Two-way theorems are registered as separate directed claims.
//!
//! Claims compare definitions against characterizations and never reuse the
//! characterization they assert: regularity comes from [`crate::regularity`],
//! filters from saturation in [`crate::filters`].
//!
//! Besides the registry there is a small set of deliberately corrupted
//! [`mutants`], used to check that the harness can actually find
//! counterexamples.

use std::cell::OnceCell;
use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::filters::{all_filters, greatest_in, star_sandwich_set};
use crate::ideals::{classify_element, in_ideal_generated, ElementClassification, Flag};
use crate::regularity::{
    is_intra_regular_element, is_regular_element, is_star_intra_regular_element, is_star_regular_element,
    regularity_profile, RegularityProfile,
};
use crate::structure::{Elem, OrderedAlgebra, Tier, TierSet};

/// Whether a claim is a published statement, an intermediate step of its
/// proof, or a deliberately broken variant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClaimKind {
    Statement,
    ProofStep,
    Mutant,
}

/// Result of evaluating a claim body on one instantiation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Vacuous,
    Holds,
    Fails,
}

fn holds(b: bool) -> Outcome {
    if b {
        Outcome::Holds
    } else {
        Outcome::Fails
    }
}

#[derive(Clone, Copy)]
pub struct Premise {
    pub name: &'static str,
    pub test: fn(&Facts) -> bool,
}

#[derive(Clone, Copy)]
pub struct Claim {
    pub id: &'static str,
    /// The statement, as checked.
    pub anchor: &'static str,
    pub kind: ClaimKind,
    pub tiers: TierSet,
    pub premise: Option<Premise>,
    pub arity: usize,
    body: fn(&Facts, &[Elem]) -> Outcome,
}

impl Claim {
    /// Evaluates the body on one instantiation, ignoring the hypothesis.
    pub fn eval(&self, facts: &Facts, args: &[Elem]) -> Outcome {
        assert_eq!(args.len(), self.arity, "claim {} takes {} elements", self.id, self.arity);
        (self.body)(facts, args)
    }

    pub fn hypothesis_met(&self, facts: &Facts) -> bool {
        facts.s.has_all(self.tiers) && self.premise.is_none_or(|p| (p.test)(facts))
    }

    pub fn hypothesis(&self) -> String {
        let mut h = self.tiers.to_string();
        if let Some(p) = self.premise {
            h.push_str("; ");
            h.push_str(p.name);
        }
        h
    }
}

impl fmt::Debug for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Claim")
            .field("id", &self.id)
            .field("kind", &self.kind)
            .field("tiers", &self.tiers)
            .field("premise", &self.premise.map(|p| p.name))
            .field("arity", &self.arity)
            .finish()
    }
}

/// Everything a claim body may ask about one structure, computed once.
pub struct Facts<'a> {
    pub s: &'a OrderedAlgebra,
    class: Vec<ElementClassification>,
    profile: Option<RegularityProfile>,
    filters: OnceCell<Vec<ElemSet>>,
    sandwich: OnceCell<Vec<ElemSet>>,
}

impl<'a> Facts<'a> {
    pub fn new(s: &'a OrderedAlgebra) -> Self {
        Facts {
            s,
            class: s.elements().map(|a| classify_element(s, a)).collect(),
            profile: regularity_profile(s).ok(),
            filters: OnceCell::new(),
            sandwich: OnceCell::new(),
        }
    }

    pub fn e(&self) -> Elem {
        self.s.greatest().expect("claim needs a greatest element")
    }
    fn m(&self, a: Elem, b: Elem) -> Elem {
        self.s.mul(a, b)
    }
    fn w(&self, word: &[Elem]) -> Elem {
        self.s.word(word)
    }
    fn le(&self, a: Elem, b: Elem) -> bool {
        self.s.leq(a, b)
    }
    fn st(&self, a: Elem) -> Elem {
        self.s.st(a)
    }
    pub fn class(&self, a: Elem) -> &ElementClassification {
        &self.class[a]
    }
    fn left(&self, a: Elem) -> bool {
        self.class[a].left_ideal
    }
    fn right(&self, a: Elem) -> bool {
        self.class[a].right_ideal
    }
    fn ideal(&self, a: Elem) -> bool {
        self.class[a].two_sided_ideal
    }
    /// `l(a) = a ∨ ea`; needs joins.
    fn l(&self, a: Elem) -> Elem {
        self.s.join(a, self.m(self.e(), a)).expect("join-e structure")
    }
    /// `r(a) = a ∨ ae`; needs joins.
    fn r(&self, a: Elem) -> Elem {
        self.s.join(a, self.m(a, self.e())).expect("join-e structure")
    }
    pub fn profile(&self) -> Option<&RegularityProfile> {
        self.profile.as_ref()
    }
    fn regular(&self) -> bool {
        self.profile.as_ref().is_some_and(|p| p.regular)
    }
    fn star_regular(&self) -> bool {
        self.profile.as_ref().is_some_and(|p| p.star_regular == Some(true))
    }
    fn star_intra_regular(&self) -> bool {
        self.profile.as_ref().is_some_and(|p| p.star_intra_regular == Some(true))
    }
    /// `N(x)` for every `x`.
    pub fn filters(&self) -> &[ElemSet] {
        self.filters.get_or_init(|| all_filters(self.s))
    }
    /// `{y | x ≤ e y* e}` for every `x`.
    pub fn sandwich(&self) -> &[ElemSet] {
        self.sandwich.get_or_init(|| {
            self.s
                .elements()
                .map(|x| star_sandwich_set(self.s, x).expect("involution poe structure"))
                .collect()
        })
    }
    fn pairs(&self) -> impl Iterator<Item = (Elem, Elem)> + '_ {
        self.s.elements().flat_map(move |a| self.s.elements().map(move |b| (a, b)))
    }

    fn adjoint_bounds(&self) -> bool {
        self.s.elements().all(|a| {
            let sa = self.st(a);
            self.le(a, self.r(sa)) && self.le(a, self.l(sa))
        })
    }
    fn one_sided_idempotent_products(&self) -> bool {
        self.pairs().all(|(a, b)| {
            !(self.right(a) && self.left(b))
                || (self.m(a, a) == a && self.m(b, b) == b && self.class[self.m(a, b)].quasi_ideal.holds())
        })
    }
}

/// Status of one claim on one structure.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    NotApplicable,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::NotApplicable => "not-applicable",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimReport {
    pub id: String,
    pub status: Status,
    /// First failing instantiation, in enumeration order. Present iff the
    /// status is `Fail`; empty for structure-level bodies.
    pub counterexample: Option<Vec<Elem>>,
    pub instances_checked: u64,
    /// Passed without a single non-vacuous instance.
    pub vacuous: bool,
}

/// Serialized form of a [`ClaimReport`], witnesses given by label.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimRecord {
    pub id: String,
    pub status: Status,
    pub witness: Option<Vec<String>>,
    pub instances_checked: u64,
    pub vacuous: bool,
}

impl ClaimReport {
    pub fn to_record(&self, s: &OrderedAlgebra) -> ClaimRecord {
        ClaimRecord {
            id: self.id.clone(),
            status: self.status,
            witness: self.counterexample.as_ref().map(|w| s.labels_of(w)),
            instances_checked: self.instances_checked,
            vacuous: self.vacuous,
        }
    }
}

macro_rules! tiers {
    ($($t:ident),*) => { TierSet::of(&[$(Tier::$t),*]) };
}

const STAR_REGULAR: Premise = Premise {
    name: "*-regular",
    test: |f| f.star_regular(),
};
const STAR_INTRA_REGULAR: Premise = Premise {
    name: "*-intra-regular",
    test: |f| f.star_intra_regular(),
};
const REGULAR: Premise = Premise {
    name: "regular",
    test: |f| f.regular(),
};

fn statement(
    id: &'static str,
    anchor: &'static str,
    tiers: TierSet,
    premise: Option<Premise>,
    arity: usize,
    body: fn(&Facts, &[Elem]) -> Outcome,
) -> Claim {
    Claim {
        id,
        anchor,
        kind: ClaimKind::Statement,
        tiers,
        premise,
        arity,
        body,
    }
}

fn build_registry() -> Vec<Claim> {
    use Outcome::Vacuous;
    let inv_poe = tiers!(Involution, Poe);
    let inv_poe_sg = tiers!(Involution, Poe, PoSemigroup);
    let inv_je_sg = tiers!(Involution, JoinE, PoSemigroup);
    let inv_le_sg = tiers!(Involution, Le, PoSemigroup);

    let mut v = vec![
        statement(
            "prop04",
            "in an involution poe-groupoid with meets, every *-right or *-left ideal element is *-quasi-ideal",
            tiers!(Involution, Poe, Meet),
            None,
            1,
            |f, x| {
                let c = f.class(x[0]);
                if !(c.star_right.holds() || c.star_left.holds()) {
                    return Vacuous;
                }
                holds(c.star_quasi.holds())
            },
        ),
        statement(
            "prop04-bi",
            "in an involution poe-semigroup with meets, every *-quasi-ideal element is *-bi-ideal",
            tiers!(Involution, Poe, PoSemigroup, Meet),
            None,
            1,
            |f, x| {
                let c = f.class(x[0]);
                if !c.star_quasi.holds() {
                    return Vacuous;
                }
                holds(c.star_bi.holds())
            },
        ),
        statement(
            "prop05",
            "(a ∨ b)* = a* ∨ b* in a join-semilattice, (a ∧ b)* = a* ∧ b* in a meet-semilattice",
            tiers!(Involution),
            Some(Premise {
                name: "join- or meet-semilattice",
                test: |f| f.s.all_joins() || f.s.all_meets(),
            }),
            2,
            |f, x| {
                let (a, b) = (x[0], x[1]);
                let s = f.s;
                let mut ok = true;
                if s.all_joins() {
                    ok &= s.join(a, b).map(|j| f.st(j)) == s.join(f.st(a), f.st(b));
                }
                if s.all_meets() {
                    ok &= s.meet(a, b).map(|m| f.st(m)) == s.meet(f.st(a), f.st(b));
                }
                holds(ok)
            },
        ),
        statement(
            "prop06",
            "a·l(a*) = r(a)·a* and r(a*)·a = a*·l(a) in an involution join-e-semigroup",
            inv_je_sg,
            None,
            1,
            |f, x| {
                let a = x[0];
                let sa = f.st(a);
                holds(f.m(a, f.l(sa)) == f.m(f.r(a), sa) && f.m(f.r(sa), a) == f.m(sa, f.l(a)))
            },
        ),
        statement(
            "prop07",
            "a is a left (right) ideal element iff a* is a right (left) ideal element",
            inv_poe,
            None,
            1,
            |f, x| {
                let a = x[0];
                let sa = f.st(a);
                holds(f.left(a) == f.right(sa) && f.right(a) == f.left(sa))
            },
        ),
        statement(
            "prop07-quasi",
            "with meets, a is a quasi-ideal element iff a* is",
            tiers!(Involution, Poe, Meet),
            None,
            1,
            |f, x| {
                let a = x[0];
                holds(f.class(a).quasi_ideal == f.class(f.st(a)).quasi_ideal)
            },
        ),
        statement(
            "prop07-bi",
            "in an involution poe-semigroup, a is a bi-ideal element iff a* is",
            inv_poe_sg,
            None,
            1,
            |f, x| {
                let a = x[0];
                holds(f.class(a).bi_ideal == f.class(f.st(a)).bi_ideal)
            },
        ),
        statement(
            "prop08",
            "for a left ideal element a and right ideal element b, a* ∧ b* is quasi-ideal when (a*∧b*)e ∧ e(a*∧b*) exists",
            inv_poe,
            None,
            2,
            |f, x| {
                let (a, b) = (x[0], x[1]);
                if !(f.left(a) && f.right(b)) {
                    return Vacuous;
                }
                let Some(m) = f.s.meet(f.st(a), f.st(b)) else {
                    return Vacuous;
                };
                match f.class(m).quasi_ideal {
                    Flag::Holds => Outcome::Holds,
                    Flag::Fails => Outcome::Fails,
                    _ => Vacuous,
                }
            },
        ),
        statement(
            "prop08-idem",
            "in an involution regular poe-semigroup, a* is idempotent for every left or right ideal element a",
            inv_poe_sg,
            Some(REGULAR),
            1,
            |f, x| {
                let a = x[0];
                if !(f.left(a) || f.right(a)) {
                    return Vacuous;
                }
                let sa = f.st(a);
                holds(f.m(sa, sa) == sa)
            },
        ),
        statement(
            "prop09",
            "if a or b is a right ideal element, (ab)* is a bi-ideal element",
            inv_poe_sg,
            None,
            2,
            |f, x| {
                let (a, b) = (x[0], x[1]);
                if !(f.right(a) || f.right(b)) {
                    return Vacuous;
                }
                holds(f.class(f.st(f.m(a, b))).bi_ideal.holds())
            },
        ),
        statement(
            "prop11",
            "if x ∈ I(x*x*) for every x, ideal elements are *-semiprime",
            inv_poe_sg,
            Some(Premise {
                name: "x ∈ I(x*x*) for all x",
                test: |f| {
                    f.s.elements()
                        .all(|x| in_ideal_generated(f.s, x, f.m(f.st(x), f.st(x))) == Some(true))
                },
            }),
            2,
            |f, x| {
                let (a, t) = (x[0], x[1]);
                let st = f.st(t);
                if !(f.ideal(a) && f.le(f.m(st, st), a)) {
                    return Vacuous;
                }
                holds(f.le(t, a))
            },
        ),
        statement(
            "prop11-plain",
            "if x ∈ I(x²) for every x, ideal elements are semiprime",
            inv_poe_sg,
            Some(Premise {
                name: "x ∈ I(x²) for all x",
                test: |f| f.s.elements().all(|x| in_ideal_generated(f.s, x, f.m(x, x)) == Some(true)),
            }),
            2,
            |f, x| {
                let (a, t) = (x[0], x[1]);
                if !(f.ideal(a) && f.le(f.m(t, t), a)) {
                    return Vacuous;
                }
                holds(f.le(t, a))
            },
        ),
        statement(
            "thm13-fwd",
            "if S is *-regular, a ∧ b ≤ a*b* whenever a is a left ideal element or b a right ideal element and a ∧ b exists",
            inv_poe_sg,
            Some(STAR_REGULAR),
            2,
            |f, x| {
                let (a, b) = (x[0], x[1]);
                if !(f.left(a) || f.right(b)) {
                    return Vacuous;
                }
                let Some(m) = f.s.meet(a, b) else {
                    return Vacuous;
                };
                holds(f.le(m, f.m(f.st(a), f.st(b))))
            },
        ),
        statement(
            "thm13-conv",
            "an involution le-semigroup with a ∧ b ≤ b*a* for every left ideal element a and right ideal element b is regular",
            inv_le_sg,
            Some(Premise {
                name: "a ∧ b ≤ b*a* for left a, right b",
                test: |f| {
                    f.pairs().all(|(a, b)| {
                        !(f.left(a) && f.right(b)) || f.le(f.s.meet(a, b).unwrap(), f.m(f.st(b), f.st(a)))
                    })
                },
            }),
            1,
            |f, x| holds(is_regular_element(f.s, f.e(), x[0])),
        ),
        statement(
            "prop14",
            "in an involution *-regular join-e-semigroup, a ≤ r(a*) and a ≤ l(a*)",
            inv_je_sg,
            Some(STAR_REGULAR),
            1,
            |f, x| {
                let a = x[0];
                let sa = f.st(a);
                holds(f.le(a, f.r(sa)) && f.le(a, f.l(sa)))
            },
        ),
        statement(
            "prop15",
            "in an involution *-regular poe-semigroup, every left or right ideal element a has a = a*",
            inv_poe_sg,
            Some(STAR_REGULAR),
            1,
            |f, x| {
                let a = x[0];
                if !(f.left(a) || f.right(a)) {
                    return Vacuous;
                }
                holds(a == f.st(a))
            },
        ),
        statement(
            "prop15-bi",
            "in an involution *-regular poe-semigroup, every bi-ideal element b has b = b*",
            inv_poe_sg,
            Some(STAR_REGULAR),
            1,
            |f, x| {
                let b = x[0];
                if !f.class(b).bi_ideal.holds() {
                    return Vacuous;
                }
                holds(b == f.st(b))
            },
        ),
        statement(
            "prop16",
            "in an involution *-regular poe-semigroup with meets, ab is quasi-ideal for right a and left b",
            tiers!(Involution, Poe, PoSemigroup, Meet),
            Some(STAR_REGULAR),
            2,
            |f, x| {
                let (a, b) = (x[0], x[1]);
                if !(f.right(a) && f.left(b)) {
                    return Vacuous;
                }
                holds(f.class(f.m(a, b)).quasi_ideal.holds())
            },
        ),
        Claim {
            kind: ClaimKind::ProofStep,
            ..statement(
                "prop16-step",
                "in an involution *-regular poe-semigroup with meets, a ∧ b = ab for right a and left b",
                tiers!(Involution, Poe, PoSemigroup, Meet),
                Some(STAR_REGULAR),
                2,
                |f, x| {
                    let (a, b) = (x[0], x[1]);
                    if !(f.right(a) && f.left(b)) {
                        return Vacuous;
                    }
                    holds(f.s.meet(a, b) == Some(f.m(a, b)))
                },
            )
        },
        statement(
            "prop17",
            "an involution *-regular poe-semigroup is regular",
            inv_poe_sg,
            Some(STAR_REGULAR),
            1,
            |f, x| holds(is_regular_element(f.s, f.e(), x[0])),
        ),
        statement(
            "prop17-idem",
            "in a regular poe-semigroup, right and left ideal elements are idempotent",
            tiers!(Poe, PoSemigroup),
            Some(REGULAR),
            1,
            |f, x| {
                let a = x[0];
                if !(f.left(a) || f.right(a)) {
                    return Vacuous;
                }
                holds(f.m(a, a) == a)
            },
        ),
        statement(
            "prop18",
            "an involution le-semigroup with a ≤ r(a*), a ≤ l(a*) for all a, idempotent one-sided ideal elements and quasi-ideal products ab (a right, b left) is *-regular",
            inv_le_sg,
            Some(Premise {
                name: "a ≤ r(a*) ∧ l(a*); one-sided ideal elements idempotent; ab quasi-ideal",
                test: |f| f.adjoint_bounds() && f.one_sided_idempotent_products(),
            }),
            1,
            |f, x| holds(is_star_regular_element(f.s, f.e(), x[0])),
        ),
        statement(
            "thm19",
            "an involution le-semigroup is *-regular iff a ≤ r(a*) and a ≤ l(a*) for all a, right and left ideal elements are idempotent, and ab is quasi-ideal for right a, left b",
            inv_le_sg,
            None,
            0,
            |f, _| holds(f.star_regular() == (f.adjoint_bounds() && f.one_sided_idempotent_products())),
        ),
        statement(
            "thm20",
            "in a *-regular involution join-e-semigroup every *-bi-ideal element b equals r(b*)·l(b*)",
            inv_je_sg,
            Some(STAR_REGULAR),
            1,
            |f, x| {
                let b = x[0];
                if !f.class(b).star_bi.holds() {
                    return Vacuous;
                }
                let sb = f.st(b);
                let (r, l) = (f.r(sb), f.l(sb));
                holds(f.right(r) && f.left(l) && f.m(r, l) == b)
            },
        ),
        Claim {
            kind: ClaimKind::ProofStep,
            ..statement(
                "thm20-eq",
                "in a *-regular involution join-e-semigroup every *-bi-ideal element b satisfies b = b*eb*",
                inv_je_sg,
                Some(STAR_REGULAR),
                1,
                |f, x| {
                    let b = x[0];
                    if !f.class(b).star_bi.holds() {
                        return Vacuous;
                    }
                    let sb = f.st(b);
                    holds(b == f.w(&[sb, f.e(), sb]))
                },
            )
        },
        statement(
            "thm22-fwd",
            "if S is *-intra-regular, a ∧ b ≤ b*a* for left a and right b whenever a ∧ b exists",
            inv_poe_sg,
            Some(STAR_INTRA_REGULAR),
            2,
            |f, x| {
                let (a, b) = (x[0], x[1]);
                if !(f.left(a) && f.right(b)) {
                    return Vacuous;
                }
                let Some(m) = f.s.meet(a, b) else {
                    return Vacuous;
                };
                holds(f.le(m, f.m(f.st(b), f.st(a))))
            },
        ),
        statement(
            "thm22-conv",
            "an involution le-semigroup with a ∧ b ≤ a*b* for every left ideal element a and right ideal element b is intra-regular",
            inv_le_sg,
            Some(Premise {
                name: "a ∧ b ≤ a*b* for left a, right b",
                test: |f| {
                    f.pairs().all(|(a, b)| {
                        !(f.left(a) && f.right(b)) || f.le(f.s.meet(a, b).unwrap(), f.m(f.st(a), f.st(b)))
                    })
                },
            }),
            1,
            |f, x| holds(is_intra_regular_element(f.s, f.e(), x[0])),
        ),
        statement(
            "prop23",
            "if S is *-intra-regular, eabe = eb*a*e for all a, b",
            inv_poe_sg,
            Some(STAR_INTRA_REGULAR),
            2,
            |f, x| {
                let (a, b, e) = (x[0], x[1], f.e());
                holds(f.w(&[e, a, b, e]) == f.w(&[e, f.st(b), f.st(a), e]))
            },
        ),
        statement(
            "prop24-fwd",
            "if S is *-intra-regular, ideal elements are *-semiprime",
            inv_poe_sg,
            Some(STAR_INTRA_REGULAR),
            2,
            |f, x| {
                let (a, t) = (x[0], x[1]);
                let st = f.st(t);
                if !(f.ideal(a) && f.le(f.m(st, st), a)) {
                    return Vacuous;
                }
                holds(f.le(t, a))
            },
        ),
        statement(
            "prop24-conv",
            "if ideal elements are *-semiprime, S is intra-regular",
            inv_poe_sg,
            Some(Premise {
                name: "ideal elements *-semiprime",
                test: |f| {
                    f.s.elements()
                        .all(|a| !f.ideal(a) || f.class(a).star_semiprime.holds())
                },
            }),
            1,
            |f, x| holds(is_intra_regular_element(f.s, f.e(), x[0])),
        ),
        statement(
            "prop25",
            "an involution *-regular poe-semigroup is regular",
            inv_poe_sg,
            Some(STAR_REGULAR),
            1,
            |f, x| holds(is_regular_element(f.s, f.e(), x[0])),
        ),
        statement(
            "prop25-intra",
            "an involution *-intra-regular poe-semigroup is intra-regular",
            inv_poe_sg,
            Some(STAR_INTRA_REGULAR),
            1,
            |f, x| holds(is_intra_regular_element(f.s, f.e(), x[0])),
        ),
        statement(
            "thm26-fwd",
            "if S is *-intra-regular, N(x) = {y | x ≤ ey*e} for every x",
            inv_poe_sg,
            Some(STAR_INTRA_REGULAR),
            1,
            |f, x| holds(f.filters()[x[0]] == f.sandwich()[x[0]]),
        ),
        statement(
            "thm26-conv",
            "if N(x) = {y | x ≤ ey*e} for every x, S is *-intra-regular",
            inv_poe_sg,
            Some(Premise {
                name: "N(x) = {y | x ≤ ey*e} for all x",
                test: |f| f.filters() == f.sandwich(),
            }),
            1,
            |f, x| holds(is_star_intra_regular_element(f.s, f.e(), x[0])),
        ),
        statement(
            "prop27",
            "if S is *-intra-regular, ex*e lies in the class of x* and bounds every y in the class of x, which therefore has a greatest element",
            inv_poe_sg,
            Some(STAR_INTRA_REGULAR),
            1,
            |f, x| {
                let x = x[0];
                let n = f.filters();
                let g = f.w(&[f.e(), f.st(x), f.e()]);
                let class: ElemSet = f.s.elements().filter(|&y| n[y] == n[x]).collect();
                holds(
                    n[g] == n[f.st(x)]
                        && class.iter().all(|y| f.le(y, g))
                        && greatest_in(f.s, class).is_some(),
                )
            },
        ),
    ];
    v.shrink_to_fit();
    v
}

fn build_mutants() -> Vec<Claim> {
    use Outcome::Vacuous;
    let inv_poe_sg = tiers!(Involution, Poe, PoSemigroup);
    let mutant = |id, anchor, premise, arity, body| Claim {
        kind: ClaimKind::Mutant,
        ..statement(id, anchor, inv_poe_sg, Some(premise), arity, body)
    };
    vec![
        mutant(
            "mut-prop23-nostar",
            "if S is *-intra-regular, eabe = ebae",
            STAR_INTRA_REGULAR,
            2,
            |f: &Facts, x: &[Elem]| {
                let (a, b, e) = (x[0], x[1], f.e());
                holds(f.w(&[e, a, b, e]) == f.w(&[e, b, a, e]))
            },
        ),
        mutant(
            "mut-thm13-swap",
            "if S is *-regular, a ∧ b ≤ b*a* for left a or right b",
            STAR_REGULAR,
            2,
            |f: &Facts, x: &[Elem]| {
                let (a, b) = (x[0], x[1]);
                if !(f.left(a) || f.right(b)) {
                    return Vacuous;
                }
                let Some(m) = f.s.meet(a, b) else {
                    return Vacuous;
                };
                holds(f.le(m, f.m(f.st(b), f.st(a))))
            },
        ),
        mutant(
            "mut-prop15-any",
            "if S is *-regular, a = a* for every a",
            STAR_REGULAR,
            1,
            |f: &Facts, x: &[Elem]| holds(x[0] == f.st(x[0])),
        ),
        mutant(
            "mut-prop17-any",
            "in a regular poe-semigroup every element is idempotent",
            REGULAR,
            1,
            |f: &Facts, x: &[Elem]| holds(f.m(x[0], x[0]) == x[0]),
        ),
        mutant(
            "mut-thm26-nostar",
            "if S is *-intra-regular, N(x) = {y | x ≤ eye}",
            STAR_INTRA_REGULAR,
            1,
            |f: &Facts, x: &[Elem]| {
                let x = x[0];
                let e = f.e();
                let set: ElemSet = f.s.elements().filter(|&y| f.le(x, f.w(&[e, y, e]))).collect();
                holds(f.filters()[x] == set)
            },
        ),
    ]
}

/// The registry, in stable order.
pub fn list_claims() -> &'static [Claim] {
    static REG: OnceLock<Vec<Claim>> = OnceLock::new();
    REG.get_or_init(build_registry)
}

/// Deliberately corrupted variants of registered claims.
pub fn mutants() -> &'static [Claim] {
    static MUT: OnceLock<Vec<Claim>> = OnceLock::new();
    MUT.get_or_init(build_mutants)
}

/// Looks `id` up among registered claims and mutants.
pub fn find_claim(id: &str) -> Option<&'static Claim> {
    list_claims().iter().chain(mutants()).find(|c| c.id == id)
}

/// Resolves a comma-separated selection; `all` means the whole registry,
/// `mutants` every mutant.
pub fn resolve_claims(selection: &str) -> Result<Vec<&'static Claim>> {
    let mut out: Vec<&'static Claim> = Vec::new();
    let mut unknown = Vec::new();
    for id in selection.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        match id {
            "all" => out.extend(list_claims()),
            "mutants" => out.extend(mutants()),
            _ => match find_claim(id) {
                Some(c) => out.push(c),
                None => unknown.push(id.to_string()),
            },
        }
    }
    if !unknown.is_empty() {
        return Err(Error::UnknownClaims(unknown));
    }
    let mut seen = std::collections::HashSet::new();
    out.retain(|c| seen.insert(c.id));
    Ok(out)
}

/// Calls `f` on every tuple in `0..n` of length `arity`, in lexicographic
/// order, until it returns `false`.
fn for_each_tuple(n: usize, arity: usize, mut f: impl FnMut(&[Elem]) -> bool) {
    let mut t = vec![0; arity];
    loop {
        if !f(&t) {
            return;
        }
        let mut i = arity;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            t[i] += 1;
            if t[i] < n {
                break;
            }
            t[i] = 0;
        }
    }
}

pub fn check_with(facts: &Facts, claim: &Claim) -> ClaimReport {
    if !claim.hypothesis_met(facts) {
        return ClaimReport {
            id: claim.id.to_string(),
            status: Status::NotApplicable,
            counterexample: None,
            instances_checked: 0,
            vacuous: false,
        };
    }
    let mut instances = 0u64;
    let mut counterexample = None;
    for_each_tuple(facts.s.n(), claim.arity, |args| match claim.eval(facts, args) {
        Outcome::Vacuous => true,
        Outcome::Holds => {
            instances += 1;
            true
        }
        Outcome::Fails => {
            counterexample = Some(args.to_vec());
            false
        }
    });
    let status = if counterexample.is_some() { Status::Fail } else { Status::Pass };
    ClaimReport {
        id: claim.id.to_string(),
        status,
        vacuous: status == Status::Pass && instances == 0,
        counterexample,
        instances_checked: instances,
    }
}

pub fn check_claim(s: &OrderedAlgebra, id: &str) -> Result<ClaimReport> {
    let claim = find_claim(id).ok_or_else(|| Error::UnknownClaims(vec![id.to_string()]))?;
    Ok(check_with(&Facts::new(s), claim))
}

/// Checks a selection of claims on one structure, sharing the precomputation.
pub fn check_claims(s: &OrderedAlgebra, claims: &[&Claim]) -> Vec<ClaimReport> {
    let facts = Facts::new(s);
    claims.iter().map(|c| check_with(&facts, c)).collect()
}

pub fn check_all(s: &OrderedAlgebra) -> Vec<ClaimReport> {
    let facts = Facts::new(s);
    list_claims().iter().map(|c| check_with(&facts, c)).collect()
}

/// Re-evaluates a reported counterexample: `true` iff the hypothesis holds
/// and the body genuinely fails on `witness`.
pub fn replay(s: &OrderedAlgebra, id: &str, witness: &[Elem]) -> Result<bool> {
    let claim = find_claim(id).ok_or_else(|| Error::UnknownClaims(vec![id.to_string()]))?;
    let facts = Facts::new(s);
    Ok(witness.len() == claim.arity
        && witness.iter().all(|&a| a < s.n())
        && claim.hypothesis_met(&facts)
        && claim.eval(&facts, witness) == Outcome::Fails)
}
