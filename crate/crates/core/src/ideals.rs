//! Ideal elements, the generated ideal elements `l(a) = a ∨ ea` and
//! `r(a) = a ∨ ae`, and per-element classification.

use serde::{Deserialize, Serialize};

use crate::structure::{Elem, OrderedAlgebra, Tier};

/// Outcome of a predicate that may be undecidable on a given structure.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Flag {
    Holds,
    Fails,
    /// A meet the definition presupposes does not exist.
    MeetUndefined,
    /// The structure lacks a greatest element or an involution.
    NotApplicable,
}

impl Flag {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Flag::Holds
        } else {
            Flag::Fails
        }
    }

    pub fn holds(self) -> bool {
        self == Flag::Holds
    }

    /// `Some(b)` when decided.
    pub fn decided(self) -> Option<bool> {
        match self {
            Flag::Holds => Some(true),
            Flag::Fails => Some(false),
            _ => None,
        }
    }

    fn symbol(self) -> &'static str {
        match self {
            Flag::Holds => "+",
            Flag::Fails => "-",
            Flag::MeetUndefined => "?",
            Flag::NotApplicable => ".",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementClassification {
    pub element: Elem,
    pub idempotent: bool,
    pub left_ideal: bool,
    pub right_ideal: bool,
    pub two_sided_ideal: bool,
    pub quasi_ideal: Flag,
    pub bi_ideal: Flag,
    pub star_left: Flag,
    pub star_right: Flag,
    pub star_quasi: Flag,
    pub star_bi: Flag,
    pub semiprime: bool,
    pub star_semiprime: Flag,
}

impl ElementClassification {
    pub const COLUMNS: [&'static str; 12] = [
        "idem", "left", "right", "ideal", "quasi", "bi", "*left", "*right", "*quasi", "*bi", "sprime", "*sprime",
    ];

    /// One symbol per column: `+` holds, `-` fails, `?` meet undefined,
    /// `.` not applicable.
    pub fn symbols(&self) -> [&'static str; 12] {
        let b = |x: bool| Flag::from_bool(x).symbol();
        [
            b(self.idempotent),
            b(self.left_ideal),
            b(self.right_ideal),
            b(self.two_sided_ideal),
            self.quasi_ideal.symbol(),
            self.bi_ideal.symbol(),
            self.star_left.symbol(),
            self.star_right.symbol(),
            self.star_quasi.symbol(),
            self.star_bi.symbol(),
            b(self.semiprime),
            self.star_semiprime.symbol(),
        ]
    }
}

fn involution(s: &OrderedAlgebra) -> bool {
    s.has(Tier::Involution)
}

/// `xa ≤ a` for every `x`.
pub fn is_left_ideal(s: &OrderedAlgebra, a: Elem) -> bool {
    s.elements().all(|x| s.leq(s.mul(x, a), a))
}

/// `ax ≤ a` for every `x`.
pub fn is_right_ideal(s: &OrderedAlgebra, a: Elem) -> bool {
    s.elements().all(|x| s.leq(s.mul(a, x), a))
}

pub fn is_two_sided_ideal(s: &OrderedAlgebra, a: Elem) -> bool {
    is_left_ideal(s, a) && is_right_ideal(s, a)
}

/// `ae ∧ ea ≤ a`, provided the meet exists.
pub fn quasi_ideal(s: &OrderedAlgebra, a: Elem) -> Flag {
    let Some(e) = s.greatest() else {
        return Flag::NotApplicable;
    };
    match s.meet(s.mul(a, e), s.mul(e, a)) {
        Some(m) => Flag::from_bool(s.leq(m, a)),
        None => Flag::MeetUndefined,
    }
}

/// `aea ≤ a`.
pub fn bi_ideal(s: &OrderedAlgebra, a: Elem) -> Flag {
    match s.greatest() {
        Some(e) => Flag::from_bool(s.leq(s.word(&[a, e, a]), a)),
        None => Flag::NotApplicable,
    }
}

/// `a*e ≤ a`.
pub fn star_right_ideal(s: &OrderedAlgebra, a: Elem) -> Flag {
    match s.greatest() {
        Some(e) if involution(s) => Flag::from_bool(s.leq(s.mul(s.st(a), e), a)),
        _ => Flag::NotApplicable,
    }
}

/// `ea* ≤ a`.
pub fn star_left_ideal(s: &OrderedAlgebra, a: Elem) -> Flag {
    match s.greatest() {
        Some(e) if involution(s) => Flag::from_bool(s.leq(s.mul(e, s.st(a)), a)),
        _ => Flag::NotApplicable,
    }
}

/// `a*e ∧ ea* ≤ a`, provided the meet exists.
pub fn star_quasi_ideal(s: &OrderedAlgebra, a: Elem) -> Flag {
    match s.greatest() {
        Some(e) if involution(s) => {
            let sa = s.st(a);
            match s.meet(s.mul(sa, e), s.mul(e, sa)) {
                Some(m) => Flag::from_bool(s.leq(m, a)),
                None => Flag::MeetUndefined,
            }
        }
        _ => Flag::NotApplicable,
    }
}

/// `a*ea* ≤ a`.
pub fn star_bi_ideal(s: &OrderedAlgebra, a: Elem) -> Flag {
    match s.greatest() {
        Some(e) if involution(s) => {
            let sa = s.st(a);
            Flag::from_bool(s.leq(s.word(&[sa, e, sa]), a))
        }
        _ => Flag::NotApplicable,
    }
}

/// `t² ≤ a` implies `t ≤ a`, for every `t`.
pub fn is_semiprime(s: &OrderedAlgebra, a: Elem) -> bool {
    s.elements().all(|t| !s.leq(s.mul(t, t), a) || s.leq(t, a))
}

/// `t*t* ≤ a` implies `t ≤ a`, for every `t`.
pub fn star_semiprime(s: &OrderedAlgebra, a: Elem) -> Flag {
    if !involution(s) {
        return Flag::NotApplicable;
    }
    Flag::from_bool(s.elements().all(|t| {
        let st = s.st(t);
        !s.leq(s.mul(st, st), a) || s.leq(t, a)
    }))
}

/// `l(a) = a ∨ ea`; `None` without a greatest element or when the join is
/// undefined.
pub fn generated_left(s: &OrderedAlgebra, a: Elem) -> Option<Elem> {
    let e = s.greatest()?;
    s.join(a, s.mul(e, a))
}

/// `r(a) = a ∨ ae`; `None` without a greatest element or when the join is
/// undefined.
pub fn generated_right(s: &OrderedAlgebra, a: Elem) -> Option<Elem> {
    let e = s.greatest()?;
    s.join(a, s.mul(a, e))
}

/// Membership `x ∈ I(a)`: `x ≤ a`, `x ≤ ea`, `x ≤ ae` or `x ≤ eae`.
/// `None` without a greatest element.
pub fn in_ideal_generated(s: &OrderedAlgebra, x: Elem, a: Elem) -> Option<bool> {
    let e = s.greatest()?;
    Some(
        s.leq(x, a)
            || s.leq(x, s.mul(e, a))
            || s.leq(x, s.mul(a, e))
            || s.leq(x, s.word(&[e, a, e])),
    )
}

pub fn classify_element(s: &OrderedAlgebra, a: Elem) -> ElementClassification {
    let left_ideal = is_left_ideal(s, a);
    let right_ideal = is_right_ideal(s, a);
    ElementClassification {
        element: a,
        idempotent: s.mul(a, a) == a,
        left_ideal,
        right_ideal,
        two_sided_ideal: left_ideal && right_ideal,
        quasi_ideal: quasi_ideal(s, a),
        bi_ideal: bi_ideal(s, a),
        star_left: star_left_ideal(s, a),
        star_right: star_right_ideal(s, a),
        star_quasi: star_quasi_ideal(s, a),
        star_bi: star_bi_ideal(s, a),
        semiprime: is_semiprime(s, a),
        star_semiprime: star_semiprime(s, a),
    }
}

pub fn classify_all(s: &OrderedAlgebra) -> Vec<ElementClassification> {
    s.elements().map(|a| classify_element(s, a)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::{validate_structure, RawStructure};

    fn chain2() -> OrderedAlgebra {
        let raw = RawStructure::with_equality_order(vec![vec![0, 0], vec![0, 1]])
            .with_order_pairs(&[(0, 1)])
            .with_star(vec![0, 1]);
        validate_structure(raw).unwrap().0
    }

    /// Least left (right) ideal element above `a`, by scanning.
    fn least_ideal_above(s: &OrderedAlgebra, a: Elem, left: bool) -> Option<Elem> {
        let ok = |y: Elem| s.leq(a, y) && if left { is_left_ideal(s, y) } else { is_right_ideal(s, y) };
        let cands: Vec<Elem> = s.elements().filter(|&y| ok(y)).collect();
        cands.iter().copied().find(|&y| cands.iter().all(|&z| s.leq(y, z)))
    }

    #[test]
    fn chain_generated() {
        let s = chain2();
        assert_eq!(generated_left(&s, 0), Some(0));
        assert_eq!(generated_right(&s, 1), Some(1));
        for a in s.elements() {
            assert_eq!(generated_left(&s, a), least_ideal_above(&s, a, true));
            assert_eq!(generated_right(&s, a), least_ideal_above(&s, a, false));
        }
    }

    #[test]
    fn chain_ideal_membership() {
        let s = chain2();
        assert_eq!(in_ideal_generated(&s, 0, 0), Some(true));
        assert_eq!(in_ideal_generated(&s, 1, 0), Some(false));
        assert_eq!(in_ideal_generated(&s, 1, 1), Some(true));
    }

    #[test]
    fn chain_bottom_classification() {
        let c = classify_element(&chain2(), 0);
        assert!(c.idempotent && c.left_ideal && c.right_ideal && c.two_sided_ideal);
        assert_eq!(c.quasi_ideal, Flag::Holds);
        assert_eq!(c.bi_ideal, Flag::Holds);
        assert_eq!(c.star_quasi, Flag::Holds);
    }

    #[test]
    fn star_flags_not_applicable_without_involution() {
        let raw = RawStructure::with_equality_order(vec![vec![0, 0], vec![0, 1]]).with_order_pairs(&[(0, 1)]);
        let s = validate_structure(raw).unwrap().0;
        let c = classify_element(&s, 1);
        assert_eq!(c.star_left, Flag::NotApplicable);
        assert_eq!(c.star_semiprime, Flag::NotApplicable);
        assert_eq!(c.bi_ideal, Flag::Holds);
    }
}
