//! Structure-level regularity, decided straight from the defining
//! inequalities:
//!
//! | property           | every `a` satisfies |
//! |--------------------|---------------------|
//! | regular            | `a ≤ aea`           |
//! | intra-regular      | `a ≤ ea²e`          |
//! | *-regular          | `a ≤ a*ea*`         |
//! | *-intra-regular    | `a ≤ ea*a*e`        |

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::structure::{Elem, OrderedAlgebra, Tier};

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FailingElements {
    pub regular: Vec<Elem>,
    pub intra_regular: Vec<Elem>,
    pub star_regular: Vec<Elem>,
    pub star_intra_regular: Vec<Elem>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegularityProfile {
    pub regular: bool,
    pub intra_regular: bool,
    /// `None` without an involution.
    pub star_regular: Option<bool>,
    pub star_intra_regular: Option<bool>,
    pub failing: FailingElements,
}

impl RegularityProfile {
    /// Starred properties imply their plain counterparts.
    pub fn is_consistent(&self) -> bool {
        (self.star_regular != Some(true) || self.regular)
            && (self.star_intra_regular != Some(true) || self.intra_regular)
    }
}

pub fn is_regular_element(s: &OrderedAlgebra, e: Elem, a: Elem) -> bool {
    s.leq(a, s.word(&[a, e, a]))
}

pub fn is_intra_regular_element(s: &OrderedAlgebra, e: Elem, a: Elem) -> bool {
    s.leq(a, s.word(&[e, a, a, e]))
}

pub fn is_star_regular_element(s: &OrderedAlgebra, e: Elem, a: Elem) -> bool {
    let sa = s.st(a);
    s.leq(a, s.word(&[sa, e, sa]))
}

pub fn is_star_intra_regular_element(s: &OrderedAlgebra, e: Elem, a: Elem) -> bool {
    let sa = s.st(a);
    s.leq(a, s.word(&[e, sa, sa, e]))
}

/// Decides all four properties; requires a greatest element.
pub fn regularity_profile(s: &OrderedAlgebra) -> Result<RegularityProfile> {
    let e = s.greatest().ok_or(Error::TierRequired(Tier::Poe))?;
    let failing_by = |pred: fn(&OrderedAlgebra, Elem, Elem) -> bool| -> Vec<Elem> {
        s.elements().filter(|&a| !pred(s, e, a)).collect()
    };
    let mut failing = FailingElements {
        regular: failing_by(is_regular_element),
        intra_regular: failing_by(is_intra_regular_element),
        ..Default::default()
    };
    let (star_regular, star_intra_regular) = if s.has(Tier::Involution) {
        failing.star_regular = failing_by(is_star_regular_element);
        failing.star_intra_regular = failing_by(is_star_intra_regular_element);
        (
            Some(failing.star_regular.is_empty()),
            Some(failing.star_intra_regular.is_empty()),
        )
    } else {
        (None, None)
    };
    Ok(RegularityProfile {
        regular: failing.regular.is_empty(),
        intra_regular: failing.intra_regular.is_empty(),
        star_regular,
        star_intra_regular,
        failing,
    })
}
