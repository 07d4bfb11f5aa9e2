//! Principal filters `N(x)` and the partition of a structure into classes of
//! elements generating the same filter.
//!
//! A filter is a subsemigroup `F` that is closed upward and closed under
//! divisors: `ab ∈ F` implies `a, b ∈ F`. `N(x)` is computed by saturating
//! `{x}` under those three rules; [`filter_oracle`] intersects every filter
//! containing `x` and exists only to certify the saturation.

use serde::{Deserialize, Serialize};

use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::structure::{Elem, OrderedAlgebra, Tier};

/// Largest order [`filter_oracle`] accepts; it scans `2^n` subsets.
pub const ORACLE_MAX_ORDER: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FilterSet {
    pub generator: Elem,
    pub members: ElemSet,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NClassPartition {
    pub blocks: Vec<ElemSet>,
    pub block_greatest: Vec<Option<Elem>>,
}

impl NClassPartition {
    pub fn block_of(&self, x: Elem) -> usize {
        self.blocks
            .iter()
            .position(|b| b.contains(x))
            .expect("partition covers every element")
    }
}

/// One saturation pass: products, upward closure, divisors.
fn saturate_once(s: &OrderedAlgebra, f: ElemSet) -> ElemSet {
    let mut next = f;
    for a in f.iter() {
        for b in f.iter() {
            next.insert(s.mul(a, b));
        }
        for b in s.elements() {
            if s.leq(a, b) {
                next.insert(b);
            }
        }
    }
    for a in s.elements() {
        for b in s.elements() {
            if f.contains(s.mul(a, b)) {
                next.insert(a);
                next.insert(b);
            }
        }
    }
    next
}

/// `N(x)` with the number of saturation rounds, the last of which changes
/// nothing.
pub fn filter_generated_with_rounds(s: &OrderedAlgebra, x: Elem) -> (FilterSet, usize) {
    let mut members = ElemSet::singleton(x);
    let mut rounds = 0;
    loop {
        rounds += 1;
        let next = saturate_once(s, members);
        if next == members {
            break;
        }
        members = next;
    }
    (FilterSet { generator: x, members }, rounds)
}

pub fn filter_generated(s: &OrderedAlgebra, x: Elem) -> FilterSet {
    filter_generated_with_rounds(s, x).0
}

/// `N(x)` for every `x`, indexed by generator.
pub fn all_filters(s: &OrderedAlgebra) -> Vec<ElemSet> {
    s.elements().map(|x| filter_generated(s, x).members).collect()
}

pub fn is_filter(s: &OrderedAlgebra, f: ElemSet) -> bool {
    let subsemigroup = f.iter().all(|a| f.iter().all(|b| f.contains(s.mul(a, b))));
    let upward = f.iter().all(|a| s.elements().all(|b| !s.leq(a, b) || f.contains(b)));
    let divisors = s
        .elements()
        .all(|a| s.elements().all(|b| !f.contains(s.mul(a, b)) || (f.contains(a) && f.contains(b))));
    subsemigroup && upward && divisors
}

/// Intersection of every nonempty filter containing `x`, by subset scan.
pub fn filter_oracle(s: &OrderedAlgebra, x: Elem) -> Result<ElemSet> {
    let n = s.n();
    if n > ORACLE_MAX_ORDER {
        return Err(Error::TooLarge {
            what: "the filter oracle",
            order: n,
            limit: ORACLE_MAX_ORDER,
        });
    }
    let mut acc = ElemSet::full(n);
    for bits in 0u32..(1 << n) {
        let cand = ElemSet::from_bits(bits);
        if cand.contains(x) && is_filter(s, cand) {
            acc = acc.intersection(cand);
        }
    }
    Ok(acc)
}

/// `{y | x ≤ e y* e}`.
pub fn star_sandwich_set(s: &OrderedAlgebra, x: Elem) -> Result<ElemSet> {
    let e = s.greatest().ok_or(Error::TierRequired(Tier::Poe))?;
    if !s.has(Tier::Involution) {
        return Err(Error::TierRequired(Tier::Involution));
    }
    Ok(s.elements().filter(|&y| s.leq(x, s.word(&[e, s.st(y), e]))).collect())
}

/// Greatest element of `block` under the structure's order, if any.
pub fn greatest_in(s: &OrderedAlgebra, block: ElemSet) -> Option<Elem> {
    block.iter().find(|&g| block.iter().all(|y| s.leq(y, g)))
}

/// Classes of equal `N(x)`, ordered by least member.
pub fn n_class_partition(s: &OrderedAlgebra) -> NClassPartition {
    partition_from_filters(s, &all_filters(s))
}

pub fn partition_from_filters(s: &OrderedAlgebra, filters: &[ElemSet]) -> NClassPartition {
    let mut blocks: Vec<ElemSet> = Vec::new();
    let mut keys: Vec<ElemSet> = Vec::new();
    for x in s.elements() {
        match keys.iter().position(|&k| k == filters[x]) {
            Some(i) => {
                blocks[i].insert(x);
            }
            None => {
                keys.push(filters[x]);
                blocks.push(ElemSet::singleton(x));
            }
        }
    }
    let block_greatest = blocks.iter().map(|&b| greatest_in(s, b)).collect();
    NClassPartition { blocks, block_greatest }
}
