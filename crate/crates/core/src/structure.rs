//! The finite-structure data model and its axiom tiers.
//!
//! A [`RawStructure`] is whatever the caller hands us: tables that are
//! well-formed but not yet known to satisfy anything. [`validate_structure`]
//! turns it into an immutable [`OrderedAlgebra`] that records, independently,
//! every axiom tier the tables attain, together with the cached greatest
//! element and the (partial) join and meet tables.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::elemset::ElemSet;
use crate::error::{Error, Result};

/// Elements are the canonical indices `0..n`; labels are presentation only.
pub type Elem = usize;

/// Largest supported structure; [`ElemSet`] is a `u32` bitmask.
pub const MAX_ORDER: usize = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Tier {
    /// Partial order compatible with multiplication on both sides.
    PoGroupoid,
    /// Ordered groupoid with associative multiplication.
    PoSemigroup,
    /// Ordered groupoid with a greatest element `e`.
    Poe,
    /// poe structure that is a join-semilattice with multiplication
    /// distributing over joins on both sides.
    JoinE,
    /// Ordered groupoid in which every pair has a meet.
    Meet,
    /// `JoinE` whose order is a lattice.
    Le,
    /// Order-preserving unary `*` with `(a*)* = a` and `(ab)* = b*a*`.
    Involution,
}

impl Tier {
    pub const ALL: [Tier; 7] = [
        Tier::PoGroupoid,
        Tier::PoSemigroup,
        Tier::Poe,
        Tier::JoinE,
        Tier::Meet,
        Tier::Le,
        Tier::Involution,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Tier::PoGroupoid => "po-groupoid",
            Tier::PoSemigroup => "po-semigroup",
            Tier::Poe => "poe",
            Tier::JoinE => "join-e",
            Tier::Meet => "meet",
            Tier::Le => "le",
            Tier::Involution => "involution",
        }
    }

    /// Tiers that this one presupposes (not including itself).
    pub fn prerequisites(self) -> &'static [Tier] {
        match self {
            Tier::PoGroupoid => &[],
            Tier::PoSemigroup | Tier::Poe | Tier::Meet | Tier::Involution => &[Tier::PoGroupoid],
            Tier::JoinE => &[Tier::Poe],
            Tier::Le => &[Tier::JoinE, Tier::Meet],
        }
    }

    fn bit(self) -> u8 {
        1 << self as u8
    }
}

impl fmt::Display for Tier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Tier {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = match s.trim().to_ascii_lowercase().as_str() {
            "po-groupoid" | "pogroupoid" => Tier::PoGroupoid,
            "po-semigroup" | "posemigroup" | "semigroup" => Tier::PoSemigroup,
            "poe" => Tier::Poe,
            "join-e" | "joine" | "ve" | "∨e" | "join" => Tier::JoinE,
            "meet" | "∧" => Tier::Meet,
            "le" | "lattice" => Tier::Le,
            "involution" | "star" | "*" => Tier::Involution,
            other => return Err(Error::InvalidSpec(format!("unknown tier `{other}`"))),
        };
        Ok(t)
    }
}

/// An independent set of attained (or requested) tiers.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct TierSet(u8);

impl TierSet {
    pub const EMPTY: TierSet = TierSet(0);

    pub fn of(tiers: &[Tier]) -> Self {
        tiers.iter().copied().collect()
    }

    pub fn contains(self, t: Tier) -> bool {
        self.0 & t.bit() != 0
    }

    pub fn insert(&mut self, t: Tier) {
        self.0 |= t.bit();
    }

    pub fn is_superset(self, other: TierSet) -> bool {
        other.0 & !self.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = Tier> {
        Tier::ALL.into_iter().filter(move |&t| self.contains(t))
    }

    /// Adds every prerequisite of every member.
    pub fn closure(self) -> Self {
        let mut out = self;
        loop {
            let before = out;
            for t in out.iter() {
                for &p in t.prerequisites() {
                    out.insert(p);
                }
            }
            if out == before {
                return out;
            }
        }
    }
}

impl FromIterator<Tier> for TierSet {
    fn from_iter<I: IntoIterator<Item = Tier>>(iter: I) -> Self {
        let mut s = TierSet::EMPTY;
        for t in iter {
            s.insert(t);
        }
        s
    }
}

impl fmt::Debug for TierSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for TierSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<_> = self.iter().map(Tier::name).collect();
        f.write_str(&names.join(","))
    }
}

impl FromStr for TierSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.split(',')
            .filter(|p| !p.trim().is_empty())
            .map(str::parse)
            .collect()
    }
}

impl Serialize for TierSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for TierSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Ok(Vec::<Tier>::deserialize(d)?.into_iter().collect())
    }
}

/// Unvalidated tables.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawStructure {
    pub n: usize,
    /// `mult[a][b]` is the product `ab`.
    pub mult: Vec<Vec<Elem>>,
    /// `leq[a][b]` holds iff `a ≤ b`.
    pub leq: Vec<Vec<bool>>,
    pub star: Option<Vec<Elem>>,
    pub labels: Option<Vec<String>>,
}

impl RawStructure {
    /// Tables with the equality order and no involution.
    pub fn with_equality_order(mult: Vec<Vec<Elem>>) -> Self {
        let n = mult.len();
        let leq = (0..n).map(|a| (0..n).map(|b| a == b).collect()).collect();
        RawStructure {
            n,
            mult,
            leq,
            star: None,
            labels: None,
        }
    }

    pub fn with_star(mut self, star: Vec<Elem>) -> Self {
        self.star = Some(star);
        self
    }

    pub fn with_labels<S: Into<String>>(mut self, labels: impl IntoIterator<Item = S>) -> Self {
        self.labels = Some(labels.into_iter().map(Into::into).collect());
        self
    }

    /// Replaces the order by the reflexive-transitive closure of `pairs`.
    pub fn with_order_pairs(mut self, pairs: &[(Elem, Elem)]) -> Self {
        let n = self.n;
        let mut leq: Vec<Vec<bool>> = (0..n).map(|a| (0..n).map(|b| a == b).collect()).collect();
        for &(a, b) in pairs {
            leq[a][b] = true;
        }
        transitive_closure(&mut leq);
        self.leq = leq;
        self
    }

    fn check_shape(&self) -> Result<()> {
        let n = self.n;
        if n == 0 || n > MAX_ORDER {
            return Err(Error::Malformed(format!(
                "element count {n} outside 1..={MAX_ORDER}"
            )));
        }
        if self.mult.len() != n || self.mult.iter().any(|r| r.len() != n) {
            return Err(Error::Malformed(format!("multiplication table is not {n}x{n}")));
        }
        for (a, row) in self.mult.iter().enumerate() {
            if let Some((b, &v)) = row.iter().enumerate().find(|(_, &v)| v >= n) {
                return Err(Error::Malformed(format!(
                    "product of {a} and {b} is {v}, out of range"
                )));
            }
        }
        if self.leq.len() != n || self.leq.iter().any(|r| r.len() != n) {
            return Err(Error::Malformed(format!("order relation is not {n}x{n}")));
        }
        if let Some(star) = &self.star {
            if star.len() != n {
                return Err(Error::Malformed(format!("star has {} entries, expected {n}", star.len())));
            }
            let mut seen = ElemSet::EMPTY;
            for (a, &s) in star.iter().enumerate() {
                if s >= n {
                    return Err(Error::Malformed(format!("star of {a} is {s}, out of range")));
                }
                if !seen.insert(s) {
                    return Err(Error::Malformed(format!("star is not a bijection: {s} hit twice")));
                }
            }
        }
        if let Some(labels) = &self.labels {
            if labels.len() != n {
                return Err(Error::Malformed(format!("{} labels for {n} elements", labels.len())));
            }
            for (i, l) in labels.iter().enumerate() {
                if l.is_empty() || l.chars().any(char::is_whitespace) || l.starts_with('#') {
                    return Err(Error::Malformed(format!("label `{l}` is not a single token")));
                }
                if labels[..i].contains(l) {
                    return Err(Error::Malformed(format!("duplicate label `{l}`")));
                }
            }
        }
        Ok(())
    }
}

pub(crate) fn transitive_closure(leq: &mut [Vec<bool>]) {
    let n = leq.len();
    for k in 0..n {
        let row_k = leq[k].clone();
        for row in leq.iter_mut().filter(|r| r[k]) {
            for (cell, &via) in row.iter_mut().zip(&row_k) {
                *cell |= via;
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Axiom {
    /// witness `(a)` with `a ≰ a`
    Reflexive,
    /// witness `(a, b)` with `a ≤ b ≤ a`, `a ≠ b`
    Antisymmetric,
    /// witness `(a, b, c)` with `a ≤ b ≤ c`, `a ≰ c`
    Transitive,
    /// witness `(a, b, c)` with `a ≤ b` and `ac ≰ bc`
    RightCompatible,
    /// witness `(a, b, c)` with `a ≤ b` and `ca ≰ cb`
    LeftCompatible,
    /// witness `(a, b, c)` with `(ab)c ≠ a(bc)`
    Associative,
    /// witness: the maximal elements
    Greatest,
    /// witness `(a, b)` without a least upper bound
    JoinExists,
    /// witness `(a, b, c)` with `(a∨b)c ≠ ac∨bc`
    RightDistributive,
    /// witness `(a, b, c)` with `a(b∨c) ≠ ab∨ac`
    LeftDistributive,
    /// witness `(a, b)` without a greatest lower bound
    MeetExists,
    /// no `star` table was given
    StarPresent,
    /// witness `(a)` with `(a*)* ≠ a`
    StarInvolutive,
    /// witness `(a, b)` with `(ab)* ≠ b*a*`
    StarAntiHomomorphic,
    /// witness `(a, b)` with `a ≤ b` and `a* ≰ b*`
    StarMonotone,
    /// a presupposed tier failed
    Requires(Tier),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub tier: Tier,
    pub axiom: Axiom,
    pub witness: Vec<Elem>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub accepted: TierSet,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn violations_for(&self, tier: Tier) -> impl Iterator<Item = &Violation> {
        self.violations.iter().filter(move |v| v.tier == tier)
    }
}

/// A validated, immutable finite structure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderedAlgebra {
    n: usize,
    mult: Vec<Elem>,
    leq: Vec<bool>,
    star: Option<Vec<Elem>>,
    labels: Vec<String>,
    tiers: TierSet,
    greatest: Option<Elem>,
    joins: Vec<Option<Elem>>,
    meets: Vec<Option<Elem>>,
}

impl OrderedAlgebra {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.n
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.mult[a * self.n + b]
    }

    /// Left-to-right product of a nonempty word.
    pub fn word(&self, w: &[Elem]) -> Elem {
        let (&first, rest) = w.split_first().expect("empty word");
        rest.iter().fold(first, |acc, &x| self.mul(acc, x))
    }

    #[inline]
    pub fn leq(&self, a: Elem, b: Elem) -> bool {
        self.leq[a * self.n + b]
    }

    pub fn star(&self) -> Option<&[Elem]> {
        self.star.as_deref()
    }

    /// `a*`.
    ///
    /// # Panics
    /// If the structure carries no star table.
    #[inline]
    pub fn st(&self, a: Elem) -> Elem {
        self.star.as_ref().expect("structure has no involution")[a]
    }

    pub fn greatest(&self) -> Option<Elem> {
        self.greatest
    }

    pub fn tiers(&self) -> TierSet {
        self.tiers
    }

    pub fn has(&self, tier: Tier) -> bool {
        self.tiers.contains(tier)
    }

    pub fn has_all(&self, tiers: TierSet) -> bool {
        self.tiers.is_superset(tiers)
    }

    pub fn join(&self, a: Elem, b: Elem) -> Option<Elem> {
        self.joins[a * self.n + b]
    }

    pub fn meet(&self, a: Elem, b: Elem) -> Option<Elem> {
        self.meets[a * self.n + b]
    }

    pub fn all_joins(&self) -> bool {
        self.joins.iter().all(Option::is_some)
    }

    pub fn all_meets(&self) -> bool {
        self.meets.iter().all(Option::is_some)
    }

    pub fn label(&self, a: Elem) -> &str {
        &self.labels[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn labels_of(&self, elems: &[Elem]) -> Vec<String> {
        elems.iter().map(|&a| self.labels[a].clone()).collect()
    }

    pub fn to_raw(&self) -> RawStructure {
        let n = self.n;
        RawStructure {
            n,
            mult: self.mult.chunks(n).map(<[Elem]>::to_vec).collect(),
            leq: self.leq.chunks(n).map(<[bool]>::to_vec).collect(),
            star: self.star.clone(),
            labels: Some(self.labels.clone()),
        }
    }
}

/// Least upper bound under `leq`, by scanning all upper bounds.
fn bound(n: usize, leq: &[bool], a: Elem, b: Elem, upper: bool) -> Option<Elem> {
    let rel = |x: Elem, y: Elem| if upper { leq[x * n + y] } else { leq[y * n + x] };
    let bounds: Vec<Elem> = (0..n).filter(|&u| rel(a, u) && rel(b, u)).collect();
    bounds
        .iter()
        .copied()
        .find(|&u| bounds.iter().all(|&v| rel(u, v)))
}

fn first<I: IntoIterator<Item = Vec<Elem>>>(it: I) -> Option<Vec<Elem>> {
    it.into_iter().next()
}

/// Validates `raw` and computes every tier it attains.
///
/// Tables of the wrong shape, out-of-range entries and non-bijective stars are
/// errors; failed axioms are not, they are listed in the returned report with
/// a witness for each.
pub fn validate_structure(raw: RawStructure) -> Result<(OrderedAlgebra, ValidationReport)> {
    raw.check_shape()?;
    let n = raw.n;
    let mult: Vec<Elem> = raw.mult.concat();
    let leq: Vec<bool> = raw.leq.concat();
    let m = |a: Elem, b: Elem| mult[a * n + b];
    let le = |a: Elem, b: Elem| leq[a * n + b];
    let els = || 0..n;
    let pairs = || els().flat_map(move |a| els().map(move |b| (a, b)));
    let triples = || pairs().flat_map(move |(a, b)| els().map(move |c| (a, b, c)));

    let mut violations = Vec::new();
    let mut own = |tier: Tier, axiom: Axiom, w: Option<Vec<Elem>>| {
        if let Some(witness) = w {
            violations.push(Violation { tier, axiom, witness });
            false
        } else {
            true
        }
    };

    // order axioms
    let refl = own(Tier::PoGroupoid, Axiom::Reflexive, first(els().filter(|&a| !le(a, a)).map(|a| vec![a])));
    let anti = own(
        Tier::PoGroupoid,
        Axiom::Antisymmetric,
        first(pairs().filter(|&(a, b)| a != b && le(a, b) && le(b, a)).map(|(a, b)| vec![a, b])),
    );
    let trans = own(
        Tier::PoGroupoid,
        Axiom::Transitive,
        first(
            triples()
                .filter(|&(a, b, c)| le(a, b) && le(b, c) && !le(a, c))
                .map(|(a, b, c)| vec![a, b, c]),
        ),
    );
    let partial_order = refl && anti && trans;
    let right_compat = own(
        Tier::PoGroupoid,
        Axiom::RightCompatible,
        first(
            triples()
                .filter(|&(a, b, c)| le(a, b) && !le(m(a, c), m(b, c)))
                .map(|(a, b, c)| vec![a, b, c]),
        ),
    );
    let left_compat = own(
        Tier::PoGroupoid,
        Axiom::LeftCompatible,
        first(
            triples()
                .filter(|&(a, b, c)| le(a, b) && !le(m(c, a), m(c, b)))
                .map(|(a, b, c)| vec![a, b, c]),
        ),
    );
    let po_groupoid = partial_order && right_compat && left_compat;

    let assoc = own(
        Tier::PoSemigroup,
        Axiom::Associative,
        first(
            triples()
                .filter(|&(a, b, c)| m(m(a, b), c) != m(a, m(b, c)))
                .map(|(a, b, c)| vec![a, b, c]),
        ),
    );

    let (greatest, joins, meets) = if partial_order {
        let greatest = els().find(|&g| els().all(|a| le(a, g)));
        let joins: Vec<_> = pairs().map(|(a, b)| bound(n, &leq, a, b, true)).collect();
        let meets: Vec<_> = pairs().map(|(a, b)| bound(n, &leq, a, b, false)).collect();
        (greatest, joins, meets)
    } else {
        (None, vec![None; n * n], vec![None; n * n])
    };
    let has_greatest = if partial_order {
        let maximal: Vec<Elem> = els().filter(|&a| els().all(|b| !le(a, b) || a == b)).collect();
        own(Tier::Poe, Axiom::Greatest, greatest.is_none().then_some(maximal))
    } else {
        false
    };

    let j = |a: Elem, b: Elem| joins[a * n + b];
    let all_joins = partial_order
        && own(
            Tier::JoinE,
            Axiom::JoinExists,
            first(pairs().filter(|&(a, b)| j(a, b).is_none()).map(|(a, b)| vec![a, b])),
        );
    let distributive = all_joins && {
        let rd = own(
            Tier::JoinE,
            Axiom::RightDistributive,
            first(
                triples()
                    .filter(|&(a, b, c)| Some(m(j(a, b).unwrap(), c)) != j(m(a, c), m(b, c)))
                    .map(|(a, b, c)| vec![a, b, c]),
            ),
        );
        let ld = own(
            Tier::JoinE,
            Axiom::LeftDistributive,
            first(
                triples()
                    .filter(|&(a, b, c)| Some(m(a, j(b, c).unwrap())) != j(m(a, b), m(a, c)))
                    .map(|(a, b, c)| vec![a, b, c]),
            ),
        );
        rd && ld
    };
    let all_meets = partial_order
        && own(
            Tier::Meet,
            Axiom::MeetExists,
            first(pairs().filter(|&(a, b)| meets[a * n + b].is_none()).map(|(a, b)| vec![a, b])),
        );

    let star_ok = match &raw.star {
        None => own(Tier::Involution, Axiom::StarPresent, Some(vec![])),
        Some(s) => {
            let inv = own(
                Tier::Involution,
                Axiom::StarInvolutive,
                first(els().filter(|&a| s[s[a]] != a).map(|a| vec![a])),
            );
            let anti_hom = own(
                Tier::Involution,
                Axiom::StarAntiHomomorphic,
                first(pairs().filter(|&(a, b)| s[m(a, b)] != m(s[b], s[a])).map(|(a, b)| vec![a, b])),
            );
            let mono = own(
                Tier::Involution,
                Axiom::StarMonotone,
                first(pairs().filter(|&(a, b)| le(a, b) && !le(s[a], s[b])).map(|(a, b)| vec![a, b])),
            );
            inv && anti_hom && mono
        }
    };

    let mut accepted = TierSet::EMPTY;
    let own_ok = |t: Tier| match t {
        Tier::PoGroupoid => po_groupoid,
        Tier::PoSemigroup => assoc,
        Tier::Poe => has_greatest,
        Tier::JoinE => all_joins && distributive,
        Tier::Meet => all_meets,
        Tier::Le => true,
        Tier::Involution => star_ok,
    };
    // prerequisites come earlier in Tier::ALL, so one pass suffices
    for t in Tier::ALL {
        let mut ok = own_ok(t);
        for &p in t.prerequisites() {
            if !accepted.contains(p) {
                ok = false;
                violations.push(Violation {
                    tier: t,
                    axiom: Axiom::Requires(p),
                    witness: vec![],
                });
            }
        }
        if ok {
            accepted.insert(t);
        }
    }
    violations.sort_by_key(|v| v.tier);

    let labels = raw
        .labels
        .unwrap_or_else(|| (0..n).map(|a| a.to_string()).collect());
    let alg = OrderedAlgebra {
        n,
        mult,
        leq,
        star: raw.star,
        labels,
        tiers: accepted,
        greatest: if partial_order { greatest } else { None },
        joins,
        meets,
    };
    Ok((alg, ValidationReport { accepted, violations }))
}

/// Least upper bound of `a` and `b`, if it exists.
pub fn join(s: &OrderedAlgebra, a: Elem, b: Elem) -> Option<Elem> {
    s.join(a, b)
}

/// Greatest lower bound of `a` and `b`, if it exists.
pub fn meet(s: &OrderedAlgebra, a: Elem, b: Elem) -> Option<Elem> {
    s.meet(a, b)
}

/// `(H]`: every element below some member of `h`.
pub fn downward_closure(s: &OrderedAlgebra, h: ElemSet) -> ElemSet {
    s.elements()
        .filter(|&t| h.iter().any(|a| s.leq(t, a)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain2() -> OrderedAlgebra {
        let raw = RawStructure::with_equality_order(vec![vec![0, 0], vec![0, 1]])
            .with_order_pairs(&[(0, 1)])
            .with_star(vec![0, 1]);
        validate_structure(raw).unwrap().0
    }

    fn diamond() -> OrderedAlgebra {
        // ⊥=0, x=1, y=2, ⊤=3; multiplication constantly ⊥
        let raw = RawStructure::with_equality_order(vec![vec![0; 4]; 4])
            .with_order_pairs(&[(0, 1), (0, 2), (1, 3), (2, 3)]);
        validate_structure(raw).unwrap().0
    }

    #[test]
    fn chain_join_meet() {
        let s = chain2();
        assert_eq!(join(&s, 0, 1), Some(1));
        assert_eq!(meet(&s, 0, 1), Some(0));
        assert!(s.has(Tier::Le));
        assert_eq!(s.greatest(), Some(1));
    }

    #[test]
    fn diamond_join_meet() {
        let s = diamond();
        assert_eq!(join(&s, 1, 2), Some(3));
        assert_eq!(meet(&s, 1, 2), Some(0));
    }

    #[test]
    fn antichain_has_no_join() {
        let raw = RawStructure::with_equality_order(vec![vec![0, 0], vec![0, 0]]);
        let (s, report) = validate_structure(raw).unwrap();
        assert_eq!(join(&s, 0, 1), None);
        assert_eq!(meet(&s, 0, 1), None);
        assert!(!s.has(Tier::Poe));
        assert!(report.violations_for(Tier::Poe).any(|v| v.axiom == Axiom::Greatest && v.witness == vec![0, 1]));
    }

    #[test]
    fn downward_closure_cases() {
        let c = chain2();
        assert_eq!(downward_closure(&c, ElemSet::singleton(1)), ElemSet::from_iter([0, 1]));
        assert_eq!(downward_closure(&c, ElemSet::EMPTY), ElemSet::EMPTY);
        let d = diamond();
        assert_eq!(downward_closure(&d, ElemSet::singleton(1)), ElemSet::from_iter([0, 1]));
    }

    #[test]
    fn one_point_attains_everything() {
        let raw = RawStructure::with_equality_order(vec![vec![0]]).with_star(vec![0]);
        let (s, report) = validate_structure(raw).unwrap();
        assert_eq!(s.tiers(), TierSet::of(&Tier::ALL));
        assert!(report.violations.is_empty());
    }

    #[test]
    fn structural_errors() {
        let mut raw = RawStructure::with_equality_order(vec![vec![0, 2], vec![0, 0]]);
        assert!(matches!(validate_structure(raw.clone()), Err(Error::Malformed(_))));
        raw.mult[0][1] = 1;
        raw.star = Some(vec![0, 0]);
        assert!(matches!(validate_structure(raw.clone()), Err(Error::Malformed(_))));
        raw.star = None;
        raw.leq.pop();
        assert!(matches!(validate_structure(raw), Err(Error::Malformed(_))));
    }

    #[test]
    fn order_violations_have_witnesses() {
        let mut raw = RawStructure::with_equality_order(vec![vec![0, 0], vec![0, 0]]);
        raw.leq[0][1] = true;
        raw.leq[1][0] = true;
        let (s, report) = validate_structure(raw).unwrap();
        assert!(s.tiers().is_empty());
        let v = report.violations_for(Tier::PoGroupoid).next().unwrap();
        assert_eq!((v.axiom, v.witness.clone()), (Axiom::Antisymmetric, vec![0, 1]));
        for t in Tier::ALL {
            assert!(report.violations_for(t).next().is_some(), "{t}");
        }
    }

    #[test]
    fn incompatible_order_rejected() {
        // 0 ≤ 1 but 0·1 = 1 and 1·1 = 0, so right multiplication by 1 reverses it
        let raw = RawStructure::with_equality_order(vec![vec![0, 1], vec![1, 0]]).with_order_pairs(&[(0, 1)]);
        let (s, report) = validate_structure(raw).unwrap();
        assert!(!s.has(Tier::PoGroupoid));
        let v = report.violations_for(Tier::PoGroupoid).next().unwrap();
        assert_eq!(v.axiom, Axiom::RightCompatible);
        assert_eq!(v.witness, vec![0, 1, 1]);
    }

    #[test]
    fn tier_parsing() {
        let t: TierSet = "involution, poe".parse().unwrap();
        assert_eq!(t, TierSet::of(&[Tier::Involution, Tier::Poe]));
        assert_eq!(TierSet::of(&[Tier::Le]).closure(), TierSet::of(&[Tier::Le, Tier::JoinE, Tier::Meet, Tier::Poe, Tier::PoGroupoid]));
        assert!("bogus".parse::<Tier>().is_err());
        assert_eq!(t.to_string().parse::<TierSet>().unwrap(), t);
    }
}
