//! Exhaustive enumeration of small models up to isomorphism.
//!
//! Search is multiplication-first: associative tables are generated by
//! backtracking with incremental associativity checks and kept only when
//! they are lexicographically least among their relabelings. For each such
//! table the compatible partial orders are filtered from the full list of
//! labeled posets, and the candidate involutions are the involutive
//! anti-automorphisms of the table that preserve the order. Survivors are
//! validated and deduplicated by [`canonical_form`].
//!
//! Isomorphism means a bijection preserving multiplication, order and `*`.
//! Anti-isomorphic (mirror) models are kept apart: left and right notions
//! differ.

use std::collections::HashSet;
use std::fmt::Write as _;
use std::path::Path;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::claims::{check_claims, Claim, ClaimReport, Status};
use crate::error::{Error, Result};
use crate::format::write_structure;
use crate::structure::{validate_structure, Elem, OrderedAlgebra, RawStructure, Tier, TierSet};

/// Largest order enumerated exhaustively.
pub const MAX_ENUM_ORDER: usize = 6;
/// Largest order [`canonical_form`] accepts (`n!` relabelings).
pub const MAX_CANON_ORDER: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModelSpec {
    pub order: usize,
    pub required_tiers: TierSet,
    pub claim_filter: Option<Vec<String>>,
    pub limit: Option<usize>,
}

impl ModelSpec {
    pub fn new(order: usize, required_tiers: TierSet) -> Self {
        ModelSpec {
            order,
            required_tiers,
            claim_filter: None,
            limit: None,
        }
    }

    fn check(&self) -> Result<()> {
        if self.order == 0 {
            return Err(Error::InvalidSpec("order must be at least 1".into()));
        }
        if self.order > MAX_ENUM_ORDER {
            return Err(Error::TooLarge {
                what: "exhaustive enumeration",
                order: self.order,
                limit: MAX_ENUM_ORDER,
            });
        }
        Ok(())
    }

    /// Requested tiers with their prerequisites; enumerated models are always
    /// po-semigroups.
    pub fn effective_tiers(&self) -> TierSet {
        let mut t = self.required_tiers;
        t.insert(Tier::PoSemigroup);
        t.closure()
    }
}

/// The models of one order, in deterministic order.
#[derive(Clone, Debug)]
pub struct Catalog {
    pub order: usize,
    pub tiers: TierSet,
    pub models: Vec<OrderedAlgebra>,
    /// The `limit` cut the enumeration short.
    pub truncated: bool,
}

/// Encoding of `(mult, ≤, *)` minimized over all relabelings.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CanonicalForm(pub Vec<u8>);

impl CanonicalForm {
    pub fn digest(&self) -> String {
        hex::encode(Sha256::digest(&self.0))
    }
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<Elem>> {
    let mut p: Vec<Elem> = (0..n).collect();
    let mut out = vec![p.clone()];
    loop {
        let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
        out.push(p.clone());
    }
}

/// Encoding of the structure relabeled by `perm` (old element `a` becomes
/// `perm[a]`).
fn encode(n: usize, mult: &[Elem], leq: &[bool], star: Option<&[Elem]>, perm: &[Elem], inv: &mut [Elem]) -> Vec<u8> {
    for (a, &p) in perm.iter().enumerate() {
        inv[p] = a;
    }
    let mut out = Vec::with_capacity(2 + 2 * n * n + n);
    out.push(n as u8);
    for i in 0..n {
        for j in 0..n {
            out.push(perm[mult[inv[i] * n + inv[j]]] as u8);
        }
    }
    for i in 0..n {
        for j in 0..n {
            out.push(leq[inv[i] * n + inv[j]] as u8);
        }
    }
    match star {
        None => out.push(0),
        Some(s) => {
            out.push(1);
            out.extend((0..n).map(|i| perm[s[inv[i]]] as u8));
        }
    }
    out
}

fn flat(s: &OrderedAlgebra) -> (Vec<Elem>, Vec<bool>) {
    let n = s.n();
    let mult = (0..n * n).map(|k| s.mul(k / n, k % n)).collect();
    let leq = (0..n * n).map(|k| s.leq(k / n, k % n)).collect();
    (mult, leq)
}

pub fn canonical_form(s: &OrderedAlgebra) -> Result<CanonicalForm> {
    let n = s.n();
    if n > MAX_CANON_ORDER {
        return Err(Error::TooLarge {
            what: "canonical forms",
            order: n,
            limit: MAX_CANON_ORDER,
        });
    }
    let (mult, leq) = flat(s);
    Ok(canonical_with(n, &mult, &leq, s.star(), &permutations(n)))
}

fn canonical_with(n: usize, mult: &[Elem], leq: &[bool], star: Option<&[Elem]>, perms: &[Vec<Elem>]) -> CanonicalForm {
    let mut inv = vec![0; n];
    let best = perms
        .iter()
        .map(|p| encode(n, mult, leq, star, p, &mut inv))
        .min()
        .expect("at least the identity");
    CanonicalForm(best)
}

/// The structure with element `a` renamed to `perm[a]`; labels travel with
/// their elements.
pub fn relabel(s: &OrderedAlgebra, perm: &[Elem]) -> OrderedAlgebra {
    let n = s.n();
    let mut inv = vec![0; n];
    for (a, &p) in perm.iter().enumerate() {
        inv[p] = a;
    }
    let raw = RawStructure {
        n,
        mult: (0..n).map(|i| (0..n).map(|j| perm[s.mul(inv[i], inv[j])]).collect()).collect(),
        leq: (0..n).map(|i| (0..n).map(|j| s.leq(inv[i], inv[j])).collect()).collect(),
        star: s.star().map(|st| (0..n).map(|i| perm[st[inv[i]]]).collect()),
        labels: Some((0..n).map(|i| s.label(inv[i]).to_string()).collect()),
    };
    validate_structure(raw).expect("relabeling preserves shape").0
}

const UNSET: u8 = u8::MAX;

struct TableSearch<'a> {
    n: usize,
    t: Vec<u8>,
    perms: &'a [Vec<Elem>],
    out: Vec<Vec<u8>>,
}

impl TableSearch<'_> {
    fn get(&self, a: usize, b: usize) -> u8 {
        self.t[a * self.n + b]
    }

    /// Associativity on every triple that the freshly set cell `(a, b)`
    /// completes.
    fn consistent(&self, a: usize, b: usize) -> bool {
        let n = self.n;
        let v = self.get(a, b) as usize;
        for z in 0..n {
            // (ab)z = a(bz)
            let (vz, bz) = (self.get(v, z), self.get(b, z));
            if vz != UNSET && bz != UNSET {
                let r = self.get(a, bz as usize);
                if r != UNSET && r != vz {
                    return false;
                }
            }
            // z(ab) = (za)b
            let (zv, za) = (self.get(z, v), self.get(z, a));
            if zv != UNSET && za != UNSET {
                let l = self.get(za as usize, b);
                if l != UNSET && l != zv {
                    return false;
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                // (xy)b with xy = a
                if self.get(x, y) as usize == a {
                    let yb = self.get(y, b);
                    if yb != UNSET {
                        let r = self.get(x, yb as usize);
                        if r != UNSET && r as usize != v {
                            return false;
                        }
                    }
                }
                // a(xy) with xy = b
                if self.get(x, y) as usize == b {
                    let ax = self.get(a, x);
                    if ax != UNSET {
                        let l = self.get(ax as usize, y);
                        if l != UNSET && l as usize != v {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// Whether the complete table is lexicographically least among its
    /// relabelings.
    fn is_least(&self) -> bool {
        let n = self.n;
        let mut inv = vec![0; n];
        for p in self.perms {
            for (a, &q) in p.iter().enumerate() {
                inv[q] = a;
            }
            for k in 0..n * n {
                let (i, j) = (k / n, k % n);
                let relabeled = p[self.t[inv[i] * n + inv[j]] as usize] as u8;
                match relabeled.cmp(&self.t[k]) {
                    std::cmp::Ordering::Less => return false,
                    std::cmp::Ordering::Greater => break,
                    std::cmp::Ordering::Equal => {}
                }
            }
        }
        true
    }

    fn fill(&mut self, k: usize) {
        let n = self.n;
        if k == n * n {
            if self.is_least() {
                self.out.push(self.t.clone());
            }
            return;
        }
        let (a, b) = (k / n, k % n);
        for v in 0..n as u8 {
            self.t[k] = v;
            if self.consistent(a, b) {
                self.fill(k + 1);
            }
        }
        self.t[k] = UNSET;
    }
}

fn first_rows(n: usize) -> Vec<Vec<u8>> {
    let mut rows = vec![vec![]];
    for _ in 0..n {
        rows = rows
            .into_iter()
            .flat_map(|r| {
                (0..n as u8).map(move |v| {
                    let mut r = r.clone();
                    r.push(v);
                    r
                })
            })
            .collect();
    }
    rows
}

/// Associative tables of order `n`, one per isomorphism class, as flat
/// row-major vectors. The search is partitioned by the first row and the
/// partitions merged in order.
pub fn semigroups_up_to_iso(n: usize) -> Vec<Vec<u8>> {
    let perms = permutations(n);
    first_rows(n)
        .into_par_iter()
        .map(|row| {
            let mut search = TableSearch {
                n,
                t: vec![UNSET; n * n],
                perms: &perms,
                out: Vec::new(),
            };
            for (b, &v) in row.iter().enumerate() {
                search.t[b] = v;
                if !search.consistent(0, b) {
                    return Vec::new();
                }
            }
            search.fill(n);
            search.out
        })
        .flatten()
        .collect()
}

/// Every partial order on `0..n`, as flat `leq` matrices. Built by adding
/// one point at a time below an up-set and above a down-set.
pub fn partial_orders(n: usize) -> Vec<Vec<bool>> {
    let mut orders: Vec<Vec<bool>> = vec![vec![]];
    for k in 0..n {
        let mut next = Vec::new();
        for o in &orders {
            let le = |a: usize, b: usize| o[a * k + b];
            for down in 0u32..(1 << k) {
                let d = |a: usize| down >> a & 1 == 1;
                // down-set: closed below
                if !(0..k).all(|a| !d(a) || (0..k).all(|b| !le(b, a) || d(b))) {
                    continue;
                }
                for up in 0u32..(1 << k) {
                    if up & down != 0 {
                        continue;
                    }
                    let u = |a: usize| up >> a & 1 == 1;
                    if !(0..k).all(|a| !u(a) || (0..k).all(|b| !le(a, b) || u(b))) {
                        continue;
                    }
                    if !(0..k).all(|a| !d(a) || (0..k).all(|b| !u(b) || le(a, b))) {
                        continue;
                    }
                    let m = k + 1;
                    let mut rel = vec![false; m * m];
                    for a in 0..k {
                        for b in 0..k {
                            rel[a * m + b] = le(a, b);
                        }
                        rel[a * m + k] = d(a);
                        rel[k * m + a] = u(a);
                    }
                    rel[k * m + k] = true;
                    next.push(rel);
                }
            }
        }
        orders = next;
    }
    orders
}

fn has_greatest(n: usize, leq: &[bool]) -> bool {
    (0..n).any(|g| (0..n).all(|a| leq[a * n + g]))
}

fn compatible(n: usize, mult: &[u8], strict: &[(usize, usize)]) -> bool {
    strict.iter().all(|&(a, b)| {
        (0..n).all(|c| {
            let (ac, bc) = (mult[a * n + c] as usize, mult[b * n + c] as usize);
            let (ca, cb) = (mult[c * n + a] as usize, mult[c * n + b] as usize);
            (ac == bc || strict.contains(&(ac, bc))) && (ca == cb || strict.contains(&(ca, cb)))
        })
    })
}

/// Involutive permutations `σ` with `σ(ab) = σ(b)σ(a)`.
fn anti_involutions(n: usize, mult: &[u8]) -> Vec<Vec<Elem>> {
    fn pairings(sigma: &mut Vec<Option<Elem>>, out: &mut Vec<Vec<Elem>>) {
        let Some(i) = sigma.iter().position(Option::is_none) else {
            out.push(sigma.iter().map(|x| x.unwrap()).collect());
            return;
        };
        sigma[i] = Some(i);
        pairings(sigma, out);
        for j in i + 1..sigma.len() {
            if sigma[j].is_none() {
                sigma[i] = Some(j);
                sigma[j] = Some(i);
                pairings(sigma, out);
                sigma[j] = None;
            }
        }
        sigma[i] = None;
    }
    let mut all = Vec::new();
    pairings(&mut vec![None; n], &mut all);
    all.retain(|s| {
        (0..n).all(|a| (0..n).all(|b| s[mult[a * n + b] as usize] == mult[s[b] * n + s[a]] as usize))
    });
    all
}

fn strict_pairs(n: usize, leq: &[bool]) -> Vec<(usize, usize)> {
    (0..n * n)
        .map(|k| (k / n, k % n))
        .filter(|&(a, b)| a != b && leq[a * n + b])
        .collect()
}

/// Pairs `(a, b)` with `a < b`.
type StrictPairs = Vec<(usize, usize)>;

pub fn enumerate_models(spec: &ModelSpec) -> Result<Catalog> {
    spec.check()?;
    let n = spec.order;
    let tiers = spec.effective_tiers();
    let want_star = tiers.contains(Tier::Involution);
    let want_top = tiers.contains(Tier::Poe);
    let perms = permutations(n);
    let orders: Vec<(Vec<bool>, StrictPairs)> = partial_orders(n)
        .into_iter()
        .filter(|o| !want_top || has_greatest(n, o))
        .map(|o| {
            let strict = strict_pairs(n, &o);
            (o, strict)
        })
        .collect();

    let per_table: Vec<Vec<OrderedAlgebra>> = semigroups_up_to_iso(n)
        .into_par_iter()
        .map(|table| {
            let stars: Vec<Option<Vec<Elem>>> = if want_star {
                anti_involutions(n, &table).into_iter().map(Some).collect()
            } else {
                vec![None]
            };
            let mult: Vec<Elem> = table.iter().map(|&x| x as usize).collect();
            let mut seen = HashSet::new();
            let mut found = Vec::new();
            for (leq, strict) in &orders {
                if stars.is_empty() || !compatible(n, &table, strict) {
                    continue;
                }
                for star in &stars {
                    if let Some(s) = star {
                        if !strict.iter().all(|&(a, b)| leq[s[a] * n + s[b]]) {
                            continue;
                        }
                    }
                    let raw = RawStructure {
                        n,
                        mult: mult.chunks(n).map(<[Elem]>::to_vec).collect(),
                        leq: leq.chunks(n).map(<[bool]>::to_vec).collect(),
                        star: star.clone(),
                        labels: None,
                    };
                    let (alg, _) = validate_structure(raw).expect("enumerated tables are well formed");
                    if !alg.has_all(tiers) {
                        continue;
                    }
                    let key = canonical_with(n, &mult, leq, star.as_deref(), &perms);
                    if seen.insert(key) {
                        found.push(alg);
                    }
                }
            }
            found
        })
        .collect();

    let mut models: Vec<OrderedAlgebra> = per_table.into_iter().flatten().collect();
    let truncated = spec.limit.is_some_and(|l| models.len() > l);
    if let Some(l) = spec.limit {
        models.truncate(l);
    }
    Ok(Catalog {
        order: n,
        tiers,
        models,
        truncated,
    })
}

/// Extra requirements on the orders returned by [`compatible_orders`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderConstraints {
    pub require_greatest: bool,
    pub require_lattice: bool,
    /// Exclude the equality order.
    pub nontrivial: bool,
}

/// Every partial order making `(mult, ≤, star)` an ordered semigroup (with
/// order-preserving `star`, if given) and meeting `constraints`, one per
/// orbit under the automorphisms of `(mult, star)`.
///
/// A `star` that is not an involutive anti-automorphism of `mult` admits no
/// order, so the result is empty.
pub fn compatible_orders(
    mult: &[Vec<Elem>],
    star: Option<&[Elem]>,
    constraints: OrderConstraints,
) -> Result<Vec<Vec<Vec<bool>>>> {
    let n = mult.len();
    validate_structure(RawStructure::with_equality_order(mult.to_vec()))?;
    if n > MAX_ENUM_ORDER + 1 {
        return Err(Error::TooLarge {
            what: "order search",
            order: n,
            limit: MAX_ENUM_ORDER + 1,
        });
    }
    let table: Vec<u8> = mult.iter().flatten().map(|&x| x as u8).collect();
    if let Some(s) = star {
        if s.len() != n || !anti_involutions_contains(n, &table, s) {
            return Ok(Vec::new());
        }
    }
    let autos: Vec<Vec<Elem>> = permutations(n)
        .into_iter()
        .filter(|p| {
            (0..n).all(|a| (0..n).all(|b| p[mult[a][b]] == mult[p[a]][p[b]]))
                && star.is_none_or(|s| (0..n).all(|a| p[s[a]] == s[p[a]]))
        })
        .collect();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for leq in partial_orders(n) {
        if constraints.nontrivial && (0..n * n).all(|k| leq[k] == (k / n == k % n)) {
            continue;
        }
        if constraints.require_greatest && !has_greatest(n, &leq) {
            continue;
        }
        let strict = strict_pairs(n, &leq);
        if !compatible(n, &table, &strict) {
            continue;
        }
        if let Some(s) = star {
            if !strict.iter().all(|&(a, b)| leq[s[a] * n + s[b]]) {
                continue;
            }
        }
        let rows: Vec<Vec<bool>> = leq.chunks(n).map(<[bool]>::to_vec).collect();
        if constraints.require_lattice {
            let raw = RawStructure {
                n,
                mult: mult.to_vec(),
                leq: rows.clone(),
                star: None,
                labels: None,
            };
            let alg = validate_structure(raw)?.0;
            if !(alg.all_joins() && alg.all_meets()) {
                continue;
            }
        }
        let key = autos
            .iter()
            .map(|p| {
                let mut inv = vec![0; n];
                for (a, &q) in p.iter().enumerate() {
                    inv[q] = a;
                }
                (0..n * n).map(|k| leq[inv[k / n] * n + inv[k % n]]).collect::<Vec<bool>>()
            })
            .min()
            .unwrap();
        if seen.insert(key) {
            out.push(rows);
        }
    }
    Ok(out)
}

fn anti_involutions_contains(n: usize, mult: &[u8], s: &[Elem]) -> bool {
    s.iter().all(|&x| x < n)
        && (0..n).all(|a| s[s[a]] == a)
        && (0..n).all(|a| (0..n).all(|b| s[mult[a * n + b] as usize] == mult[s[b] * n + s[a]] as usize))
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimTally {
    pub id: String,
    pub structures_applicable: u64,
    pub structures_passed: u64,
    pub structures_failed: u64,
    pub vacuous_passes: u64,
    pub instances: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub order: usize,
    pub model_index: usize,
    /// The model in the structure text format.
    pub structure: String,
    pub report: ClaimReport,
    pub witness: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchReport {
    pub max_order: usize,
    pub tiers: TierSet,
    /// Models checked at each order `1..=max_order` (fewer at the order where
    /// a counterexample stopped the sweep).
    pub models_checked: Vec<usize>,
    /// The earliest failure, in order then catalog position.
    pub counterexample: Option<Counterexample>,
    /// First failure of each failing claim; only a full sweep fills in more
    /// than one.
    pub failures: Vec<Counterexample>,
    pub tallies: Vec<ClaimTally>,
    /// Claims without a single non-vacuous instance in the sweep.
    pub without_instances: Vec<String>,
    /// Some catalog was cut short by the spec's `limit`.
    pub truncated: bool,
}

impl SearchReport {
    pub fn tally(&self, id: &str) -> Option<&ClaimTally> {
        self.tallies.iter().find(|t| t.id == id)
    }
}

/// Checks `claims` on every model of order `1..=spec.order`, stopping at the
/// first failure (in order, then catalog position).
pub fn search_counterexample(spec: &ModelSpec, claims: &[&Claim]) -> Result<SearchReport> {
    sweep(spec, claims, true)
}

/// Like [`search_counterexample`] but never stops early: every claim is
/// checked on every model and the first failure of each claim is kept.
pub fn sweep_claims(spec: &ModelSpec, claims: &[&Claim]) -> Result<SearchReport> {
    sweep(spec, claims, false)
}

fn sweep(spec: &ModelSpec, claims: &[&Claim], stop_at_first: bool) -> Result<SearchReport> {
    spec.check()?;
    let mut tallies: Vec<ClaimTally> = claims
        .iter()
        .map(|c| ClaimTally {
            id: c.id.to_string(),
            ..Default::default()
        })
        .collect();
    let mut report = SearchReport {
        max_order: spec.order,
        tiers: spec.effective_tiers(),
        models_checked: Vec::new(),
        counterexample: None,
        failures: Vec::new(),
        tallies: Vec::new(),
        without_instances: Vec::new(),
        truncated: false,
    };
    let mut failed = vec![false; claims.len()];
    if !claims.is_empty() {
        'orders: for order in 1..=spec.order {
            let catalog = enumerate_models(&ModelSpec { order, ..spec.clone() })?;
            report.truncated |= catalog.truncated;
            let reports: Vec<Vec<ClaimReport>> = catalog.models.par_iter().map(|m| check_claims(m, claims)).collect();
            let mut checked = 0;
            for (idx, (model, reps)) in catalog.models.iter().zip(reports).enumerate() {
                checked += 1;
                for (k, (tally, r)) in tallies.iter_mut().zip(reps).enumerate() {
                    if r.status != Status::NotApplicable {
                        tally.structures_applicable += 1;
                    }
                    match r.status {
                        Status::Pass => tally.structures_passed += 1,
                        Status::Fail => tally.structures_failed += 1,
                        Status::NotApplicable => {}
                    }
                    tally.vacuous_passes += r.vacuous as u64;
                    tally.instances += r.instances_checked;
                    if r.status == Status::Fail && !failed[k] {
                        failed[k] = true;
                        report.failures.push(Counterexample {
                            order,
                            model_index: idx,
                            structure: write_structure(&model.to_raw()),
                            witness: model.labels_of(r.counterexample.as_deref().unwrap_or(&[])),
                            report: r,
                        });
                    }
                }
                if stop_at_first && !report.failures.is_empty() {
                    report.models_checked.push(checked);
                    break 'orders;
                }
            }
            report.models_checked.push(checked);
        }
    }
    report.counterexample = report
        .failures
        .iter()
        .min_by_key(|c| (c.order, c.model_index))
        .cloned();
    report.without_instances = tallies.iter().filter(|t| t.instances == 0).map(|t| t.id.clone()).collect();
    report.tallies = tallies;
    Ok(report)
}

/// Writes each model as `model-<order>-<index>.txt` under `dir` and appends
/// `<file> <canonical digest>` lines to `index.txt`.
pub fn write_catalog(dir: &Path, catalog: &Catalog) -> Result<()> {
    std::fs::create_dir_all(dir)?;
    let mut index = String::new();
    for (i, m) in catalog.models.iter().enumerate() {
        let name = format!("model-{}-{:05}.txt", catalog.order, i);
        std::fs::write(dir.join(&name), write_structure(&m.to_raw()))?;
        writeln!(index, "{name} {}", canonical_form(m)?.digest()).unwrap();
    }
    let path = dir.join("index.txt");
    let mut existing = std::fs::read_to_string(&path).unwrap_or_default();
    existing.push_str(&index);
    std::fs::write(path, existing)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutation_counts() {
        assert_eq!(permutations(1).len(), 1);
        assert_eq!(permutations(4).len(), 24);
        assert_eq!(permutations(3)[1], vec![0, 2, 1]);
    }

    #[test]
    fn poset_counts() {
        // labeled posets: 1, 3, 19, 219, 4231
        let counts: Vec<usize> = (1..=5).map(|n| partial_orders(n).len()).collect();
        assert_eq!(counts, vec![1, 3, 19, 219, 4231]);
    }

    #[test]
    fn semigroup_counts() {
        // semigroups up to isomorphism (mirror images counted separately)
        let counts: Vec<usize> = (1..=4).map(|n| semigroups_up_to_iso(n).len()).collect();
        assert_eq!(counts, vec![1, 5, 24, 188]);
    }

    #[test]
    fn one_point_involution_le() {
        let spec = ModelSpec::new(1, TierSet::of(&[Tier::Involution, Tier::Le]));
        assert_eq!(enumerate_models(&spec).unwrap().models.len(), 1);
    }

    #[test]
    fn spec_bounds() {
        assert!(enumerate_models(&ModelSpec::new(0, TierSet::EMPTY)).is_err());
        assert!(matches!(
            enumerate_models(&ModelSpec::new(7, TierSet::EMPTY)),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn limit_marks_truncation() {
        let mut spec = ModelSpec::new(3, TierSet::of(&[Tier::Poe]));
        spec.limit = Some(2);
        let c = enumerate_models(&spec).unwrap();
        assert_eq!(c.models.len(), 2);
        assert!(c.truncated);
    }

    #[test]
    fn empty_claim_list_gives_empty_report() {
        let r = search_counterexample(&ModelSpec::new(3, TierSet::of(&[Tier::Involution, Tier::Poe])), &[]).unwrap();
        assert!(r.tallies.is_empty() && r.counterexample.is_none() && r.models_checked.is_empty());
    }
}
