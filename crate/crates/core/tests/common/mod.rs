//! Shared fixtures: cached catalogs, random structures and an independent
//! brute-force enumerator.
#![allow(dead_code)]

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::Rng;
use starsemi::enumerate::{enumerate_models, relabel, ModelSpec};
use starsemi::format::parse_structure;
use starsemi::{validate_structure, OrderedAlgebra, RawStructure, TierSet};

pub fn data(name: &str) -> String {
    std::fs::read_to_string(format!("{}/data/{name}", env!("CARGO_MANIFEST_DIR"))).unwrap()
}

pub fn load(name: &str) -> OrderedAlgebra {
    build(parse_structure(&data(name)).unwrap())
}

pub fn build(raw: RawStructure) -> OrderedAlgebra {
    validate_structure(raw).unwrap().0
}

/// Catalog of one order, computed once per test binary.
pub fn catalog(order: usize, tiers: &str) -> Arc<Vec<OrderedAlgebra>> {
    type Cache = Mutex<HashMap<(usize, String), Arc<Vec<OrderedAlgebra>>>>;
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let key = (order, tiers.to_string());
    if let Some(c) = CACHE.get_or_init(Default::default).lock().unwrap().get(&key) {
        return c.clone();
    }
    let t: TierSet = tiers.parse().unwrap();
    let models = Arc::new(enumerate_models(&ModelSpec::new(order, t)).unwrap().models);
    CACHE.get().unwrap().lock().unwrap().insert(key, models.clone());
    models
}

pub fn catalog_upto(max: usize, tiers: &str) -> Vec<OrderedAlgebra> {
    (1..=max).flat_map(|n| catalog(n, tiers).to_vec()).collect()
}

/// Componentwise product; the star survives only when both factors have one.
pub fn product(a: &OrderedAlgebra, b: &OrderedAlgebra) -> OrderedAlgebra {
    let (n, m) = (a.n(), b.n());
    let pair = |k: usize| (k / m, k % m);
    let idx = |x: usize, y: usize| x * m + y;
    let size = n * m;
    let raw = RawStructure {
        n: size,
        mult: (0..size)
            .map(|i| {
                (0..size)
                    .map(|j| {
                        let ((x1, y1), (x2, y2)) = (pair(i), pair(j));
                        idx(a.mul(x1, x2), b.mul(y1, y2))
                    })
                    .collect()
            })
            .collect(),
        leq: (0..size)
            .map(|i| {
                (0..size)
                    .map(|j| {
                        let ((x1, y1), (x2, y2)) = (pair(i), pair(j));
                        a.leq(x1, x2) && b.leq(y1, y2)
                    })
                    .collect()
            })
            .collect(),
        star: match (a.star(), b.star()) {
            (Some(sa), Some(sb)) => Some((0..size).map(|k| idx(sa[k / m], sb[k % m])).collect()),
            _ => None,
        },
        labels: None,
    };
    build(raw)
}

pub fn shuffle<R: Rng>(rng: &mut R, s: &OrderedAlgebra) -> OrderedAlgebra {
    let mut perm: Vec<usize> = s.elements().collect();
    perm.shuffle(rng);
    relabel(s, &perm)
}

/// Product of chains under `x·y = x ∨ y` with the identity star: a
/// distributive lattice that is an involution le-semigroup.
pub fn chain_lattice(lengths: &[usize]) -> OrderedAlgebra {
    let size: usize = lengths.iter().product();
    let coords = |mut k: usize| -> Vec<usize> {
        let mut c = vec![0; lengths.len()];
        for (i, &l) in lengths.iter().enumerate().rev() {
            c[i] = k % l;
            k /= l;
        }
        c
    };
    let index = |c: &[usize]| c.iter().zip(lengths).fold(0, |acc, (&x, &l)| acc * l + x);
    let raw = RawStructure {
        n: size,
        mult: (0..size)
            .map(|i| {
                (0..size)
                    .map(|j| {
                        let c: Vec<usize> = coords(i).iter().zip(coords(j)).map(|(&x, y)| x.max(y)).collect();
                        index(&c)
                    })
                    .collect()
            })
            .collect(),
        leq: (0..size)
            .map(|i| (0..size).map(|j| coords(i).iter().zip(coords(j)).all(|(&x, y)| x <= y)).collect())
            .collect(),
        star: Some((0..size).collect()),
        labels: None,
    };
    build(raw)
}

/// A random structure of order at most `max_n` drawn from the catalog of
/// `tiers` (products of two members, or a single member) or a chain lattice,
/// shuffled. Every variant keeps the tiers it started with.
pub fn random_structure<R: Rng>(rng: &mut R, max_n: usize, tiers: &str) -> OrderedAlgebra {
    let s = match rng.gen_range(0..4) {
        0 => {
            let mut lengths = Vec::new();
            let mut size = 1;
            loop {
                let l = rng.gen_range(2..=4);
                if size * l > max_n || lengths.len() == 3 {
                    break;
                }
                size *= l;
                lengths.push(l);
            }
            chain_lattice(if lengths.is_empty() { &[1] } else { &lengths })
        }
        1 => {
            let n = rng.gen_range(1..=max_n.min(4));
            catalog(n, tiers).choose(rng).unwrap().clone()
        }
        _ => {
            let n = rng.gen_range(1..=3.min(max_n));
            let m = rng.gen_range(1..=(max_n / n).min(4));
            let a = catalog(n, tiers).choose(rng).unwrap().clone();
            let b = catalog(m, tiers).choose(rng).unwrap().clone();
            product(&a, &b)
        }
    };
    shuffle(rng, &s)
}

/// `(mult, leq, star)` in plain vectors.
pub type Triple = (Vec<Vec<usize>>, Vec<Vec<bool>>, Option<Vec<usize>>);

fn associative(m: &[Vec<usize>]) -> bool {
    let n = m.len();
    (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| m[m[a][b]][c] == m[a][m[b][c]])))
}

fn is_partial_order(l: &[Vec<bool>]) -> bool {
    let n = l.len();
    (0..n).all(|a| l[a][a])
        && (0..n).all(|a| (0..n).all(|b| a == b || !(l[a][b] && l[b][a])))
        && (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| !(l[a][b] && l[b][c]) || l[a][c])))
}

fn compatible(m: &[Vec<usize>], l: &[Vec<bool>]) -> bool {
    let n = m.len();
    (0..n).all(|a| {
        (0..n).all(|b| !l[a][b] || (0..n).all(|c| l[m[a][c]][m[b][c]] && l[m[c][a]][m[c][b]]))
    })
}

fn good_star(m: &[Vec<usize>], l: &[Vec<bool>], s: &[usize]) -> bool {
    let n = m.len();
    (0..n).all(|a| s[s[a]] == a)
        && (0..n).all(|a| (0..n).all(|b| s[m[a][b]] == m[s[b]][s[a]]))
        && (0..n).all(|a| (0..n).all(|b| !l[a][b] || l[s[a]][s[b]]))
}

pub fn isomorphic(x: &Triple, y: &Triple) -> bool {
    let n = x.0.len();
    n == y.0.len()
        && (0..n).permutations(n).any(|p| {
            (0..n).all(|a| {
                (0..n).all(|b| p[x.0[a][b]] == y.0[p[a]][p[b]] && x.1[a][b] == y.1[p[a]][p[b]])
                    && match (&x.2, &y.2) {
                        (Some(sx), Some(sy)) => p[sx[a]] == sy[p[a]],
                        (None, None) => true,
                        _ => false,
                    }
            })
        })
}

/// Every labeled associative table of order `n`, by exhaustive listing.
pub fn all_semigroup_tables(n: usize) -> Vec<Vec<Vec<usize>>> {
    (0..n * n)
        .map(|_| 0..n)
        .multi_cartesian_product()
        .map(|cells| cells.chunks(n).map(<[usize]>::to_vec).collect::<Vec<_>>())
        .filter(|m| associative(m))
        .collect()
}

/// Every partial order on `0..n`, by filtering all relations.
pub fn all_partial_orders(n: usize) -> Vec<Vec<Vec<bool>>> {
    (0u32..1 << (n * n))
        .map(|bits| (0..n).map(|i| (0..n).map(|j| bits >> (i * n + j) & 1 == 1).collect()).collect::<Vec<_>>())
        .filter(|l: &Vec<Vec<bool>>| is_partial_order(l))
        .collect()
}

/// Labeled po-semigroups of order `n` (with a greatest element and/or an
/// order-preserving involution when asked), from the given tables.
pub fn labeled_models(tables: &[Vec<Vec<usize>>], n: usize, need_top: bool, need_star: bool) -> Vec<Triple> {
    let orders: Vec<_> = all_partial_orders(n)
        .into_iter()
        .filter(|l| !need_top || (0..n).any(|g| (0..n).all(|a| l[a][g])))
        .collect();
    let perms: Vec<Vec<usize>> = (0..n).permutations(n).collect();
    let mut out = Vec::new();
    for m in tables {
        for l in orders.iter().filter(|l| compatible(m, l)) {
            if need_star {
                for s in perms.iter().filter(|s| good_star(m, l, s)) {
                    out.push((m.clone(), l.clone(), Some(s.clone())));
                }
            } else {
                out.push((m.clone(), l.clone(), None));
            }
        }
    }
    out
}

/// Generate all, filter, then keep one model per isomorphism class by
/// pairwise comparison.
pub fn naive_classes(n: usize, need_top: bool, need_star: bool) -> Vec<Triple> {
    let mut reps: Vec<Triple> = Vec::new();
    for t in labeled_models(&all_semigroup_tables(n), n, need_top, need_star) {
        if !reps.iter().any(|r| isomorphic(r, &t)) {
            reps.push(t);
        }
    }
    reps
}

pub fn triple_to_raw(t: &Triple) -> RawStructure {
    RawStructure {
        n: t.0.len(),
        mult: t.0.clone(),
        leq: t.1.clone(),
        star: t.2.clone(),
        labels: None,
    }
}
