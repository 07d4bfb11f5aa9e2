mod common;

use std::collections::{BTreeSet, HashSet};

use common::*;
use itertools::Itertools;
use starsemi::enumerate::{
    canonical_form, compatible_orders, partial_orders, relabel, semigroups_up_to_iso, write_catalog, OrderConstraints,
};
use starsemi::format::parse_structure;
use starsemi::{validate_structure, RawStructure, TierSet};

const TIER_CASES: [(&str, bool, bool); 4] = [
    ("po-semigroup", false, false),
    ("poe", true, false),
    ("involution", false, true),
    ("involution,poe", true, true),
];

#[test]
fn enumerator_matches_naive_classes_up_to_order_3() {
    for (tiers, top, star) in TIER_CASES {
        for n in 1..=3 {
            let naive = naive_classes(n, top, star);
            let emitted = catalog(n, tiers);
            assert_eq!(naive.len(), emitted.len(), "{tiers} order {n}");
            let a: BTreeSet<_> = naive.iter().map(|t| canonical_form(&build(triple_to_raw(t))).unwrap()).collect();
            let b: BTreeSet<_> = emitted.iter().map(|s| canonical_form(s).unwrap()).collect();
            assert_eq!(a, b, "{tiers} order {n}");
        }
    }
}

/// Labeled associative tables by a plain cell-by-cell search that checks
/// every fully defined triple.
fn labeled_semigroups(n: usize) -> Vec<Vec<Vec<usize>>> {
    fn go(n: usize, k: usize, t: &mut Vec<Vec<Option<usize>>>, out: &mut Vec<Vec<Vec<usize>>>) {
        if k == n * n {
            out.push(t.iter().map(|r| r.iter().map(|x| x.unwrap()).collect()).collect());
            return;
        }
        for v in 0..n {
            t[k / n][k % n] = Some(v);
            let ok = (0..n).cartesian_product(0..n).cartesian_product(0..n).all(|((a, b), c)| {
                let l = t[a][b].and_then(|ab| t[ab][c]);
                let r = t[b][c].and_then(|bc| t[a][bc]);
                l.is_none() || r.is_none() || l == r
            });
            if ok {
                go(n, k + 1, t, out);
            }
        }
        t[k / n][k % n] = None;
    }
    let mut out = Vec::new();
    go(n, 0, &mut vec![vec![None; n]; n], &mut out);
    out
}

fn automorphisms(t: &Triple) -> usize {
    let n = t.0.len();
    (0..n).permutations(n).filter(|p| isomorphic_by(t, p)).count()
}

fn isomorphic_by(t: &Triple, p: &[usize]) -> bool {
    let n = t.0.len();
    (0..n).all(|a| {
        (0..n).all(|b| p[t.0[a][b]] == t.0[p[a]][p[b]] && t.1[a][b] == t.1[p[a]][p[b]])
            && t.2.as_ref().is_none_or(|s| p[s[a]] == s[p[a]])
    })
}

#[test]
fn order_4_counts_by_orbit_counting() {
    // Σ |Aut(x)| / n! over labeled models counts isomorphism classes.
    let tables = labeled_semigroups(4);
    assert_eq!(tables.len(), 3492);
    for (tiers, top, star) in TIER_CASES {
        let labeled = labeled_models(&tables, 4, top, star);
        let total: usize = labeled.iter().map(automorphisms).sum();
        assert_eq!(total % 24, 0);
        assert_eq!(total / 24, catalog(4, tiers).len(), "{tiers}");
    }
}

#[test]
fn golden_counts() {
    let counts = |tiers: &str| (1..=4).map(|n| catalog(n, tiers).len()).collect::<Vec<_>>();
    assert_eq!(counts("po-semigroup"), [1, 11, 173, 4753]);
    assert_eq!(counts("poe"), [1, 6, 70, 1437]);
    assert_eq!(counts("involution"), [1, 7, 90, 1638]);
    assert_eq!(counts("involution,poe"), [1, 4, 34, 482]);
    assert_eq!(counts("le,involution"), [1, 4, 20, 159]);
}

#[test]
fn emitted_models_are_pairwise_distinct() {
    let forms: HashSet<_> = catalog(4, "involution,poe").iter().map(|s| canonical_form(s).unwrap()).collect();
    assert_eq!(forms.len(), catalog(4, "involution,poe").len());

    let triples: Vec<Triple> = catalog(3, "po-semigroup")
        .iter()
        .map(|s| {
            let r = s.to_raw();
            (r.mult, r.leq, r.star)
        })
        .collect();
    for (x, y) in triples.iter().tuple_combinations() {
        assert!(!isomorphic(x, y));
    }
}

#[test]
fn emitted_models_attain_requested_tiers() {
    for (tiers, _, _) in TIER_CASES {
        let t: TierSet = tiers.parse().unwrap();
        for s in catalog(4, tiers).iter() {
            assert!(s.has_all(t));
            let (again, report) = validate_structure(s.to_raw()).unwrap();
            assert!(report.accepted.is_superset(t));
            assert_eq!(&again, s);
        }
    }
}

#[test]
fn pruned_table_search_keeps_every_class() {
    for n in 1..=3 {
        let pruned = semigroups_up_to_iso(n);
        let mut classes: Vec<Vec<Vec<usize>>> = Vec::new();
        for t in all_semigroup_tables(n) {
            let as_triple = |m: &Vec<Vec<usize>>| (m.clone(), vec![vec![false; n]; n], None);
            if !classes.iter().any(|c| isomorphic(&as_triple(c), &as_triple(&t))) {
                classes.push(t);
            }
        }
        assert_eq!(pruned.len(), classes.len(), "order {n}");
        for flat in &pruned {
            let m: Vec<Vec<usize>> = flat.chunks(n).map(|r| r.iter().map(|&x| x as usize).collect()).collect();
            assert!(all_semigroup_tables(n).contains(&m));
        }
    }
}

#[test]
fn poset_generation_matches_filtering() {
    for n in 1..=4 {
        let fast: BTreeSet<Vec<bool>> = partial_orders(n).into_iter().collect();
        let slow: BTreeSet<Vec<bool>> = all_partial_orders(n).into_iter().map(|l| l.concat()).collect();
        assert_eq!(fast, slow);
    }
}

#[test]
fn canonical_form_examples() {
    let chain = load("chain2.txt");
    let swapped = relabel(&chain, &[1, 0]);
    assert_ne!(chain.to_raw().mult, swapped.to_raw().mult);
    assert_eq!(canonical_form(&chain).unwrap(), canonical_form(&swapped).unwrap());

    let mut flat = chain.to_raw();
    flat.leq = vec![vec![true, false], vec![false, true]];
    assert_ne!(canonical_form(&chain).unwrap(), canonical_form(&build(flat)).unwrap());
}

#[test]
fn canonical_form_size_guard() {
    let s = chain_lattice(&[3, 3]);
    assert!(canonical_form(&s).is_err());
}

#[test]
fn right_zero_chain_has_no_involution() {
    let right_zero = vec![vec![0, 1], vec![0, 1]];
    for star in [vec![0, 1], vec![1, 0]] {
        let raw = RawStructure::with_equality_order(right_zero.clone())
            .with_order_pairs(&[(0, 1)])
            .with_star(star);
        let (s, _) = validate_structure(raw).unwrap();
        assert!(s.has(starsemi::Tier::Poe));
        assert!(!s.has(starsemi::Tier::Involution));
    }
    assert!(!catalog(2, "involution,poe").iter().any(|s| {
        s.elements().all(|x| s.elements().all(|y| s.mul(x, y) == y)) && (s.leq(0, 1) || s.leq(1, 0))
    }));
}

#[test]
fn catalog_round_trips_through_files() {
    let dir = tempfile::tempdir().unwrap();
    let cat = starsemi::enumerate::enumerate_models(&starsemi::enumerate::ModelSpec::new(
        3,
        "involution,poe".parse().unwrap(),
    ))
    .unwrap();
    write_catalog(dir.path(), &cat).unwrap();
    let index = std::fs::read_to_string(dir.path().join("index.txt")).unwrap();
    let lines: Vec<&str> = index.lines().collect();
    assert_eq!(lines.len(), cat.models.len());
    for (line, model) in lines.iter().zip(&cat.models) {
        let (file, digest) = line.split_once(' ').unwrap();
        let text = std::fs::read_to_string(dir.path().join(file)).unwrap();
        let back = build(parse_structure(&text).unwrap());
        assert_eq!(canonical_form(&back).unwrap().digest(), digest);
        assert_eq!(canonical_form(&back).unwrap(), canonical_form(model).unwrap());
    }
}

#[test]
fn compatible_orders_on_five_element_sample() {
    let raw = parse_structure(&data("example2.txt")).unwrap();
    let all = compatible_orders(&raw.mult, raw.star.as_deref(), OrderConstraints::default()).unwrap();
    let equality: Vec<Vec<bool>> = (0..5).map(|i| (0..5).map(|j| i == j).collect()).collect();
    assert!(all.contains(&equality));
    for leq in &all {
        let (s, _) = validate_structure(RawStructure {
            leq: leq.clone(),
            ..raw.clone()
        })
        .unwrap();
        assert!(s.has(starsemi::Tier::Involution));
    }

    let lattices = compatible_orders(
        &raw.mult,
        raw.star.as_deref(),
        OrderConstraints {
            require_lattice: true,
            nontrivial: true,
            ..Default::default()
        },
    )
    .unwrap();
    let candidate = parse_structure(&data("example2_candidate.txt")).unwrap();
    assert!(lattices.contains(&candidate.leq));
}

#[test]
fn identity_star_on_noncommutative_table_admits_no_order() {
    // left-zero semigroup: ab = a
    let mult = vec![vec![0, 0], vec![1, 1]];
    assert!(compatible_orders(&mult, Some(&[0, 1]), OrderConstraints::default())
        .unwrap()
        .is_empty());
}
