//! Lists the partial orders compatible with a file's multiplication table
//! and involution, one per automorphism orbit.
//!
//! cargo run --example compatible_orders -- [FILE]

use starsemi::enumerate::{compatible_orders, OrderConstraints};
use starsemi::format::{parse_structure, transitive_reduction};
use starsemi::structure::RawStructure;
use starsemi::validate_structure;

fn main() -> starsemi::Result<()> {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/data/example2.txt").into());
    let raw = parse_structure(&std::fs::read_to_string(path)?)?;

    for (label, constraints) in [
        ("any", OrderConstraints::default()),
        (
            "lattice",
            OrderConstraints {
                require_lattice: true,
                nontrivial: true,
                ..Default::default()
            },
        ),
    ] {
        let found = compatible_orders(&raw.mult, raw.star.as_deref(), constraints)?;
        println!("{label}: {} orders", found.len());
        for leq in found {
            let (s, _) = validate_structure(RawStructure {
                leq: leq.clone(),
                ..raw.clone()
            })?;
            let covers: Vec<String> = transitive_reduction(&leq)
                .into_iter()
                .map(|(a, b)| format!("{}<{}", s.label(a), s.label(b)))
                .collect();
            println!("  [{}] tiers {}", covers.join(" "), s.tiers());
        }
    }
    Ok(())
}
