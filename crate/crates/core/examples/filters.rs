//! Computes every principal filter N(x) by saturation, certifies it against
//! the subset-intersection oracle and prints the classes of equal filters.
//!
//! cargo run --example filters -- [FILE]

use starsemi::filters::{filter_generated_with_rounds, filter_oracle, n_class_partition, star_sandwich_set};
use starsemi::format::parse_structure;
use starsemi::validate_structure;

fn main() -> starsemi::Result<()> {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/data/example2_candidate.txt").into());
    let (s, _) = validate_structure(parse_structure(&std::fs::read_to_string(path)?)?)?;

    for x in s.elements() {
        let (f, rounds) = filter_generated_with_rounds(&s, x);
        let agrees = filter_oracle(&s, x)? == f.members;
        print!(
            "N({}) = {:?}  after {rounds} rounds, oracle {}",
            s.label(x),
            s.labels_of(&f.members.iter().collect::<Vec<_>>()),
            if agrees { "agrees" } else { "DISAGREES" }
        );
        if let Ok(w) = star_sandwich_set(&s, x) {
            print!("  {{y | x <= ey*e}} = {:?}", s.labels_of(&w.iter().collect::<Vec<_>>()));
        }
        println!();
    }

    let p = n_class_partition(&s);
    for (block, g) in p.blocks.iter().zip(&p.block_greatest) {
        println!(
            "class {:?} greatest {}",
            s.labels_of(&block.iter().collect::<Vec<_>>()),
            g.map_or("none", |g| s.label(g))
        );
    }
    Ok(())
}
