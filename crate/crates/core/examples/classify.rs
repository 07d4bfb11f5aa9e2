//! Prints the ideal-element classification of every element together with
//! l(a), r(a) and the regularity profile.
//!
//! cargo run --example classify -- [FILE]

use starsemi::format::parse_structure;
use starsemi::ideals::{classify_all, generated_left, generated_right, ElementClassification};
use starsemi::regularity::regularity_profile;
use starsemi::validate_structure;

fn main() -> starsemi::Result<()> {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/data/example2_candidate.txt").into());
    let (s, _) = validate_structure(parse_structure(&std::fs::read_to_string(path)?)?)?;

    print!("elem");
    for col in ElementClassification::COLUMNS {
        print!(" {col:>7}");
    }
    println!("  l(a) r(a)");
    for c in classify_all(&s) {
        print!("{:<4}", s.label(c.element));
        for sym in c.symbols() {
            print!(" {sym:>7}");
        }
        let show = |x: Option<usize>| x.map_or("-", |x| s.label(x)).to_string();
        println!("  {:>4} {:>4}", show(generated_left(&s, c.element)), show(generated_right(&s, c.element)));
    }

    match regularity_profile(&s) {
        Ok(p) => println!("\n{p:#?}"),
        Err(e) => println!("\nno regularity profile: {e}"),
    }
    Ok(())
}
