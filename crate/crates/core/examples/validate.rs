//! Validates a structure file tier by tier, then shows that corrupting one
//! multiplication cell is caught with a witness pair.
//!
//! cargo run --example validate -- [FILE]

use starsemi::format::parse_structure;
use starsemi::structure::Axiom;
use starsemi::{validate_structure, Tier};

fn main() -> starsemi::Result<()> {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/data/example2.txt").into());
    let raw = parse_structure(&std::fs::read_to_string(&path)?)?;
    let (s, report) = validate_structure(raw.clone())?;

    println!("{path}: {} elements, tiers {}", s.n(), report.accepted);
    for v in &report.violations {
        println!("  {} needs {:?}, fails at {:?}", v.tier, v.axiom, s.labels_of(&v.witness));
    }

    // Overwrite the first cell whose change breaks (ab)* = b*a*.
    if s.has(Tier::Involution) {
        'cells: for a in s.elements() {
            for b in s.elements() {
                let mut bad = raw.clone();
                bad.mult[a][b] = (bad.mult[a][b] + 1) % s.n();
                let (_, r) = validate_structure(bad)?;
                if let Some(v) = r.violations.iter().find(|v| v.axiom == Axiom::StarAntiHomomorphic) {
                    println!(
                        "changing {}·{} breaks the involution; witness {:?}",
                        s.label(a),
                        s.label(b),
                        s.labels_of(&v.witness)
                    );
                    break 'cells;
                }
            }
        }
    }
    Ok(())
}
