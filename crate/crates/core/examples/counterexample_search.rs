//! Sweeps every involution poe-semigroup up to a given order and reports, per
//! claim, how often it applied and whether anything broke it.
//!
//! cargo run --release --example counterexample_search -- 4 all
//! cargo run --release --example counterexample_search -- 4 mutants

use std::env;

use starsemi::claims::resolve_claims;
use starsemi::enumerate::{sweep_claims, ModelSpec};
use starsemi::{Tier, TierSet};

fn main() -> starsemi::Result<()> {
    let mut args = env::args().skip(1);
    let order: usize = args.next().map_or(4, |a| a.parse().expect("order must be a number"));
    let selection = args.next().unwrap_or_else(|| "all".into());
    let claims = resolve_claims(&selection)?;
    let spec = ModelSpec::new(order, TierSet::of(&[Tier::Poe, Tier::Involution]));

    let report = sweep_claims(&spec, &claims)?;
    println!("models per order: {:?}", report.models_checked);
    for t in &report.tallies {
        println!(
            "{:<20} applicable {:>6}  failed {:>4}  instances {:>8}",
            t.id, t.structures_applicable, t.structures_failed, t.instances
        );
    }
    for c in &report.failures {
        println!(
            "\n{} fails on order-{} model #{} at {:?}:",
            c.report.id, c.order, c.model_index, c.witness
        );
        print!("{}", c.structure);
    }
    if !report.without_instances.is_empty() {
        println!("\nno non-vacuous instance: {}", report.without_instances.join(", "));
    }
    Ok(())
}
