//! Counts models up to isomorphism for a tier set, order by order, and
//! optionally writes the catalogs to a directory.
//!
//! cargo run --release --example enumerate -- [MAX_ORDER] [TIERS] [OUT_DIR]

use std::path::Path;
use std::time::Instant;

use starsemi::enumerate::{enumerate_models, write_catalog, ModelSpec};
use starsemi::TierSet;

fn main() -> starsemi::Result<()> {
    let mut args = std::env::args().skip(1);
    let max: usize = args.next().map_or(4, |a| a.parse().expect("order must be a number"));
    let tiers: TierSet = args.next().unwrap_or_else(|| "involution,poe".into()).parse()?;
    let out = args.next();

    for order in 1..=max {
        let start = Instant::now();
        let catalog = enumerate_models(&ModelSpec::new(order, tiers))?;
        println!(
            "order {order}: {:>6} models with tiers {}  ({:.2?})",
            catalog.models.len(),
            catalog.tiers,
            start.elapsed()
        );
        if let Some(dir) = &out {
            write_catalog(Path::new(dir), &catalog)?;
        }
    }
    Ok(())
}
