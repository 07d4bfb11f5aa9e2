//! Runs registered claims against one structure and prints each report as a
//! JSON record.
//!
//! cargo run --example check_claims -- [FILE] [all|mutants|id,id,...]

use starsemi::claims::{check_claims, resolve_claims, Status};
use starsemi::format::parse_structure;
use starsemi::validate_structure;

fn main() -> starsemi::Result<()> {
    let mut args = std::env::args().skip(1);
    let path = args
        .next()
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/data/example2_candidate.txt").into());
    let claims = resolve_claims(&args.next().unwrap_or_else(|| "all".into()))?;
    let (s, _) = validate_structure(parse_structure(&std::fs::read_to_string(path)?)?)?;

    let reports = check_claims(&s, &claims);
    for r in &reports {
        println!("{}", serde_json::to_string(&r.to_record(&s)).unwrap());
    }
    let count = |st| reports.iter().filter(|r| r.status == st).count();
    eprintln!(
        "{} pass, {} fail, {} not applicable",
        count(Status::Pass),
        count(Status::Fail),
        count(Status::NotApplicable)
    );
    Ok(())
}
