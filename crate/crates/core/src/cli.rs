//! Command-line front end. [`run`] takes its arguments and output streams
//! explicitly so it can be driven from tests.
//!
//! Exit codes: 0 success, 1 a claim failed or a required axiom is violated,
//! 2 usage, parse or I/O error.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::Serialize;

use crate::claims::{check_claims, resolve_claims, ClaimRecord, Status};
use crate::elemset::ElemSet;
use crate::enumerate::{
    compatible_orders, enumerate_models, search_counterexample, sweep_claims, write_catalog, ModelSpec,
    OrderConstraints, SearchReport,
};
use crate::error::{Error, Result};
use crate::filters::{all_filters, partition_from_filters, star_sandwich_set};
use crate::format::{parse_structure, transitive_reduction};
use crate::ideals::{classify_all, generated_left, generated_right, ElementClassification};
use crate::regularity::regularity_profile;
use crate::structure::{validate_structure, OrderedAlgebra, RawStructure, Tier, TierSet, Violation};

#[derive(Parser, Debug)]
#[command(name = "starsemi", version, about = "Finite ordered semigroups with involution")]
struct Cli {
    /// Emit one JSON record per line instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Report which axiom tiers a structure attains.
    Validate {
        file: PathBuf,
        /// Fail unless these tiers are attained (comma-separated).
        #[arg(long, value_parser = parse_tiers)]
        require: Option<TierSet>,
    },
    /// Per-element classification table and regularity profile.
    Classify { file: PathBuf },
    /// Check claims on one structure.
    Check {
        file: PathBuf,
        /// Claim ids (comma-separated), `all` or `mutants`.
        #[arg(long, default_value = "all")]
        claims: String,
    },
    /// Principal filters, their classes and sandwich sets.
    Filters { file: PathBuf },
    /// Enumerate models up to an order and check claims on each.
    Search {
        #[arg(long)]
        order: usize,
        #[arg(long, value_parser = parse_tiers, default_value = "po-semigroup")]
        tiers: TierSet,
        #[arg(long)]
        claims: Option<String>,
        /// Write each catalog (one file per model plus index.txt) here.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Keep going after the first failure.
        #[arg(long)]
        keep_going: bool,
        /// Cap the number of models per order.
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Partial orders compatible with a file's multiplication and star.
    Orders {
        file: PathBuf,
        #[arg(long)]
        require_greatest: bool,
        #[arg(long)]
        require_lattice: bool,
        /// Skip the equality order.
        #[arg(long)]
        nontrivial: bool,
    },
}

fn parse_tiers(s: &str) -> std::result::Result<TierSet, String> {
    s.parse::<TierSet>().map_err(|e| e.to_string())
}

/// Runs one invocation and returns the exit code.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if e.use_stderr() {
                write!(err, "{e}")
            } else {
                write!(out, "{e}")
            };
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn load(path: &Path) -> Result<OrderedAlgebra> {
    Ok(validate_structure(parse_structure(&read(path)?)?)?.0)
}

fn emit<T: Serialize>(out: &mut dyn Write, record: &T) -> Result<()> {
    writeln!(out, "{}", serde_json::to_string(record).expect("records serialize"))?;
    Ok(())
}

fn set_labels(s: &OrderedAlgebra, set: ElemSet) -> Vec<String> {
    set.iter().map(|a| s.label(a).to_string()).collect()
}

fn show_set(s: &OrderedAlgebra, set: ElemSet) -> String {
    format!("{{{}}}", set_labels(s, set).join(", "))
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    let json = cli.json;
    match &cli.command {
        Command::Validate { file, require } => validate(file, *require, json, out),
        Command::Classify { file } => classify(&load(file)?, json, out),
        Command::Check { file, claims } => check(&load(file)?, claims, json, out),
        Command::Filters { file } => filters(&load(file)?, json, out),
        Command::Search {
            order,
            tiers,
            claims,
            out: dir,
            keep_going,
            limit,
        } => {
            let spec = ModelSpec {
                order: *order,
                required_tiers: *tiers,
                claim_filter: claims.as_ref().map(|c| c.split(',').map(str::to_string).collect()),
                limit: *limit,
            };
            search(&spec, claims.as_deref(), dir.as_deref(), *keep_going, json, out)
        }
        Command::Orders {
            file,
            require_greatest,
            require_lattice,
            nontrivial,
        } => {
            let constraints = OrderConstraints {
                require_greatest: *require_greatest,
                require_lattice: *require_lattice,
                nontrivial: *nontrivial,
            };
            orders(file, constraints, json, out)
        }
    }
}

#[derive(Serialize)]
struct ViolationRecord<'a> {
    tier: Tier,
    axiom: crate::structure::Axiom,
    witness: Vec<&'a str>,
}

#[derive(Serialize)]
struct ValidationRecord<'a> {
    order: usize,
    accepted: TierSet,
    violations: Vec<ViolationRecord<'a>>,
}

fn validate(file: &Path, require: Option<TierSet>, json: bool, out: &mut dyn Write) -> Result<i32> {
    let (s, report) = validate_structure(parse_structure(&read(file)?)?)?;
    let witness = |v: &Violation| v.witness.iter().map(|&a| s.label(a)).collect::<Vec<_>>();
    if json {
        emit(
            out,
            &ValidationRecord {
                order: s.n(),
                accepted: report.accepted,
                violations: report
                    .violations
                    .iter()
                    .map(|v| ViolationRecord {
                        tier: v.tier,
                        axiom: v.axiom,
                        witness: witness(v),
                    })
                    .collect(),
            },
        )?;
    } else {
        writeln!(out, "order {}", s.n())?;
        for tier in Tier::ALL {
            if report.accepted.contains(tier) {
                writeln!(out, "{:<14} ok", tier.name())?;
                continue;
            }
            writeln!(out, "{:<14} FAIL", tier.name())?;
            for v in report.violations_for(tier) {
                writeln!(out, "  {:?} at ({})", v.axiom, witness(v).join(", "))?;
            }
        }
    }
    let required = require.unwrap_or_default().closure();
    let ok = report.accepted.contains(Tier::PoGroupoid) && report.accepted.is_superset(required);
    Ok(if ok { 0 } else { 1 })
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

#[derive(Serialize)]
struct ElementRecord<'a> {
    label: &'a str,
    #[serde(flatten)]
    classification: &'a ElementClassification,
    l: Option<&'a str>,
    r: Option<&'a str>,
}

#[derive(Serialize)]
struct ProfileRecord {
    regular: bool,
    intra_regular: bool,
    star_regular: Option<bool>,
    star_intra_regular: Option<bool>,
}

fn classify(s: &OrderedAlgebra, json: bool, out: &mut dyn Write) -> Result<i32> {
    let rows = classify_all(s);
    let gen = |a: Option<usize>| a.map(|x| s.label(x));
    if json {
        for c in &rows {
            emit(
                out,
                &ElementRecord {
                    label: s.label(c.element),
                    classification: c,
                    l: gen(generated_left(s, c.element)),
                    r: gen(generated_right(s, c.element)),
                },
            )?;
        }
    } else {
        let width = s.labels().iter().map(String::len).max().unwrap_or(1).max(4);
        write!(out, "{:<width$}", "elem")?;
        for col in ElementClassification::COLUMNS {
            write!(out, " {col:>7}")?;
        }
        writeln!(out, " {:>5} {:>5}", "l(a)", "r(a)")?;
        for c in &rows {
            write!(out, "{:<width$}", s.label(c.element))?;
            for sym in c.symbols() {
                write!(out, " {sym:>7}")?;
            }
            let lr = |x: Option<&str>| x.unwrap_or("-").to_string();
            writeln!(
                out,
                " {:>5} {:>5}",
                lr(gen(generated_left(s, c.element))),
                lr(gen(generated_right(s, c.element)))
            )?;
        }
        writeln!(out, "(+ holds, - fails, ? meet undefined, . not applicable)")?;
    }
    match regularity_profile(s) {
        Ok(p) => {
            let rec = ProfileRecord {
                regular: p.regular,
                intra_regular: p.intra_regular,
                star_regular: p.star_regular,
                star_intra_regular: p.star_intra_regular,
            };
            if json {
                emit(out, &rec)?;
            } else {
                let opt = |b: Option<bool>| b.map_or("n/a".to_string(), |b| b.to_string());
                writeln!(
                    out,
                    "regular {}  intra-regular {}  *-regular {}  *-intra-regular {}",
                    p.regular,
                    p.intra_regular,
                    opt(p.star_regular),
                    opt(p.star_intra_regular)
                )?;
            }
        }
        Err(_) if !json => writeln!(out, "regularity: no greatest element")?,
        Err(_) => {}
    }
    Ok(0)
}

fn check(s: &OrderedAlgebra, selection: &str, json: bool, out: &mut dyn Write) -> Result<i32> {
    let claims = resolve_claims(selection)?;
    let records: Vec<ClaimRecord> = check_claims(s, &claims).iter().map(|r| r.to_record(s)).collect();
    for r in &records {
        if json {
            emit(out, r)?;
        } else {
            write!(out, "{:<20} {:<15} {:>7} instances", r.id, r.status.to_string(), r.instances_checked)?;
            if r.vacuous {
                write!(out, "  (vacuous)")?;
            }
            if let Some(w) = &r.witness {
                write!(out, "  witness ({})", w.join(", "))?;
            }
            writeln!(out)?;
        }
    }
    let failed = records.iter().any(|r| r.status == Status::Fail);
    Ok(failed as i32)
}

#[derive(Serialize)]
struct FilterRecord<'a> {
    element: &'a str,
    filter: Vec<String>,
    sandwich: Option<Vec<String>>,
}

#[derive(Serialize)]
struct ClassRecord<'a> {
    class: Vec<String>,
    greatest: Option<&'a str>,
}

fn filters(s: &OrderedAlgebra, json: bool, out: &mut dyn Write) -> Result<i32> {
    let fs = all_filters(s);
    for x in s.elements() {
        let sandwich = star_sandwich_set(s, x).ok();
        if json {
            emit(
                out,
                &FilterRecord {
                    element: s.label(x),
                    filter: set_labels(s, fs[x]),
                    sandwich: sandwich.map(|w| set_labels(s, w)),
                },
            )?;
        } else {
            write!(out, "N({}) = {}", s.label(x), show_set(s, fs[x]))?;
            if let Some(w) = sandwich {
                write!(out, "   {{y | x <= e y* e}} = {}", show_set(s, w))?;
            }
            writeln!(out)?;
        }
    }
    let p = partition_from_filters(s, &fs);
    for (block, g) in p.blocks.iter().zip(&p.block_greatest) {
        let greatest = g.map(|g| s.label(g));
        if json {
            emit(
                out,
                &ClassRecord {
                    class: set_labels(s, *block),
                    greatest,
                },
            )?;
        } else {
            writeln!(out, "class {}  greatest {}", show_set(s, *block), greatest.unwrap_or("none"))?;
        }
    }
    Ok(0)
}

#[derive(Serialize)]
struct CatalogRecord {
    order: usize,
    models: usize,
    truncated: bool,
}

fn search(
    spec: &ModelSpec,
    selection: Option<&str>,
    dir: Option<&Path>,
    keep_going: bool,
    json: bool,
    out: &mut dyn Write,
) -> Result<i32> {
    let claims = match selection {
        Some(sel) => resolve_claims(sel)?,
        None => Vec::new(),
    };
    if dir.is_some() || claims.is_empty() {
        for order in 1..=spec.order {
            let catalog = enumerate_models(&ModelSpec { order, ..spec.clone() })?;
            if let Some(d) = dir {
                write_catalog(d, &catalog)?;
            }
            if claims.is_empty() {
                let rec = CatalogRecord {
                    order,
                    models: catalog.models.len(),
                    truncated: catalog.truncated,
                };
                if json {
                    emit(out, &rec)?;
                } else {
                    let cut = if rec.truncated { " (truncated)" } else { "" };
                    writeln!(out, "order {order}: {} models{cut}", rec.models)?;
                }
            }
        }
        if claims.is_empty() {
            return Ok(0);
        }
    }
    let report = if keep_going {
        sweep_claims(spec, &claims)?
    } else {
        search_counterexample(spec, &claims)?
    };
    if json {
        emit(out, &report)?;
    } else {
        print_search(&report, out)?;
    }
    Ok(report.counterexample.is_some() as i32)
}

fn print_search(r: &SearchReport, out: &mut dyn Write) -> Result<()> {
    writeln!(out, "tiers {}  orders 1..={}", r.tiers, r.max_order)?;
    writeln!(out, "models checked per order: {:?}", r.models_checked)?;
    if r.truncated {
        writeln!(out, "catalog truncated by --limit")?;
    }
    for t in &r.tallies {
        writeln!(
            out,
            "{:<20} applicable {:>6}  failed {:>4}  instances {:>8}",
            t.id, t.structures_applicable, t.structures_failed, t.instances
        )?;
    }
    if !r.without_instances.is_empty() {
        writeln!(out, "no non-vacuous instance: {}", r.without_instances.join(", "))?;
    }
    for c in &r.failures {
        writeln!(
            out,
            "counterexample to {} (order {}, model #{}), witness ({}):",
            c.report.id,
            c.order,
            c.model_index,
            c.witness.join(", ")
        )?;
        write!(out, "{}", c.structure)?;
    }
    if r.failures.is_empty() {
        writeln!(out, "no counterexample")?;
    }
    Ok(())
}

#[derive(Serialize)]
struct OrderRecord {
    index: usize,
    covers: Vec<(String, String)>,
    greatest: Option<String>,
    lattice: bool,
}

fn orders(file: &Path, constraints: OrderConstraints, json: bool, out: &mut dyn Write) -> Result<i32> {
    let raw = parse_structure(&read(file)?)?;
    let found = compatible_orders(&raw.mult, raw.star.as_deref(), constraints)?;
    let base = validate_structure(RawStructure {
        leq: (0..raw.n).map(|i| (0..raw.n).map(|j| i == j).collect()).collect(),
        ..raw.clone()
    })?
    .0;
    for (index, leq) in found.iter().enumerate() {
        let s = validate_structure(RawStructure {
            leq: leq.clone(),
            ..raw.clone()
        })?
        .0;
        let rec = OrderRecord {
            index,
            covers: transitive_reduction(leq)
                .into_iter()
                .map(|(a, b)| (base.label(a).to_string(), base.label(b).to_string()))
                .collect(),
            greatest: s.greatest().map(|g| s.label(g).to_string()),
            lattice: s.all_joins() && s.all_meets(),
        };
        if json {
            emit(out, &rec)?;
        } else {
            let covers: Vec<String> = rec.covers.iter().map(|(a, b)| format!("{a}<={b}")).collect();
            writeln!(
                out,
                "order #{index}: {}  greatest {}  lattice {}",
                if covers.is_empty() { "equality".to_string() } else { covers.join(" ") },
                rec.greatest.as_deref().unwrap_or("none"),
                rec.lattice
            )?;
        }
    }
    if !json {
        writeln!(out, "{} orders", found.len())?;
    }
    Ok(0)
}
