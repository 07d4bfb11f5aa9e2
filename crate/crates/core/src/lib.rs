//! A finite-model workbench for involution ordered semigroups.
//!
//! Structures are explicit tables: a multiplication table, a partial order and
//! an optional involution `*`. The crate validates the axiom tiers a structure
//! attains ([`structure`]), classifies elements against the ideal-element
//! predicates ([`ideals`]), decides regularity and its starred variants
//! ([`regularity`]), computes principal filters and their classes
//! ([`filters`]), checks a registry of proven statements about these
//! structures ([`claims`]) and enumerates every model of a small order up to
//! isomorphism ([`enumerate`]).
//!
//! ```
//! use starsemi::format::parse_structure;
//! use starsemi::structure::{validate_structure, Tier};
//!
//! let src = "n 2\nlabels 0 e\nmult\n0 0\n0 e\nleq\n0 <= e\nstar\n0 -> 0\ne -> e\n";
//! let (alg, report) = validate_structure(parse_structure(src).unwrap()).unwrap();
//! assert!(alg.has(Tier::Le) && alg.has(Tier::Involution));
//! assert!(report.violations.is_empty());
//! ```

pub mod claims;
pub mod cli;
pub mod elemset;
pub mod enumerate;
pub mod error;
pub mod filters;
pub mod format;
pub mod ideals;
pub mod regularity;
pub mod structure;

pub use elemset::ElemSet;
pub use error::{Error, Result};
pub use structure::{validate_structure, Elem, OrderedAlgebra, RawStructure, Tier, TierSet};
