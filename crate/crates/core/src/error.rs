use thiserror::Error;

use crate::structure::Tier;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// The tables do not describe a structure at all (wrong shape, indices out
    /// of range, a star that is not a permutation). Distinct from an axiom
    /// violation, which is reported in a `ValidationReport`.
    #[error("malformed structure: {0}")]
    Malformed(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("operation requires the {0} tier")]
    TierRequired(Tier),

    #[error("structure of order {order} exceeds the limit of {limit} for {what}")]
    TooLarge {
        what: &'static str,
        order: usize,
        limit: usize,
    },

    #[error("unknown claim id(s): {}", .0.join(", "))]
    UnknownClaims(Vec<String>),

    #[error("invalid model spec: {0}")]
    InvalidSpec(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
