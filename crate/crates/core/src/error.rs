use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("precondition violated: {clause}")]
    PreconditionViolated { clause: String },

    /// Raised only if the block cover check fails although its preconditions
    /// hold. Seeing this means an internal consistency bug.
    #[error("cover failed: {missing} point(s) of ({lo}, {hi}] uncovered, first {first}")]
    CoverFailed {
        lo: usize,
        hi: usize,
        missing: usize,
        first: usize,
    },

    #[error("ratio condition not satisfied: {0}")]
    RatioNotSatisfied(String),

    #[error("index out of range: need a_{index} but only {available} element(s) within horizon")]
    IndexOutOfRange { index: usize, available: usize },

    #[error("hypothesis violated: translate by {x} meets R in {count} > {r} point(s)")]
    HypothesisViolated { x: usize, count: usize, r: usize },

    #[error("block precondition failed at exponent {exponent}: {reason}")]
    BlockPreconditionFailed { exponent: u32, reason: String },

    #[error("horizon {horizon} too small, need at least {needed}")]
    HorizonTooSmall { horizon: usize, needed: usize },

    #[error("instance too large for exhaustive search: |B| = {size} > {cap}")]
    TooLarge { size: usize, cap: usize },

    #[error("no cover: candidate translates leave {uncovered} target(s) uncovered")]
    NoCover { uncovered: usize },

    #[error("{path}:{line}: {message}")]
    Parse {
        path: PathBuf,
        line: usize,
        message: String,
    },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    /// Variant name, for diagnostics and exit-code mapping.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidInput(_) => "InvalidInput",
            Error::PreconditionViolated { .. } => "PreconditionViolated",
            Error::CoverFailed { .. } => "CoverFailed",
            Error::RatioNotSatisfied(_) => "RatioNotSatisfied",
            Error::IndexOutOfRange { .. } => "IndexOutOfRange",
            Error::HypothesisViolated { .. } => "HypothesisViolated",
            Error::BlockPreconditionFailed { .. } => "BlockPreconditionFailed",
            Error::HorizonTooSmall { .. } => "HorizonTooSmall",
            Error::TooLarge { .. } => "TooLarge",
            Error::NoCover { .. } => "NoCover",
            Error::Parse { .. } => "Parse",
            Error::Io { .. } => "Io",
        }
    }

    pub(crate) fn precondition(clause: impl Into<String>) -> Self {
        Error::PreconditionViolated {
            clause: clause.into(),
        }
    }
}
