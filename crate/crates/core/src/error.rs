use thiserror::Error;

use crate::freegroup::ValidationReport;
use crate::Depth;

/// Position of a syntax error inside a text input (1-based).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.column, self.message)
    }
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("generator index {index} out of range 1..={rank}")]
    IndexOutOfRange { index: i64, rank: usize },

    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },

    #[error("genus mismatch: {left} vs {right}")]
    GenusMismatch { left: usize, right: usize },

    #[error("invalid genus {0}")]
    InvalidGenus(usize),

    #[error("invalid degree {0}")]
    InvalidDegree(usize),

    #[error("expected {expected} generator images, found {found}")]
    ImageCount { expected: usize, found: usize },

    #[error("mapping class failed validation: {0}")]
    Validation(ValidationReport),

    #[error("mapping class carries no verified inverse")]
    MissingInverse,

    #[error("mapping class is not in J({k}): depth {depth}")]
    NotInJk { k: usize, depth: Depth },

    #[error("degree-{degree} series is not a Lie element")]
    NotALieElement { degree: usize },

    #[error("quadratic form has Arf invariant 1")]
    ArfNonZero,

    #[error("vector length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("genus {genus} is outside the supported range 1..={max}")]
    GenusOutOfBounds { genus: usize, max: usize },

    #[error("invalid descriptor: {0}")]
    InvalidDescriptor(String),

    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),

    #[error("parse error at {0}")]
    Parse(ParseError),

    #[error("cannot read `{path}`: {message}")]
    Io { path: String, message: String },
}

impl Error {
    /// Stable machine-readable code used by the CLI `error: <CODE>` line.
    pub fn code(&self) -> &'static str {
        match self {
            Error::IndexOutOfRange { .. } => "INDEX_OUT_OF_RANGE",
            Error::RankMismatch { .. } => "RANK_MISMATCH",
            Error::GenusMismatch { .. } => "GENUS_MISMATCH",
            Error::InvalidGenus(_) => "INVALID_GENUS",
            Error::InvalidDegree(_) => "INVALID_DEGREE",
            Error::ImageCount { .. } => "IMAGE_COUNT",
            Error::Validation(_) => "VALIDATION_FAILED",
            Error::MissingInverse => "MISSING_INVERSE",
            Error::NotInJk { .. } => "NOT_IN_JK",
            Error::NotALieElement { .. } => "NOT_A_LIE_ELEMENT",
            Error::ArfNonZero => "ARF_NONZERO",
            Error::LengthMismatch { .. } => "LENGTH_MISMATCH",
            Error::GenusOutOfBounds { .. } => "GENUS_OUT_OF_BOUNDS",
            Error::InvalidDescriptor(_) => "INVALID_DESCRIPTOR",
            Error::UnknownGenerator(_) => "UNKNOWN_GENERATOR",
            Error::Parse(_) => "PARSE_ERROR",
            Error::Io { .. } => "IO_ERROR",
        }
    }

    /// Errors caused by malformed input rather than by the mathematics.
    pub fn is_usage(&self) -> bool {
        matches!(
            self,
            Error::Parse(_)
                | Error::Io { .. }
                | Error::UnknownGenerator(_)
                | Error::InvalidDescriptor(_)
                | Error::IndexOutOfRange { .. }
                | Error::InvalidGenus(_)
                | Error::InvalidDegree(_)
                | Error::ImageCount { .. }
                | Error::GenusOutOfBounds { .. }
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
