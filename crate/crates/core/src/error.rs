use thiserror::Error;

/// Errors raised by the algebraic operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("invalid color: {0}")]
    InvalidColor(String),
    #[error("invalid sequence: {0}")]
    InvalidSequence(String),
    #[error("color sequence mismatch: {0} vs {1}")]
    SequenceMismatch(String, String),
    #[error("unsupported basis: {0}")]
    UnsupportedBasis(String),
    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("invalid composition: {0}")]
    InvalidComposition(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
