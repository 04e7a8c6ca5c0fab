use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("invalid ensemble spec: {0}")]
    InvalidSpec(String),

    #[error("graph sampling failed after {attempts} attempts: {reason}")]
    SamplingFailure { attempts: usize, reason: String },

    #[error("graph construction failed: {0}")]
    Construction(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("outside the bound's validity window: {0}")]
    Regime(String),

    #[error("solution space has dimension {dimension}, above the enumeration limit {limit}")]
    Capacity { dimension: usize, limit: usize },

    #[error("not applicable: {0}")]
    NotApplicable(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
