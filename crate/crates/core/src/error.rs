use thiserror::Error;

/// Errors from model construction and parsing.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator universe mismatch: {0}")]
    UniverseMismatch(String),
    #[error("rank {0} out of range ({1})")]
    RankOutOfRange(i64, &'static str),
    #[error("index {index} out of range 1..={k}")]
    IndexOutOfRange { index: usize, k: usize },
    #[error("structural error: {0}")]
    Structural(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("cost guard exceeded: {0}")]
    CostGuard(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
