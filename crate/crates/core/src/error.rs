use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("truncation order mismatch: {0} vs {1}")]
    OrderMismatch(usize, usize),
    #[error("operands belong to different algebra contexts")]
    ContextMismatch,
    #[error("leg count mismatch: {0} vs {1}")]
    LegMismatch(usize, usize),
    #[error("not invertible: {0}")]
    NotInvertible(String),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("degenerate metric")]
    DegenerateMetric,
    #[error("invalid metric: {0}")]
    InvalidMetric(String),
    #[error("zero deformation vector")]
    ZeroTau,
    #[error("{0}")]
    NullTau(String),
    #[error("{0}")]
    NonNullTau(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal consistency defect: {0}")]
    Defect(String),
}

pub type Result<T> = std::result::Result<T, Error>;
