use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("mu = {mu} is not contained in lambda = {lambda}")]
    NotContained { lambda: String, mu: String },
    #[error("letter index {index} out of range 1..={n}")]
    LetterOutOfRange { index: u32, n: u32 },
    #[error("rank n must be at least 1")]
    InvalidRank,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("positivity condition violated: depth {depth} > n + 1 = {}", .n + 1)]
    Positivity { depth: usize, n: u32 },
    #[error("not a region of this half-pair")]
    NotARegion,
    #[error("k = {k} out of range 1..={max}")]
    IndexOutOfRange { k: usize, max: usize },
    #[error("tableau violates rule ({0})")]
    RuleViolation(&'static str),
    #[error("path tuple is not in P_HV: {0}")]
    NotHv(String),
    #[error("shape has {0} columns; at most two are supported")]
    TooManyColumns(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
