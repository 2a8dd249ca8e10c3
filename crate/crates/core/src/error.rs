use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("shape error: {0}")]
    Shape(String),
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("not a Calogero-Moser point: rank([X, Y] + I) = {rank}, expected 1")]
    NotCmPoint { rank: usize },
    #[error("invalid generator: {0}")]
    InvalidGenerator(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("graph error: {0}")]
    Graph(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("orbit classification is inconsistent: {0}")]
    InconsistentClasses(String),
    #[error("search budget exhausted: {0}")]
    BudgetExhausted(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
