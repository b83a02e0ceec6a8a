use thiserror::Error;

/// Errors shared across the toolkit.
#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex index {index} out of range for n = {n}")]
    VertexOutOfRange { index: usize, n: usize },

    #[error("vertex sets must be disjoint (vertex {vertex} is in both)")]
    OverlappingSets { vertex: usize },

    #[error("parts must have equal size (found sizes {found:?})")]
    UnequalParts { found: Vec<usize> },

    #[error("invalid size vector: {reason}")]
    InvalidSizeVector { reason: String },

    #[error("{what} count {count} exceeds budget {budget}")]
    BudgetExceeded {
        what: &'static str,
        count: u128,
        budget: u128,
    },

    #[error("infeasible parameters: {0}")]
    Infeasible(String),

    #[error("invalid parameter: {0}")]
    InvalidParam(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("internal fault: {0}")]
    InternalFault(String),
}

pub type Result<T> = std::result::Result<T, Error>;
