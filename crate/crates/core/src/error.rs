use thiserror::Error;

/// Errors produced by graph construction, hypergraph construction and the solvers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KdError {
    #[error("vertex {vertex} out of range for graph on {n} vertices (edge #{index})")]
    VertexOutOfRange {
        vertex: usize,
        n: usize,
        index: usize,
    },

    #[error("self-loop at vertex {vertex} (edge #{index})")]
    SelfLoop { vertex: usize, index: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// The requested closed form is only established on a smaller parameter range.
    #[error("outside the range where the closed form is established: {0}")]
    OutsideProvenRange(String),

    /// The instance is too large for the configured construction or solver budget.
    #[error("{what} too large: {size} exceeds limit {limit}")]
    TooLarge {
        what: &'static str,
        size: u128,
        limit: u128,
    },
}

impl KdError {
    pub(crate) fn param(msg: impl Into<String>) -> Self {
        KdError::InvalidParameter(msg.into())
    }

    /// True when the error is a budget/size guard rather than bad input.
    pub fn is_budget(&self) -> bool {
        matches!(self, KdError::TooLarge { .. })
    }
}

pub type Result<T> = std::result::Result<T, KdError>;
