use thiserror::Error;

use crate::improver::ImprovementTrace;

/// Errors produced by the geometric kernels and the improvement engine.
#[derive(Debug, Error)]
pub enum GeomError {
    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("argument outside the function domain: {0}")]
    Domain(String),

    /// The improvement loop ran past its move budget. The partial trace is
    /// attached so the offending instance can be inspected.
    #[error("improvement did not terminate within {budget} moves")]
    NonTermination {
        budget: usize,
        trace: Box<ImprovementTrace>,
    },

    #[error("internal invariant broken: {0}")]
    Invariant(String),
}

pub type Result<T, E = GeomError> = std::result::Result<T, E>;
