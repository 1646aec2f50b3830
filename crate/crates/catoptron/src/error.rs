use thiserror::Error;

/// Errors surfaced by the exact kernels and the group-theoretic layers.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("exact division failed: divisor does not divide dividend")]
    NotDivisible,
    #[error("linear system is inconsistent")]
    NoSolution,
    #[error("rational function has a pole at t = 1")]
    PoleAtOne,
    #[error("polynomial is not expressible in the basic invariants")]
    NotInvariant,
    #[error("unsupported group for this operation: {0}")]
    Unsupported(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("internal consistency error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
