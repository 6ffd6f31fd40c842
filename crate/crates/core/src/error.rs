use thiserror::Error;

/// Errors raised by the computational modules.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Two operands disagree on truncation order, lattice rank or matrix shape.
    #[error("shape mismatch: {0}")]
    Mismatch(String),
    /// A series with zero constant term was inverted.
    #[error("series is not invertible: constant term is zero")]
    NotInvertible,
    #[error("coefficient index {index} exceeds truncation order {order}")]
    Index { index: usize, order: usize },
    /// Arguments outside the range where the computation is defined.
    #[error("domain error: {0}")]
    Domain(String),
    /// Malformed user input (CLI flags, sweep specifications).
    #[error("invalid input: {0}")]
    Input(String),
    /// An arithmetic postcondition failed; this indicates a bug, not bad input.
    #[error("internal assertion failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
