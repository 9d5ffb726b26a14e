//! Error type shared across the crate.

/// Errors surfaced by the library.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// A quantity diverges at a symbolic quantum parameter (q = 0 or ∞) and
    /// has no finite value; callers must use the dedicated limit evaluators.
    #[error("divergent at symbolic q: {0}")]
    DivergentLimit(String),
    /// An argument violates a precondition.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    /// Vector/matrix dimensions do not match.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    /// A dense construction exceeds the configured size cap.
    #[error("size cap exceeded: {0}")]
    CapExceeded(String),
    /// Text could not be parsed as a partition, tableau, word, or q value.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
