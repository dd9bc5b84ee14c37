use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid ring descriptor: {0}")]
    InvalidRing(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("operation requires a field, but the ring is {0}")]
    NonField(String),
    #[error("size limit exceeded: {0}")]
    SizeLimit(String),
    /// An element was expected to lie in a span it does not lie in; this
    /// always indicates an implementation bug rather than bad input.
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
