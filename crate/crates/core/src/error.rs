use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed or out-of-range input data.
    #[error("input error: {0}")]
    Input(String),
    /// The request exceeds a documented cap of an exhaustive backend.
    #[error("capability error: {0}")]
    Capability(String),
    /// An operation precondition does not hold for the given arguments.
    #[error("precondition error: {0}")]
    Precondition(String),
    /// Two independent computations disagreed, or a proven property failed.
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
