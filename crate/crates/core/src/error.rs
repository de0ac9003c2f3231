use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Input outside the domain of an operation (e.g. `delta(0)`).
    #[error("domain error: {0}")]
    Domain(String),
    /// Mutually inconsistent inputs (e.g. degree sum that is not `2m`).
    #[error("inconsistent input: {0}")]
    Inconsistent(String),
    /// No object with the requested parameters exists.
    #[error("infeasible instance: {0}")]
    Infeasible(String),
    /// Instance exceeds the brute-force size guard.
    #[error("instance too large for exhaustive search: {0}")]
    TooLarge(String),
    /// Lookup of an unregistered index function.
    #[error("unknown index: {0}")]
    UnknownIndex(String),
    /// Index function lacks the flags a theorem-backed fast path requires.
    #[error("index function contract not satisfied: {0}")]
    Contract(String),
    /// Malformed textual input; `position` is a byte offset.
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
