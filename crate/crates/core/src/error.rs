use thiserror::Error;

/// Errors produced by the library.
///
/// `Capacity` marks requests that exceed the desk-scale enumeration budget
/// (dense tables above n = 24, exact integer work above d = 40, and so on);
/// callers that surface exit codes treat it separately from plain misuse.
#[derive(Debug, Error)]
pub enum Error {
    /// The request exceeds a hard enumeration or memory budget.
    #[error("capacity exceeded: {0}")]
    Capacity(String),

    /// A parameter is outside its documented domain.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Exact integer arithmetic would overflow 128 bits.
    #[error("integer overflow in exact arithmetic: {0}")]
    Overflow(String),

    /// A text or JSON input could not be parsed.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// JSON (de)serialization failure.
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),

    /// Underlying I/O failure.
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn capacity(msg: impl Into<String>) -> Self {
        Error::Capacity(msg.into())
    }

    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub(crate) fn overflow(msg: impl Into<String>) -> Self {
        Error::Overflow(msg.into())
    }
}
