use thiserror::Error;

/// Errors raised by constructors, parsers and operations with preconditions.
///
/// Verification outcomes are never errors: identity checks return a
/// [`Report`](crate::report::Report) whether they pass or fail.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("cannot parse scalar `{text}`: {reason}")]
    ParseScalar { text: String, reason: String },

    #[error("{what} violates its axioms: {detail}")]
    AxiomViolation { what: String, detail: String },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("{location}: {message}")]
    Format { location: String, message: String },

    #[error("unknown reference `{0}`")]
    UnknownReference(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn dim_err(msg: impl Into<String>) -> Error {
    Error::DimensionMismatch(msg.into())
}
