use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Error type shared across the crate.
///
/// `Compatibility` is kept distinct from `Invalid` so callers (the CLI in
/// particular) can map schema-hash and version mismatches to their own exit
/// code.
#[derive(Debug, Error)]
pub enum Error {
    /// Invalid input: bad configuration, malformed data files, unresolvable
    /// ids, shape mismatches.
    #[error("{0}")]
    Invalid(String),

    /// A model artifact does not match the data or tooling it is used with
    /// (schema hash, format version).
    #[error("{0}")]
    Compatibility(String),

    /// Numerical failure during training or inference.
    #[error("{0}")]
    Numeric(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }

    pub fn compat(msg: impl Into<String>) -> Self {
        Error::Compatibility(msg.into())
    }

    pub fn numeric(msg: impl Into<String>) -> Self {
        Error::Numeric(msg.into())
    }
}
