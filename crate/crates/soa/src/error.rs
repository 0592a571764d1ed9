//! Error types shared across the crate.

/// Errors produced by array operations, constructions and parsing.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// An argument violates an operation's contract (bad order, mismatched
    /// shapes, divisibility failures, out-of-range entries, ...).
    #[error("parameter error: {0}")]
    Parameter(String),

    /// A construction could not complete because an internal consistency
    /// check failed (usually an input that does not have its advertised
    /// property).
    #[error("construction error: {0}")]
    Construction(String),

    /// Malformed array file.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    pub(crate) fn parameter(msg: impl Into<String>) -> Self {
        Error::Parameter(msg.into())
    }

    pub(crate) fn construction(msg: impl Into<String>) -> Self {
        Error::Construction(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
