use std::io;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// Input outside an operation's mathematical domain (zero inverse, …).
    #[error("domain error: {0}")]
    Domain(String),

    /// Caller-supplied argument is invalid (grid mismatch, bad parameter).
    #[error("invalid argument: {0}")]
    Argument(String),

    /// Object is missing state the operation needs.
    #[error("state error: {0}")]
    State(String),

    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error(transparent)]
    Io(#[from] io::Error),
}
