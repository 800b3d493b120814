//! Crate-wide error type.

use std::fmt;

/// Errors produced by waveform construction, estimation, and I/O.
#[derive(Debug)]
pub enum Error {
    /// A precondition on an argument was violated.
    InvalidArgument(String),
    /// A waveform does not extend far enough for the requested estimate.
    /// Estimators never truncate silently.
    InsufficientLength(String),
    /// The requested construction is not defined for these inputs.
    UnsupportedConstruction(String),
    /// An iterative numerical routine failed to converge.
    Numerical(String),
    /// A waveform file is malformed (bad magic, truncated payload, ...).
    Format(String),
    /// Underlying I/O failure.
    Io(std::io::Error),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidArgument(msg) => write!(f, "invalid argument: {msg}"),
            Error::InsufficientLength(msg) => write!(f, "insufficient waveform length: {msg}"),
            Error::UnsupportedConstruction(msg) => write!(f, "unsupported construction: {msg}"),
            Error::Numerical(msg) => write!(f, "numerical failure: {msg}"),
            Error::Format(msg) => write!(f, "malformed waveform file: {msg}"),
            Error::Io(err) => write!(f, "i/o error: {err}"),
        }
    }
}

impl std::error::Error for Error {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            Error::Io(err) => Some(err),
            _ => None,
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err)
    }
}

impl Error {
    /// True for errors that indicate a bad request rather than a runtime
    /// failure; the CLI maps these to exit code 2.
    pub fn is_validation(&self) -> bool {
        matches!(
            self,
            Error::InvalidArgument(_)
                | Error::InsufficientLength(_)
                | Error::UnsupportedConstruction(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
