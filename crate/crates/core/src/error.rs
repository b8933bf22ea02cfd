use thiserror::Error;

use crate::exact::Var;

/// Errors raised by the exact-arithmetic layer and the geometry built on it.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("cannot parse {what} `{input}`: {reason}")]
    Parse { what: &'static str, input: String, reason: String },

    #[error("variable {0:?} is not part of the context {1}")]
    UnknownVariable(Var, String),

    #[error("context mismatch: {0} vs {1}")]
    ContextMismatch(String, String),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("zero vector does not define a projective object")]
    ZeroVector,

    #[error("multiplicity must be at least 1")]
    ZeroMultiplicity,

    #[error("group closure exceeded the size cap of {cap} elements")]
    GroupTooLarge { cap: usize },

    #[error("configuration check failed: {0}")]
    Construction(String),

    #[error("projection is undefined at {0}: the object meets the center")]
    Indeterminate(String),

    #[error("no non-degenerate specialization found after {attempts} attempts")]
    Degenerate { attempts: usize },

    #[error("identity check failed: {0}")]
    Identity(String),

    #[error("{path}:{line}:{column}: {reason}")]
    PointFile { path: String, line: usize, column: usize, reason: String },

    #[error("{0}")]
    Io(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
