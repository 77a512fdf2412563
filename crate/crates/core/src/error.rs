use thiserror::Error;

use crate::singularity::AdeType;
use crate::Rational;

/// Errors raised by the analyzer.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("divisor classes live on different surfaces ({left} vs {right})")]
    SurfaceMismatch { left: String, right: String },

    #[error("usage error: {0}")]
    Usage(String),

    #[error("isotropy order for {0} is not tabulated")]
    UnsupportedAde(AdeType),

    #[error("{ade} with multiplicities {mults:?} is not klt (bracket = {bracket})")]
    NonKlt { ade: AdeType, mults: Vec<u32>, bracket: Rational },

    #[error("singular point `{point}`: {source}")]
    AtPoint {
        point: String,
        #[source]
        source: Box<Error>,
    },

    #[error("analysis refused: {0}")]
    Refused(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },

    #[error("internal invariant breach: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn usage(msg: impl Into<String>) -> Self {
        Error::Usage(msg.into())
    }

    /// Process exit code associated with this error class.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. } => 2,
            Error::Internal(_) => 3,
            Error::AtPoint { source, .. } => source.exit_code(),
            _ => 1,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
