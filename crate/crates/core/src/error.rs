use thiserror::Error;

use crate::report::ValidationReport;

pub type Result<T, E = OmError> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum OmError {
    #[error("usage error: {0}")]
    Usage(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("realization error: {0}")]
    Realization(String),

    #[error("deletion error: {remaining} element(s) would remain but rank is {rank}")]
    Deletion { remaining: usize, rank: usize },

    #[error("no deletable element: ground set size equals the rank")]
    NoDeletableElement,

    #[error("contraction error: {0}")]
    Contraction(String),

    #[error("size guard: {0} (set OM_SIZE_OVERRIDE=1 to lift)")]
    SizeGuard(String),

    #[error("validation failed:\n{0}")]
    Invalid(ValidationReport),

    #[error("construction failed: {0}")]
    Construction(String),

    #[error("internal invariant failure: {0}")]
    Internal(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl OmError {
    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        OmError::Parse {
            line,
            column,
            message: message.into(),
        }
    }

    /// Process exit status for this error: 1 for domain errors, 2 for usage,
    /// parse and I/O failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            OmError::Usage(_) | OmError::Parse { .. } | OmError::SizeGuard(_) | OmError::Io(_) => 2,
            _ => 1,
        }
    }
}
