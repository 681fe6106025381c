use thiserror::Error;

use crate::dsl::ParseError;

/// Process exit statuses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exit {
    Success = 0,
    Usage = 1,
    Mismatch = 2,
    CapExceeded = 3,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] exunit_core::Error),
}

impl CliError {
    pub fn exit(&self) -> Exit {
        match self {
            CliError::Core(exunit_core::Error::CapExceeded { .. }) => Exit::CapExceeded,
            _ => Exit::Usage,
        }
    }
}
