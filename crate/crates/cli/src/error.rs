use std::path::PathBuf;

use kaplansky_core::Error as CoreError;

pub const EXIT_NONE: i32 = 0;
pub const EXIT_PARSE: i32 = 1;
pub const EXIT_BUDGET: i32 = 2;
pub const EXIT_UNSUPPORTED: i32 = 3;
pub const EXIT_INTERNAL: i32 = 4;
pub const EXIT_WITNESS: i32 = 10;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error("{path}:{line}: {message}")]
    Source {
        path: PathBuf,
        line: usize,
        message: String,
    },
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{0}")]
    Usage(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(CoreError::BudgetExceeded { .. }) => EXIT_BUDGET,
            CliError::Core(CoreError::Unsupported(_) | CoreError::UnsupportedSpec(_)) => {
                EXIT_UNSUPPORTED
            }
            CliError::Internal(_) => EXIT_INTERNAL,
            _ => EXIT_PARSE,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self.exit_code() {
            EXIT_BUDGET => "budget-exceeded",
            EXIT_UNSUPPORTED => "unsupported",
            EXIT_INTERNAL => "internal",
            _ => "parse",
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
