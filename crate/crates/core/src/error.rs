use alloc::string::String;
use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    InvalidParameter(String),
    /// A multiplication table failed validation at the given triple.
    InvalidGroup {
        reason: &'static str,
        triple: (usize, usize, usize),
    },
    UnsupportedSpec(String),
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    /// `required` is `None` when the enumeration size overflows `u64`.
    BudgetExceeded {
        required: Option<u64>,
        budget: u64,
    },
    NoEmbedding(String),
    Unsupported(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }

    pub(crate) fn syntax_at(text: &str, offset: usize, message: impl Into<String>) -> Self {
        let (line, column) = line_col(text, offset);
        Error::Syntax {
            line,
            column,
            message: message.into(),
        }
    }
}

/// 1-based line and column (in characters) of a byte offset.
pub(crate) fn line_col(text: &str, offset: usize) -> (usize, usize) {
    let offset = offset.min(text.len());
    let before = &text[..offset];
    let line = before.matches('\n').count() + 1;
    let line_start = before.rfind('\n').map_or(0, |i| i + 1);
    let column = before[line_start..].chars().count() + 1;
    (line, column)
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidParameter(msg) => write!(f, "invalid parameter: {msg}"),
            Error::InvalidGroup { reason, triple } => write!(
                f,
                "invalid group: {reason} at ({}, {}, {})",
                triple.0, triple.1, triple.2
            ),
            Error::UnsupportedSpec(msg) => write!(f, "unsupported spec: {msg}"),
            Error::Syntax {
                line,
                column,
                message,
            } => write!(f, "syntax error at {line}:{column}: {message}"),
            Error::BudgetExceeded {
                required: Some(n),
                budget,
            } => write!(f, "budget exceeded: {n} steps required, budget is {budget}"),
            Error::BudgetExceeded {
                required: None,
                budget,
            } => write!(
                f,
                "budget exceeded: required steps overflow u64, budget is {budget}"
            ),
            Error::NoEmbedding(msg) => write!(f, "no embedding: {msg}"),
            Error::Unsupported(msg) => write!(f, "unsupported: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
