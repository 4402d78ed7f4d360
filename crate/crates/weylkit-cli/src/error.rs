//! Error type shared by every subcommand, carrying the process exit code.

use thiserror::Error;

/// A failed invocation, sorted by how the process should exit.
#[derive(Debug, Error)]
pub enum CliError {
    /// The invocation itself is malformed: bad flags, an expression that
    /// does not parse, or arguments outside a family's domain. Exit 1.
    #[error("{0}")]
    Usage(String),
    /// The request is well formed but the computation was refused, e.g. a
    /// bound on the exponential oracles would be exceeded or the expression
    /// does not fit the requested model. Exit 2.
    #[error("{0}")]
    Refused(String),
    /// Two oracles produced different coefficients. The message is the
    /// report of the first difference, already formatted for stdout. Exit 3.
    #[error("{0}")]
    Disagreement(String),
}

impl CliError {
    /// The process exit code this error maps to.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Refused(_) => 2,
            CliError::Disagreement(_) => 3,
        }
    }
}

/// A syntax error in an operator expression, anchored to the byte where
/// scanning or parsing stopped.
#[derive(Debug, Error, PartialEq, Eq)]
#[error("syntax error at byte {offset}: {message}")]
pub struct ParseError {
    /// 0-based byte offset into the input text.
    pub offset: usize,
    /// What the parser expected or could not accept.
    pub message: String,
}

impl From<ParseError> for CliError {
    fn from(error: ParseError) -> Self {
        CliError::Usage(error.to_string())
    }
}
