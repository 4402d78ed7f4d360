//! Command-line front end for the raise/lower operator toolkit.
//!
//! The binary parses operator expressions such as `"X^2*D"` or `"(X+D)^2"`,
//! normally orders them exactly — optionally under a deformed commutation
//! rule — expands named generating functions and continued fractions, prints
//! values from classical number families, and recomputes coefficient tables
//! by several independent routes to cross-check them.
//!
//! Exit codes: `0` success (including agreement of all requested routes),
//! `1` usage errors, `2` refusals when a computation would exceed its
//! configured bounds, `3` when two routes disagree.  Results are written to
//! standard output; diagnostics to standard error.

pub mod ast;
pub mod commands;
pub mod error;
pub mod eval;
pub mod oracle;
pub mod parse;
pub mod render;

pub use ast::Expression;
pub use commands::{run, Cli, Command, Format};
pub use error::{CliError, ParseError};
pub use eval::{build_operator, Deformation};
pub use oracle::{first_disagreement, run_oracle, OracleKind, OracleReport};
pub use parse::parse_expression;
