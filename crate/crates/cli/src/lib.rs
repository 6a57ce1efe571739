//! Batch front end for the `homore` library: expression parsing, definition
//! files and one verb per computation.

pub mod commands;
pub mod domain;
pub mod expr;

pub use commands::{run, Cli, CliError};
pub use expr::{parse_expression, Domain, ExprError, Parsed};
