//! Command-line front end: reads algebra documents, runs the library
//! operations and writes human-readable or JSON reports.

// `!(x < t)` comparisons are deliberate: they reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod args;
pub mod commands;
pub mod document;
pub mod error;
pub mod report;

pub use args::Cli;
pub use commands::execute;
pub use document::{AlgebraDocument, SCHEMA_VERSION};
pub use error::{CliError, ErrorReport, EXIT_DOMAIN, EXIT_INPUT, EXIT_OK};
