use serde::Serialize;
use thiserror::Error;

use crate::document::SCHEMA_VERSION;

/// Exit code for a completed command.
pub const EXIT_OK: i32 = 0;
/// Exit code when the input is well formed but fails a mathematical check.
pub const EXIT_DOMAIN: i32 = 1;
/// Exit code for unreadable files, malformed documents and bad arguments.
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("input error: {0}")]
    Input(String),

    #[error("{0}")]
    Domain(#[from] omega_lie::Error),

    #[error("output error: {0}")]
    Output(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Domain(_) => EXIT_DOMAIN,
            CliError::Input(_) | CliError::Output(_) => EXIT_INPUT,
        }
    }

    /// Stable name for machine-readable output.
    pub fn name(&self) -> &'static str {
        match self {
            CliError::Input(_) => "InputError",
            CliError::Domain(e) => e.name(),
            CliError::Output(_) => "OutputError",
        }
    }

    pub fn report(&self) -> ErrorReport {
        ErrorReport {
            version: SCHEMA_VERSION,
            error: self.name().to_string(),
            message: self.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ErrorReport {
    pub version: u32,
    pub error: String,
    pub message: String,
}
