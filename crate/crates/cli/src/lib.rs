//! Command implementations behind the `sandhi-forge` binary.
//!
//! Everything the binary does lives here so that integration tests can call
//! the same code paths directly; `main.rs` only parses arguments and maps
//! [`CliError`] values to process exit codes.

use thiserror::Error;

pub mod commands;
pub mod ingest;
pub mod pipeline;

pub use commands::{Command, EngineSpec};

/// A command failure, bucketed by exit code.
///
/// Exit codes: `0` success, `1` usage error (bad flags or flag values),
/// `2` data error (unreadable or malformed files, uncovered junctions,
/// models that contradict the rules), `3` internal invariant violation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Data(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl CliError {
    /// The process exit code this error maps to.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Data(_) => 2,
            CliError::Internal(_) => 3,
        }
    }
}
