use std::path::PathBuf;

use thiserror::Error;

/// Failures of the harness, split by the exit code they map to.
#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("config: {0}")]
    Config(String),
    #[error("cannot read {path}: {source}")]
    Read { path: PathBuf, source: std::io::Error },
    #[error("cannot write {path}: {source}")]
    Write { path: PathBuf, source: std::io::Error },
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("computation failed: {0}")]
    Core(#[from] polyalg_core::Error),
    #[error("generator gave up after {attempts} attempts: {what}")]
    Exhausted { what: String, attempts: usize },
}

impl HarnessError {
    /// `2` for anything wrong with the input, `3` for internal failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            HarnessError::Config(_) | HarnessError::Read { .. } | HarnessError::Json(_) => 2,
            _ => 3,
        }
    }
}

pub type Result<T> = std::result::Result<T, HarnessError>;
