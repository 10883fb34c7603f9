use std::path::PathBuf;

use lqt_core::verify::VerifyError;

/// Errors that map to exit code 2: the request itself is unusable.
#[derive(Debug, thiserror::Error)]
pub enum InputError {
    #[error("cannot read {path}: {source}")]
    Read { path: PathBuf, source: std::io::Error },
    #[error("cannot write {path}: {source}")]
    Write { path: PathBuf, source: std::io::Error },
    #[error("{path}:{line}:{column}: {message}")]
    Json { path: PathBuf, line: usize, column: usize, message: String },
    #[error("{path}: {message}")]
    Invalid { path: PathBuf, message: String },
    #[error("requested basis has {size} elements ({what}), above --max-basis {limit}")]
    Oversize { what: String, size: u128, limit: u128 },
    #[error(transparent)]
    Verify(#[from] VerifyError),
    #[error("{0}")]
    Other(String),
}

impl InputError {
    pub fn json(path: &std::path::Path, e: serde_json::Error) -> Self {
        let (line, column) = (e.line(), e.column());
        let full = e.to_string();
        let message = full.strip_suffix(&format!(" at line {line} column {column}")).unwrap_or(&full).to_string();
        InputError::Json { path: path.to_path_buf(), line, column, message }
    }
}
