use std::path::PathBuf;

/// Everything that can stop a command before it produces a verdict.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("cannot access {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: malformed JSON at line {line}, column {column}: {message}")]
    Json {
        path: PathBuf,
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{path}: field `{field}`: {reason}")]
    Schema {
        path: PathBuf,
        field: String,
        reason: String,
    },
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Library(#[from] skewbrace::Error),
}

impl CliError {
    /// `3` for an exceeded size bound, `2` for everything else.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Library(skewbrace::Error::BoundExceeded { .. }) => 3,
            _ => 2,
        }
    }

    pub(crate) fn schema(path: &std::path::Path, field: impl Into<String>, reason: impl Into<String>) -> Self {
        CliError::Schema {
            path: path.to_path_buf(),
            field: field.into(),
            reason: reason.into(),
        }
    }
}
