use std::path::PathBuf;

/// Failures of a CLI run, each mapped to a process exit code.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] fistab_core::Error),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("malformed input: {0}")]
    Format(String),
    #[error("{0}")]
    Limit(String),
}

pub type CliResult<T> = Result<T, CliError>;

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_CONSISTENCY: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(e) if e.is_consistency_failure() => EXIT_CONSISTENCY,
            _ => EXIT_DOMAIN,
        }
    }

    pub(crate) fn format(msg: impl Into<String>) -> Self {
        CliError::Format(msg.into())
    }
}
