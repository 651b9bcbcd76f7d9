use thiserror::Error;

/// Failures of a command, each mapped to a process exit code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(foldbound::Error),

    #[error("{0}")]
    Derive(foldbound::Error),

    #[error("{0}")]
    Cap(foldbound::Error),

    #[error("invalid boundary rule: {0}")]
    Tau(String),

    #[error("line {line}: {message}")]
    Catalog { line: usize, message: String },

    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Parse(_)
            | CliError::Tau(_)
            | CliError::Catalog { .. }
            | CliError::Io { .. } => 2,
            CliError::Derive(_) => 3,
            CliError::Cap(_) => 4,
        }
    }
}

impl From<foldbound::Error> for CliError {
    fn from(e: foldbound::Error) -> CliError {
        match e {
            foldbound::Error::CapExceeded { .. } => CliError::Cap(e),
            foldbound::Error::InvalidFoldingCurve { .. } => CliError::Derive(e),
            _ => CliError::Parse(e),
        }
    }
}
