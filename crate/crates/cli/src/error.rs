use thiserror::Error;

/// Failure of a command, carrying its exit status.
#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] hyperzeta::Error),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    /// 2 for malformed input, 3 when the requested precision cannot be met.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(hyperzeta::Error::PrecisionUnreachable(_))
            | CliError::Core(hyperzeta::Error::InvalidContext(_)) => 3,
            _ => 2,
        }
    }
}
