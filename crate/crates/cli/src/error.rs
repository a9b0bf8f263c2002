use gea_core::GeaError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// Bad flags, configuration or instance input.
    #[error("{0}")]
    Usage(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Internal(_) => 2,
        }
    }
}

impl From<GeaError> for CliError {
    fn from(e: GeaError) -> Self {
        match e {
            GeaError::InvalidConfig(_)
            | GeaError::InvalidInstance(_)
            | GeaError::InstanceTooLarge(_)
            | GeaError::Parse { .. }
            | GeaError::Io(_) => CliError::Usage(e.to_string()),
            other => CliError::Internal(other.to_string()),
        }
    }
}
