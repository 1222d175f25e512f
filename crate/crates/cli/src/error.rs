use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] fulton_core::Error),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    /// 2 for bad input, 3 for everything that went wrong afterwards.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Core(
                fulton_core::Error::InvalidPartition(_)
                | fulton_core::Error::InvalidIndexSet(_)
                | fulton_core::Error::InvalidProblem(_)
                | fulton_core::Error::InvalidWeights(_),
            ) => 2,
            _ => 3,
        }
    }
}
