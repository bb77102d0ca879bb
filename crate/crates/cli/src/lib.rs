//! Command-line surface for `rado-core`: JSON formats, the `rado` command
//! set and seeded cross-validation suites.

pub mod app;
pub mod crossval;
pub mod formats;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] rado_core::Error),
    /// Two independent procedures returned different answers.
    #[error("disagreement: {0}")]
    Disagreement(String),
}

impl CliError {
    /// 2 for bad input, 3 when a search limit was hit, 1 for disagreements.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(rado_core::Error::Indeterminate { .. }) => 3,
            CliError::Usage(_) | CliError::Core(_) => 2,
            CliError::Disagreement(_) => 1,
        }
    }
}
