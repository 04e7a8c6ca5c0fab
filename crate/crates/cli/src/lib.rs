//! Experiment runner: reads a JSON config, runs one experiment and writes
//! CSV tables plus a JSON manifest.

pub mod config;
pub mod experiments;
pub mod manifest;
pub mod output;
pub mod validate;

pub use config::ExperimentConfig;
pub use experiments::{compute, run, Computed};
pub use manifest::RunManifest;
pub use validate::{validate, Finding, Level};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("config error: {0}")]
    Config(String),

    #[error("capacity error: {0}")]
    Capacity(String),

    #[error(transparent)]
    Other(#[from] anyhow::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Config(_) => 2,
            Self::Capacity(_) => 3,
            Self::Other(_) => 1,
        }
    }
}

impl From<iterbound::Error> for CliError {
    fn from(e: iterbound::Error) -> Self {
        use iterbound::Error as E;
        match e {
            E::Capacity { .. } => Self::Capacity(e.to_string()),
            E::InvalidInput(_) | E::InvalidSpec(_) | E::NotApplicable(_) | E::Parse { .. } => {
                Self::Config(e.to_string())
            }
            other => Self::Other(other.into()),
        }
    }
}
