use std::path::Path;

use serde::Serialize;

use crate::config::{ExperimentConfig, Sigma2Conversion};
use crate::output::sha256_hex;
use crate::CliError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OutputDigest {
    pub file: String,
    pub sha256: String,
    pub rows: usize,
}

/// Record of one run, written as `manifest.json` next to the outputs.
#[derive(Debug, Clone, Serialize)]
pub struct RunManifest {
    pub tool: &'static str,
    pub version: &'static str,
    pub kind: String,
    pub config_hash: String,
    pub config: ExperimentConfig,
    pub threads: usize,
    pub started_at: String,
    pub finished_at: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sigma2_conversion: Option<Sigma2Conversion>,
    pub outputs: Vec<OutputDigest>,
    pub notes: Vec<String>,
}

impl RunManifest {
    pub fn config_hash(config: &ExperimentConfig) -> String {
        sha256_hex(config.canonical_json().as_bytes())
    }

    pub fn write(&self, dir: &Path) -> Result<(), CliError> {
        let text = serde_json::to_string_pretty(self).map_err(|e| CliError::Other(e.into()))?;
        std::fs::write(dir.join("manifest.json"), text).map_err(|e| CliError::Other(e.into()))
    }
}

pub fn now_rfc3339() -> String {
    chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Millis, true)
}
