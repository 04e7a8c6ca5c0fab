//! JSON experiment configuration.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use iterbound::channel::{eb_n0_to_sigma2, ChannelModel};
use iterbound::graph::{DegreeDistribution, EnsembleSpec};
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ExperimentKind {
    Bounds,
    Simulate,
    De,
    Recursion,
    Tail,
    Oracle,
    Figure5,
    Figure6,
}

impl ExperimentKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            Self::Bounds => "bounds",
            Self::Simulate => "simulate",
            Self::De => "de",
            Self::Recursion => "recursion",
            Self::Tail => "tail",
            Self::Oracle => "oracle",
            Self::Figure5 => "figure5",
            Self::Figure6 => "figure6",
        }
    }
}

/// Ensemble given from the node perspective (`var_dist`, `check_dist`) or
/// the edge perspective (`lambda`, `rho`).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EnsembleConfig {
    pub n_vars: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub var_dist: Option<BTreeMap<usize, f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub check_dist: Option<BTreeMap<usize, f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda: Option<BTreeMap<usize, f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rho: Option<BTreeMap<usize, f64>>,
}

impl EnsembleConfig {
    pub fn to_spec(&self) -> Result<EnsembleSpec, CliError> {
        let field = |name: &str, e: iterbound::Error| CliError::Config(format!("ensemble.{name}: {e}"));
        let (l, r) = match (&self.var_dist, &self.check_dist, &self.lambda, &self.rho) {
            (Some(l), Some(r), None, None) => (
                DegreeDistribution::node(l.clone()).map_err(|e| field("var_dist", e))?,
                DegreeDistribution::node(r.clone()).map_err(|e| field("check_dist", e))?,
            ),
            (None, None, Some(l), Some(r)) => (
                DegreeDistribution::edge(l.clone()).map_err(|e| field("lambda", e))?,
                DegreeDistribution::edge(r.clone()).map_err(|e| field("rho", e))?,
            ),
            _ => {
                return Err(CliError::Config("ensemble: give either var_dist and check_dist, or lambda and rho".into()))
            }
        };
        EnsembleSpec::new(self.n_vars, l, r).map_err(|e| CliError::Config(format!("ensemble: {e}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum ChannelConfig {
    Bec {
        epsilon: f64,
    },
    Bsc {
        q: f64,
    },
    /// Exactly one of `sigma2` and `eb_n0_db`; the latter is converted with
    /// the ensemble's design rate.
    Biawgn {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        sigma2: Option<f64>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        eb_n0_db: Option<f64>,
    },
}

/// How `sigma2` was obtained, echoed into the manifest.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Sigma2Conversion {
    pub eb_n0_db: f64,
    pub rate: f64,
    pub sigma2: f64,
}

impl ChannelConfig {
    pub fn resolve(&self, rate: Option<f64>) -> Result<(ChannelModel<f64>, Option<Sigma2Conversion>), CliError> {
        let bad = |e: iterbound::Error| CliError::Config(format!("channel: {e}"));
        Ok(match *self {
            Self::Bec { epsilon } => (ChannelModel::bec(epsilon).map_err(bad)?, None),
            Self::Bsc { q } => (ChannelModel::bsc(q).map_err(bad)?, None),
            Self::Biawgn { sigma2: Some(s), eb_n0_db: None } => (ChannelModel::biawgn(s).map_err(bad)?, None),
            Self::Biawgn { sigma2: None, eb_n0_db: Some(db) } => {
                let rate = rate.ok_or_else(|| {
                    CliError::Config("channel.eb_n0_db: needs an ensemble to supply the design rate".into())
                })?;
                let sigma2 = eb_n0_to_sigma2(db, rate).map_err(bad)?;
                (ChannelModel::biawgn(sigma2).map_err(bad)?, Some(Sigma2Conversion { eb_n0_db: db, rate, sigma2 }))
            }
            Self::Biawgn { .. } => {
                return Err(CliError::Config("channel: biawgn needs exactly one of sigma2 and eb_n0_db".into()))
            }
        })
    }
}

/// Inclusive iteration range.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IterationRange {
    pub from: usize,
    pub to: usize,
}

impl IterationRange {
    pub fn values(&self) -> std::ops::RangeInclusive<usize> {
        self.from..=self.to
    }
}

/// Code used for BER simulation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum CodeSource {
    /// PEG code with the ensemble's variable degree sequence.
    #[default]
    Peg,
    /// Fresh configuration-model graphs.
    Ensemble,
    /// The matrix in `alist`.
    Alist,
}

/// BER curve the upper-bound form is fitted to.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FitSource {
    #[default]
    Sim,
    De,
}

/// Upper-bound form parameter: fixed `a0`, or fitted at `fit_anchor`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct UpperConfig {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a0: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fit_anchor: Option<usize>,
    #[serde(default)]
    pub fit_source: FitSource,
}

fn default_theta1() -> f64 {
    iterbound::regular::DEFAULT_THETA1
}

fn default_one() -> usize {
    1
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub kind: ExperimentKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ensemble: Option<EnsembleConfig>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alist: Option<PathBuf>,
    #[serde(default)]
    pub code: CodeSource,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub channel: Option<ChannelConfig>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub iterations: Option<IterationRange>,
    /// Frames for BER simulation, samples for the oracle.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trials: Option<usize>,
    #[serde(default = "default_one")]
    pub trials_per_graph: usize,
    #[serde(default = "default_theta1")]
    pub theta1: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub upper: Option<UpperConfig>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d_max: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub instances: Option<usize>,
    #[serde(default = "default_one")]
    pub roots_per_instance: usize,
    pub seed: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub out_dir: Option<PathBuf>,
}

impl ExperimentConfig {
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        let de = &mut serde_json::Deserializer::from_str(text);
        serde_path_to_error::deserialize(de).map_err(|e| {
            let path = e.path().to_string();
            CliError::Config(format!("{path}: {}", e.into_inner()))
        })
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Config(format!("cannot read config {}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    /// Canonical JSON used for hashing and echoed into the output directory.
    pub fn canonical_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("config serializes")
    }

    pub fn spec(&self) -> Result<EnsembleSpec, CliError> {
        self.ensemble
            .as_ref()
            .ok_or_else(|| CliError::Config("ensemble: required for this experiment".into()))?
            .to_spec()
    }

    pub fn iterations(&self) -> Result<IterationRange, CliError> {
        let r = self.iterations.ok_or_else(|| CliError::Config("iterations: required for this experiment".into()))?;
        if r.from > r.to {
            return Err(CliError::Config(format!("iterations: empty range {}..={}", r.from, r.to)));
        }
        Ok(r)
    }

    pub fn require<T: Copy>(&self, value: Option<T>, name: &str) -> Result<T, CliError> {
        value.ok_or_else(|| CliError::Config(format!("{name}: required for {} experiments", self.kind.as_str())))
    }
}
