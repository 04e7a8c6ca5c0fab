use serde::Serialize;

use iterbound::recursion::l1_threshold;
use iterbound::regular::saturation_window;

use crate::config::{CodeSource, ExperimentConfig, ExperimentKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Level {
    Info,
    Warning,
    Error,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Finding {
    pub level: Level,
    pub message: String,
}

impl std::fmt::Display for Finding {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let tag = match self.level {
            Level::Info => "info",
            Level::Warning => "warning",
            Level::Error => "error",
        };
        write!(f, "{tag}: {}", self.message)
    }
}

/// Checks a config without running it. Errors would make the run fail;
/// warnings and notes flag results that fall outside a bound's window.
pub fn validate(config: &ExperimentConfig) -> Vec<Finding> {
    let mut out = Vec::new();
    let mut push = |level, message: String| out.push(Finding { level, message });
    let needs_iterations = !matches!(config.kind, ExperimentKind::Tail | ExperimentKind::Figure6);
    if needs_iterations {
        match config.iterations {
            None => push(Level::Error, "iterations: required for this experiment".into()),
            Some(r) if r.from > r.to => push(Level::Error, format!("iterations: empty range {}..={}", r.from, r.to)),
            Some(_) => {}
        }
    }
    if !(config.theta1 > 0.0 && config.theta1 < 1.0) {
        push(Level::Error, format!("theta1: {} must lie in (0, 1)", config.theta1));
    }
    let uses_alist =
        matches!(config.kind, ExperimentKind::Simulate | ExperimentKind::Figure5) && config.code == CodeSource::Alist;
    if uses_alist {
        match &config.alist {
            None => push(Level::Error, "alist: required when code = alist".into()),
            Some(p) if !p.is_file() => push(Level::Error, format!("alist: file {} not found", p.display())),
            Some(_) => {}
        }
    }
    let spec = match &config.ensemble {
        Some(e) => match e.to_spec() {
            Ok(s) => Some(s),
            Err(err) => {
                push(Level::Error, err.to_string());
                None
            }
        },
        None if uses_alist && config.kind == ExperimentKind::Simulate => None,
        None => {
            push(Level::Error, "ensemble: required for this experiment".into());
            None
        }
    };
    if let Some(ch) = &config.channel {
        let rate = spec.as_ref().and_then(|s| s.design_rate().ok());
        if let Err(e) = ch.resolve(rate) {
            push(Level::Error, e.to_string());
        }
    }
    if let Some(spec) = &spec {
        let (j_max, _) = (spec.var_dist().max_degree(), spec.check_dist().max_degree());
        if spec.var_dist().min_degree() < 3 {
            push(
                Level::Warning,
                format!(
                    "variable degrees below 3 (min {}): the closed-form regular bound does not apply; \
                     the distance-recursion bound is used",
                    spec.var_dist().min_degree()
                ),
            );
        }
        if let (Some(r), true) = (config.iterations, needs_iterations) {
            if let Some((j, k)) = spec.regular_degrees().filter(|&(j, _)| j >= 3) {
                let window = saturation_window::<f64>(j, k, spec.n_vars());
                if r.to as f64 > window {
                    push(
                        Level::Info,
                        format!("l = {} exceeds the saturation window {window:.4}; the bound degrades to w = N", r.to),
                    );
                }
            } else if j_max >= 2 {
                if let Ok(l1) = l1_threshold(spec.var_dist(), spec.check_dist(), spec.n_vars(), config.theta1) {
                    if r.to as f64 > l1 {
                        push(
                            Level::Info,
                            format!("l = {} exceeds l1 = {l1:.4}; the recursion uses its general form", r.to),
                        );
                    }
                }
            }
        }
    }
    out
}
