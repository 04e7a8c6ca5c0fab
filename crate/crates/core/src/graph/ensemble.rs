use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::degree::{deserialize_node, DegreeDistribution, Perspective};
use crate::error::{Error, Result};

/// The ensemble `LDPC(N, L, R)`: block length plus node-perspective degree
/// distributions for variable and check nodes.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawEnsembleSpec", into = "RawEnsembleSpec")]
pub struct EnsembleSpec {
    n_vars: usize,
    var_dist: DegreeDistribution,
    check_dist: DegreeDistribution,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawEnsembleSpec {
    n_vars: usize,
    #[serde(deserialize_with = "deserialize_node")]
    var_dist: DegreeDistribution,
    #[serde(deserialize_with = "deserialize_node")]
    check_dist: DegreeDistribution,
}

impl TryFrom<RawEnsembleSpec> for EnsembleSpec {
    type Error = Error;
    fn try_from(raw: RawEnsembleSpec) -> Result<Self> {
        EnsembleSpec::new(raw.n_vars, raw.var_dist, raw.check_dist)
    }
}

impl From<EnsembleSpec> for RawEnsembleSpec {
    fn from(spec: EnsembleSpec) -> Self {
        RawEnsembleSpec { n_vars: spec.n_vars, var_dist: spec.var_dist, check_dist: spec.check_dist }
    }
}

/// Integer degree sequences realizing an ensemble at a finite block length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeSequences {
    pub var_degrees: Vec<usize>,
    pub check_degrees: Vec<usize>,
}

impl DegreeSequences {
    pub fn edge_count(&self) -> usize {
        self.var_degrees.iter().sum()
    }
}

impl EnsembleSpec {
    /// Validates and builds a spec. Either perspective is accepted for the
    /// distributions; they are stored in node perspective.
    pub fn new(n_vars: usize, var_dist: DegreeDistribution, check_dist: DegreeDistribution) -> Result<Self> {
        if n_vars < 2 {
            return Err(Error::InvalidSpec(format!("n_vars = {n_vars}, need at least 2")));
        }
        if check_dist.min_degree() < 2 {
            return Err(Error::InvalidSpec("check nodes need degree at least 2".into()));
        }
        let spec = Self { n_vars, var_dist: var_dist.to_node(), check_dist: check_dist.to_node() };
        spec.degree_sequences()?;
        Ok(spec)
    }

    /// `LDPC(N, x^J, x^K)`.
    pub fn regular(n_vars: usize, var_degree: usize, check_degree: usize) -> Result<Self> {
        Self::new(
            n_vars,
            DegreeDistribution::regular(Perspective::Node, var_degree)?,
            DegreeDistribution::regular(Perspective::Node, check_degree)?,
        )
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn var_dist(&self) -> &DegreeDistribution {
        &self.var_dist
    }

    pub fn check_dist(&self) -> &DegreeDistribution {
        &self.check_dist
    }

    /// `Some((J, K))` for a regular ensemble.
    pub fn regular_degrees(&self) -> Option<(usize, usize)> {
        Some((self.var_dist.single_degree()?, self.check_dist.single_degree()?))
    }

    /// Number of check nodes `M = round(N·L'(1)/R'(1))`.
    ///
    /// Accepted when the realized integer degree sequences balance sockets
    /// exactly (which always holds when the ratio is an integer to 1e-9).
    pub fn check_count(&self) -> Result<usize> {
        let exact = self.n_vars as f64 * self.var_dist.mean_node_degree() / self.check_dist.mean_node_degree();
        let m = exact.round();
        if m < 1.0 {
            return Err(Error::InvalidSpec(format!("implied check count {exact} rounds to zero")));
        }
        let m = m as usize;
        if m >= self.n_vars {
            return Err(Error::InvalidSpec(format!("design rate 1 - {m}/{} is not in (0, 1)", self.n_vars)));
        }
        Ok(m)
    }

    pub fn design_rate(&self) -> Result<f64> {
        Ok(1.0 - self.check_count()? as f64 / self.n_vars as f64)
    }

    /// Realizes integer degree sequences: `round(N·L_d)` variables and
    /// `round(M·R_d)` checks per degree, then repairs any socket imbalance by
    /// moving nodes between support degrees (largest-degree bucket first).
    pub fn degree_sequences(&self) -> Result<DegreeSequences> {
        let m = self.check_count()?;
        let mut var_counts = apportion(self.n_vars, &self.var_dist);
        let mut check_counts = apportion(m, &self.check_dist);
        let var_sockets = sockets(&var_counts) as i64;
        let check_sockets = sockets(&check_counts) as i64;
        repair_sockets(&mut var_counts, &mut check_counts, var_sockets - check_sockets).map_err(|imbalance| {
            Error::InvalidSpec(format!(
                "cannot balance sockets: {} variable sockets vs {} check sockets (residual {imbalance})",
                var_sockets, check_sockets
            ))
        })?;
        Ok(DegreeSequences { var_degrees: expand(&var_counts), check_degrees: expand(&check_counts) })
    }
}

fn apportion(total: usize, dist: &DegreeDistribution) -> BTreeMap<usize, usize> {
    let mut counts: BTreeMap<usize, usize> =
        dist.iter().map(|(d, f)| (d, (total as f64 * f).round() as usize)).collect();
    let mut diff = total as i64 - counts.values().sum::<usize>() as i64;
    // Put the rounding residue in the largest-degree bucket that can absorb it.
    for count in counts.values_mut().rev() {
        if diff == 0 {
            break;
        }
        let adjusted = (*count as i64 + diff).max(0);
        diff -= adjusted - *count as i64;
        *count = adjusted as usize;
    }
    counts
}

fn sockets(counts: &BTreeMap<usize, usize>) -> usize {
    counts.iter().map(|(d, c)| d * c).sum()
}

fn expand(counts: &BTreeMap<usize, usize>) -> Vec<usize> {
    counts.iter().flat_map(|(&d, &c)| std::iter::repeat_n(d, c)).collect()
}

/// Greedy repair of `imbalance = var_sockets - check_sockets`. Returns the
/// residual imbalance when no move reduces it.
fn repair_sockets(
    var_counts: &mut BTreeMap<usize, usize>,
    check_counts: &mut BTreeMap<usize, usize>,
    mut imbalance: i64,
) -> std::result::Result<(), i64> {
    while imbalance != 0 {
        // (new |imbalance|, side: 0 = checks, 1 = vars, -(max degree touched), from, to)
        let mut best: Option<(i64, u8, i64, usize, usize)> = None;
        for (side, counts) in [(0u8, &*check_counts), (1u8, &*var_counts)] {
            let degrees: Vec<usize> = counts.keys().copied().collect();
            for &from in &degrees {
                if counts[&from] == 0 {
                    continue;
                }
                for &to in &degrees {
                    if to == from {
                        continue;
                    }
                    let step = to as i64 - from as i64;
                    let next = if side == 0 { imbalance - step } else { imbalance + step };
                    if next.abs() >= imbalance.abs() {
                        continue;
                    }
                    let key = (next.abs(), side, -(from.max(to) as i64), from, to);
                    if best.is_none_or(|b| key < b) {
                        best = Some(key);
                    }
                }
            }
        }
        let Some((_, side, _, from, to)) = best else {
            return Err(imbalance);
        };
        let counts = if side == 0 { &mut *check_counts } else { &mut *var_counts };
        *counts.get_mut(&from).unwrap() -= 1;
        *counts.get_mut(&to).unwrap() += 1;
        let step = to as i64 - from as i64;
        imbalance = if side == 0 { imbalance - step } else { imbalance + step };
    }
    Ok(())
}
