//! Distance recursion for irregular ensembles: expected number of distinct
//! variables within distance `2l`, the shortest-path tail distribution and
//! the bounds built on them.

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::channel::ChannelModel;
use crate::error::{Error, Result};
use crate::graph::degree::DegreeDistribution;
use crate::graph::{sample_graph, EnsembleSpec};
use crate::regular::{closed_form_lower, BoundPoint, Regime, RegularParams};
use crate::rng::{derive_seed, derived_rng, stream};
use crate::scalar::Real;

/// `theta1 * log_{(Jmax-1)^5 (Kmax-1)^3} N^2` from the largest support degrees.
pub fn l1_threshold<F: Real>(
    var_dist: &DegreeDistribution,
    check_dist: &DegreeDistribution,
    n: usize,
    theta1: F,
) -> Result<F> {
    let (jmax, kmax) = (var_dist.max_degree(), check_dist.max_degree());
    let base = 5.0 * (jmax as f64 - 1.0).ln() + 3.0 * (kmax as f64 - 1.0).ln();
    if !(base > 0.0 && base.is_finite()) {
        return Err(Error::Domain(format!(
            "degenerate supports: (Jmax-1)^5 (Kmax-1)^3 <= 1 for (Jmax, Kmax) = ({jmax}, {kmax})"
        )));
    }
    Ok(theta1 * F::lit(2.0 * (n as f64).ln() / base))
}

/// One step `t` of the recursion.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RecursionStep<F> {
    pub t: usize,
    /// `P~_{2t-2}`; absent for `t = 1`.
    pub p_tilde_even: Option<F>,
    /// `P~_{2t-1}`.
    pub p_tilde_odd: F,
    /// `P_{2t}`.
    pub p: F,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RecursionTrace<F> {
    pub n: usize,
    pub l: usize,
    pub l1: F,
    /// True when `l > l1` selected the general check-degree form.
    pub general: bool,
    pub steps: Vec<RecursionStep<F>>,
    pub w_ub: F,
}

fn edge_terms(dist: &DegreeDistribution) -> Vec<(i32, f64)> {
    dist.to_edge().iter().map(|(d, f)| (d as i32, f)).collect()
}

fn node_terms(dist: &DegreeDistribution) -> Vec<(i32, f64)> {
    dist.to_node().iter().map(|(d, f)| (d as i32, f)).collect()
}

fn edge_sum<F: Real>(terms: &[(i32, f64)], x: F) -> F {
    terms.iter().fold(F::zero(), |acc, &(d, f)| acc + F::lit(f) * x.powi(d - 1))
}

fn node_sum<F: Real>(terms: &[(i32, f64)], x: F) -> F {
    terms.iter().fold(F::zero(), |acc, &(d, f)| acc + F::lit(f) * x.powi(d))
}

fn clamp01<F: Real>(x: F) -> F {
    x.max(F::zero()).min(F::one())
}

/// The `P_{2t}` chain for `t = 1..=steps`, in either branch.
pub fn cavity_chain<F: Real>(
    var_dist: &DegreeDistribution,
    check_dist: &DegreeDistribution,
    n: usize,
    steps: usize,
    general: bool,
) -> Vec<RecursionStep<F>> {
    let lambda = edge_terms(var_dist);
    let node = node_terms(var_dist);
    let rho = edge_terms(check_dist);
    let miss = F::one() - F::one() / F::from_count(n);
    let mut out = Vec::with_capacity(steps);
    let mut odd = clamp01(if general { edge_sum(&rho, miss) } else { miss });
    for t in 1..=steps {
        let mut even = None;
        if t >= 2 {
            let e = clamp01(edge_sum(&lambda, odd));
            even = Some(e);
            odd = clamp01(if general { edge_sum(&rho, e) } else { e });
        }
        let p = clamp01(node_sum(&node, odd));
        out.push(RecursionStep { t, p_tilde_even: even, p_tilde_odd: odd, p });
    }
    out
}

/// Runs the recursion for `l` iterations; the branch is chosen once from `l` versus `l1`.
pub fn recursion_run<F: Real>(
    var_dist: &DegreeDistribution,
    check_dist: &DegreeDistribution,
    n: usize,
    l: usize,
    theta1: F,
) -> Result<RecursionTrace<F>> {
    if l == 0 {
        return Err(Error::InvalidInput("the recursion needs l >= 1".into()));
    }
    if n < 2 {
        return Err(Error::InvalidInput(format!("N = {n} must be at least 2")));
    }
    let l1 = l1_threshold(var_dist, check_dist, n, theta1)?;
    let general = F::from_count(l) > l1;
    let steps = cavity_chain::<F>(var_dist, check_dist, n, l, general);
    let log_prod = steps.iter().fold(F::zero(), |acc, s| acc + s.p.ln());
    let w_ub = (-F::from_count(n) * log_prod.exp_m1()).max(F::zero()).min(F::from_count(n));
    Ok(RecursionTrace { n, l, l1, general, steps, w_ub })
}

/// `P(dist(v_i, v_j) > d')` for `d' = 0..=d_max`, with and without the
/// chance that `v_j` is the root itself.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TailDistribution<F> {
    pub n: usize,
    /// Over `v_j != v_i`; equals 1 at `d' = 0`.
    pub excluding_root: Vec<F>,
    /// Over all `v_j`, root included; equals `1 - 1/N` at `d' = 0`.
    pub including_root: Vec<F>,
    /// Standard errors of `excluding_root` for Monte Carlo estimates.
    pub std_error: Option<Vec<F>>,
}

/// Tail distribution from the general (`l > l1`) recursion.
pub fn tail_distribution<F: Real>(
    var_dist: &DegreeDistribution,
    check_dist: &DegreeDistribution,
    n: usize,
    d_max: usize,
) -> Result<TailDistribution<F>> {
    if n < 2 {
        return Err(Error::InvalidInput(format!("N = {n} must be at least 2")));
    }
    let steps = cavity_chain::<F>(var_dist, check_dist, n, d_max / 2, true);
    let mut excluding_root = Vec::with_capacity(d_max + 1);
    let mut prod = F::one();
    for d in 0..=d_max {
        if d >= 2 && d % 2 == 0 {
            prod = prod * steps[d / 2 - 1].p;
        }
        excluding_root.push(prod);
    }
    let miss = F::one() - F::one() / F::from_count(n);
    let including_root = excluding_root.iter().map(|&x| x * miss).collect();
    Ok(TailDistribution { n, excluding_root, including_root, std_error: None })
}

/// Monte Carlo tail distribution: in each of `n_instances` sampled graphs,
/// `roots_per_instance` uniform roots are each compared against all other
/// variables by BFS. Standard errors treat roots as independent clusters.
pub fn empirical_tail<F: Real>(
    spec: &EnsembleSpec,
    d_max: usize,
    n_instances: usize,
    roots_per_instance: usize,
    seed: u64,
) -> Result<TailDistribution<F>> {
    if n_instances == 0 || roots_per_instance == 0 {
        return Err(Error::InvalidInput("need at least one instance and one root".into()));
    }
    let n = spec.n_vars();
    let width = d_max + 1;
    // Per instance: for each d', sum over roots of count(dist > d') and of its square.
    let per_instance: Vec<(Vec<u64>, Vec<u128>)> = (0..n_instances)
        .into_par_iter()
        .map(|i| {
            let g = sample_graph(spec, derive_seed(seed, stream::GRAPH, i as u64))?;
            let mut rng = derived_rng(seed, stream::PAIRS, i as u64);
            let mut sum = vec![0u64; width];
            let mut sum_sq = vec![0u128; width];
            let mut hist = vec![0u64; width];
            for _ in 0..roots_per_instance {
                let root = rng.random_range(0..n);
                let dist = g.distances_from_var(root, Some(d_max as u32));
                hist.fill(0);
                for v in (0..n).filter(|&v| v != root) {
                    if let Some(d) = dist.to_var(v) {
                        hist[d as usize] += 1;
                    }
                }
                let mut reached = 0u64;
                for d in 0..width {
                    reached += hist[d];
                    let beyond = (n as u64 - 1) - reached;
                    sum[d] += beyond;
                    sum_sq[d] += u128::from(beyond) * u128::from(beyond);
                }
            }
            Ok((sum, sum_sq))
        })
        .collect::<Result<_>>()?;
    let mut sum = vec![0u64; width];
    let mut sum_sq = vec![0u128; width];
    for (s, s2) in per_instance {
        for d in 0..width {
            sum[d] += s[d];
            sum_sq[d] += s2[d];
        }
    }
    let roots = (n_instances * roots_per_instance) as f64;
    let others = (n - 1) as f64;
    let mut excluding_root = Vec::with_capacity(width);
    let mut std_error = Vec::with_capacity(width);
    for d in 0..width {
        let (s, s2) = (sum[d] as f64, sum_sq[d] as f64);
        excluding_root.push(F::lit(s / (roots * others)));
        let se = if roots > 1.0 {
            let var = ((s2 - s * s / roots) / (roots - 1.0)).max(0.0) / (others * others);
            (var / roots).sqrt()
        } else {
            f64::NAN
        };
        std_error.push(F::lit(se));
    }
    let scale = F::lit(others / n as f64);
    let including_root = excluding_root.iter().map(|&x| x * scale).collect();
    Ok(TailDistribution { n, excluding_root, including_root, std_error: Some(std_error) })
}

/// BER lower bound from the recursion weight.
pub fn irregular_lower_bound<F: Real>(
    ch: &ChannelModel<F>,
    var_dist: &DegreeDistribution,
    check_dist: &DegreeDistribution,
    n: usize,
    l: usize,
    theta1: F,
) -> Result<BoundPoint<F>> {
    let trace = recursion_run(var_dist, check_dist, n, l, theta1)?;
    let regime = if trace.general { Regime::RecursionGeneral } else { Regime::RecursionTight };
    BoundPoint::from_weight(ch, l, trace.w_ub, regime)
}

/// The closed-form bound of the regular ensemble with the largest support
/// degrees `(Jmax, Kmax)`.
pub fn maxdeg_relaxation<F: Real>(
    ch: &ChannelModel<F>,
    var_dist: &DegreeDistribution,
    check_dist: &DegreeDistribution,
    n: usize,
    l: usize,
    theta1: F,
) -> Result<BoundPoint<F>> {
    let (jmax, kmax) = (var_dist.max_degree(), check_dist.max_degree());
    if jmax < 3 {
        return Err(Error::NotApplicable(format!("Jmax = {jmax}; the regular closed form needs J >= 3")));
    }
    let params = RegularParams { j: jmax, k: kmax, n, l, theta1 };
    if !(theta1 > F::zero() && theta1 < F::one()) {
        return Err(Error::InvalidInput(format!("theta1 = {theta1} must lie in (0, 1)")));
    }
    closed_form_lower(ch, &params)
}
