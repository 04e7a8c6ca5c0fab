//! Monte Carlo BER estimation with the all-zero codeword.
//!
//! Each trial draws its channel noise from its own seed derived from
//! `(seed, trial)`, and each graph in ensemble mode from `(seed, block)`.
//! Trials are tallied as integer half-error counts, so the result does not
//! depend on how rayon schedules the work.

use rayon::prelude::*;

use crate::bp::{EdgeLayout, ZeroWordDecoder};
use crate::channel::ChannelModel;
use crate::error::{Error, Result};
use crate::graph::{sample_graph, EnsembleSpec, TannerGraph};
use crate::rng::{derive_seed, derived_rng, stream};
use crate::scalar::Real;

/// What to simulate: one fixed code, or the ensemble with a fresh graph
/// every `trials_per_graph` frames.
#[derive(Debug, Clone, Copy)]
pub enum BerTarget<'a> {
    Graph(&'a TannerGraph),
    Ensemble { spec: &'a EnsembleSpec, trials_per_graph: usize },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BerEstimate<F> {
    pub iterations: usize,
    pub ber: F,
    /// Standard error of the mean over frames; NaN for a single frame.
    pub std_error: F,
    pub trials: u64,
    pub bits: u64,
    pub half_errors: u64,
}

const FIXED_GRAPH_BLOCK: usize = 8;

#[derive(Debug, Clone)]
struct Tally {
    sum: Vec<u64>,
    sum_sq: Vec<u128>,
}

impl Tally {
    fn zero(len: usize) -> Self {
        Self { sum: vec![0; len], sum_sq: vec![0; len] }
    }

    fn merge(mut self, other: Self) -> Self {
        for (a, b) in self.sum.iter_mut().zip(other.sum) {
            *a += b;
        }
        for (a, b) in self.sum_sq.iter_mut().zip(other.sum_sq) {
            *a += b;
        }
        self
    }
}

fn run_block<F: Real>(
    g: &TannerGraph,
    layout: Option<&EdgeLayout>,
    ch: &ChannelModel<F>,
    max_iterations: usize,
    trials: std::ops::Range<usize>,
    seed: u64,
) -> Tally {
    let owned;
    let layout = match layout {
        Some(l) => l,
        None => {
            owned = EdgeLayout::new(g);
            &owned
        }
    };
    let mut decoder = ZeroWordDecoder::new(layout);
    let mut llr = vec![F::zero(); g.n_vars()];
    let mut errors = vec![0u64; max_iterations + 1];
    let mut tally = Tally::zero(max_iterations + 1);
    for trial in trials {
        let mut rng = derived_rng(seed, stream::CHANNEL, trial as u64);
        ch.transmit_zero_into(&mut llr, &mut rng);
        decoder.run(&llr, max_iterations, &mut errors);
        for (t, &e) in errors.iter().enumerate() {
            tally.sum[t] += e;
            tally.sum_sq[t] += u128::from(e) * u128::from(e);
        }
    }
    tally
}

/// BER after every iteration count `0..=max_iterations` from one set of
/// decoding runs.
pub fn estimate_ber_curve<F: Real>(
    target: BerTarget<'_>,
    ch: &ChannelModel<F>,
    max_iterations: usize,
    n_trials: usize,
    seed: u64,
) -> Result<Vec<BerEstimate<F>>> {
    if n_trials == 0 {
        return Err(Error::InvalidInput("n_trials must be at least 1".into()));
    }
    ch.validated()?;
    let len = max_iterations + 1;
    let (tally, n_vars) = match target {
        BerTarget::Graph(g) => {
            let layout = EdgeLayout::new(g);
            let blocks = n_trials.div_ceil(FIXED_GRAPH_BLOCK);
            let tally = (0..blocks)
                .into_par_iter()
                .map(|b| {
                    let range = b * FIXED_GRAPH_BLOCK..((b + 1) * FIXED_GRAPH_BLOCK).min(n_trials);
                    run_block(g, Some(&layout), ch, max_iterations, range, seed)
                })
                .reduce(|| Tally::zero(len), Tally::merge);
            (tally, g.n_vars())
        }
        BerTarget::Ensemble { spec, trials_per_graph } => {
            if trials_per_graph == 0 {
                return Err(Error::InvalidInput("trials_per_graph must be at least 1".into()));
            }
            let blocks = n_trials.div_ceil(trials_per_graph);
            let tally = (0..blocks)
                .into_par_iter()
                .map(|b| {
                    let g = sample_graph(spec, derive_seed(seed, stream::GRAPH, b as u64))?;
                    let range = b * trials_per_graph..((b + 1) * trials_per_graph).min(n_trials);
                    Ok::<_, Error>(run_block(&g, None, ch, max_iterations, range, seed))
                })
                .try_reduce(|| Tally::zero(len), |a, b| Ok(a.merge(b)))?;
            (tally, spec.n_vars())
        }
    };
    let trials = n_trials as f64;
    let n = n_vars as f64;
    Ok((0..len)
        .map(|t| {
            let s = tally.sum[t] as f64;
            let s2 = tally.sum_sq[t] as f64;
            let ber = s / (2.0 * n * trials);
            let std_error = if n_trials > 1 {
                let var = ((s2 - s * s / trials) / (trials - 1.0)).max(0.0) / (4.0 * n * n);
                (var / trials).sqrt()
            } else {
                f64::NAN
            };
            BerEstimate {
                iterations: t,
                ber: F::lit(ber),
                std_error: F::lit(std_error),
                trials: n_trials as u64,
                bits: (n_trials * n_vars) as u64,
                half_errors: tally.sum[t],
            }
        })
        .collect())
}

/// BER after exactly `iterations` iterations.
pub fn estimate_ber<F: Real>(
    target: BerTarget<'_>,
    ch: &ChannelModel<F>,
    iterations: usize,
    n_trials: usize,
    seed: u64,
) -> Result<BerEstimate<F>> {
    let mut curve = estimate_ber_curve(target, ch, iterations, n_trials, seed)?;
    Ok(curve.pop().expect("curve is non-empty"))
}
