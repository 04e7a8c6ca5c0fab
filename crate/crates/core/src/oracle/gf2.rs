//! Root-constrained minimum weight of the local code around a variable.
//!
//! The local code has one GF(2) unknown per distinct variable within
//! distance `2l` of the root and one parity row per check within distance
//! `2l - 1`. The minimum weight with the root fixed to 1 is found by
//! Gaussian elimination followed by a Gray-code walk over the free
//! variables.

use rand::Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{sample_graph, EnsembleSpec, TannerGraph};
use crate::rng::{derive_seed, derived_rng, stream};

/// Largest solution-space dimension enumerated exhaustively.
pub const MAX_FREE_DIMENSION: usize = 28;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gf2System {
    pub root: usize,
    /// Global variable indices; `variables[0]` is the root.
    pub variables: Vec<usize>,
    /// Global check indices, one per row.
    pub checks: Vec<usize>,
    /// Parity rows as local variable indices.
    pub rows: Vec<Vec<usize>>,
}

/// Local system of the height-`2l` computation graph of `v`.
pub fn local_system(g: &TannerGraph, v: usize, l: usize) -> Gf2System {
    let depth = 2 * l as u32;
    let dist = g.distances_from_var(v, Some(depth));
    let mut variables = vec![v];
    variables.extend((0..g.n_vars()).filter(|&u| u != v && dist.to_var(u).is_some()));
    let mut local = vec![usize::MAX; g.n_vars()];
    for (i, &u) in variables.iter().enumerate() {
        local[u] = i;
    }
    let checks: Vec<usize> = (0..g.n_checks()).filter(|&c| dist.to_check(c).is_some_and(|d| d < depth)).collect();
    let rows = checks.iter().map(|&c| g.check_neighbors(c).iter().map(|&u| local[u]).collect()).collect();
    Gf2System { root: v, variables, checks, rows }
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct BitVec {
    words: Vec<u64>,
}

impl BitVec {
    fn zeros(bits: usize) -> Self {
        Self { words: vec![0; bits.div_ceil(64).max(1)] }
    }

    fn get(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    fn flip(&mut self, i: usize) {
        self.words[i / 64] ^= 1 << (i % 64);
    }

    fn set(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    fn xor_assign(&mut self, other: &Self) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }
}

/// A minimum-weight root-constrained codeword.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinWeight {
    pub weight: usize,
    /// Global indices of the variables set to 1.
    pub support: Vec<usize>,
}

fn satisfies(sys: &Gf2System, x: &BitVec) -> bool {
    x.get(0) && sys.rows.iter().all(|row| row.iter().filter(|&&i| x.get(i)).count() % 2 == 0)
}

/// Minimum weight with the root set to 1; `None` when no such codeword exists.
pub fn min_weight_root_one(sys: &Gf2System) -> Result<Option<MinWeight>> {
    let nv = sys.variables.len();
    let mut rows: Vec<(BitVec, bool)> = sys
        .rows
        .iter()
        .map(|r| {
            let mut b = BitVec::zeros(nv);
            for &i in r {
                b.flip(i);
            }
            (b, false)
        })
        .collect();
    let mut root_row = BitVec::zeros(nv);
    root_row.set(0);
    rows.push((root_row, true));

    let mut pivots: Vec<usize> = Vec::new();
    let mut rank = 0;
    for col in 0..nv {
        let Some(p) = (rank..rows.len()).find(|&r| rows[r].0.get(col)) else { continue };
        rows.swap(rank, p);
        let (pivot_bits, pivot_rhs) = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row.0.get(col) {
                row.0.xor_assign(&pivot_bits);
                row.1 ^= pivot_rhs;
            }
        }
        pivots.push(col);
        rank += 1;
    }
    if rows[rank..].iter().any(|(bits, rhs)| *rhs && bits.is_zero()) {
        return Ok(None);
    }
    let mut is_pivot = vec![false; nv];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    let free: Vec<usize> = (0..nv).filter(|&c| !is_pivot[c]).collect();
    if free.len() > MAX_FREE_DIMENSION {
        return Err(Error::Capacity { dimension: free.len(), limit: MAX_FREE_DIMENSION });
    }
    let mut x = BitVec::zeros(nv);
    for (r, &c) in pivots.iter().enumerate() {
        if rows[r].1 {
            x.set(c);
        }
    }
    let basis: Vec<BitVec> = free
        .iter()
        .map(|&f| {
            let mut b = BitVec::zeros(nv);
            b.set(f);
            for (r, &c) in pivots.iter().enumerate() {
                if rows[r].0.get(f) {
                    b.set(c);
                }
            }
            b
        })
        .collect();
    let mut best = x.clone();
    let mut best_weight = x.count_ones();
    for i in 1u64..(1u64 << free.len()) {
        x.xor_assign(&basis[i.trailing_zeros() as usize]);
        let w = x.count_ones();
        if w < best_weight {
            best_weight = w;
            best = x.clone();
        }
    }
    assert!(satisfies(sys, &best), "minimum-weight assignment violates the local parity rows");
    let support = (0..nv).filter(|&i| best.get(i)).map(|i| sys.variables[i]).collect();
    Ok(Some(MinWeight { weight: best_weight, support }))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SampleOutcome {
    Weight(usize),
    Infeasible,
    /// The solution space exceeded [`MAX_FREE_DIMENSION`].
    Skipped {
        dimension: usize,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub struct MinWeightSummary {
    pub outcomes: Vec<SampleOutcome>,
    /// Mean over samples with a weight.
    pub mean: f64,
    pub std_error: f64,
    pub infeasible_count: usize,
    pub skipped_count: usize,
}

impl MinWeightSummary {
    /// Fraction of all samples with weight at most `w`, and its binomial
    /// standard error. Infeasible and skipped samples count as above `w`.
    pub fn fraction_at_most(&self, w: usize) -> (f64, f64) {
        let n = self.outcomes.len() as f64;
        let hits = self.outcomes.iter().filter(|o| matches!(o, SampleOutcome::Weight(x) if *x <= w)).count() as f64;
        let p = hits / n;
        (p, (p * (1.0 - p) / n).sqrt())
    }
}

/// Averages the root-constrained minimum weight over `n_samples` draws of
/// a graph from `spec` followed by a uniform root.
pub fn expected_min_weight_mc(spec: &EnsembleSpec, l: usize, n_samples: usize, seed: u64) -> Result<MinWeightSummary> {
    if n_samples == 0 {
        return Err(Error::InvalidInput("n_samples must be at least 1".into()));
    }
    let outcomes: Vec<SampleOutcome> = (0..n_samples)
        .into_par_iter()
        .map(|i| {
            let g = sample_graph(spec, derive_seed(seed, stream::GRAPH, i as u64))?;
            let v = derived_rng(seed, stream::VERTEX, i as u64).random_range(0..g.n_vars());
            Ok(match min_weight_root_one(&local_system(&g, v, l)) {
                Ok(Some(m)) => SampleOutcome::Weight(m.weight),
                Ok(None) => SampleOutcome::Infeasible,
                Err(Error::Capacity { dimension, .. }) => SampleOutcome::Skipped { dimension },
                Err(e) => return Err(e),
            })
        })
        .collect::<Result<_>>()?;
    let weights: Vec<f64> = outcomes
        .iter()
        .filter_map(|o| match o {
            SampleOutcome::Weight(w) => Some(*w as f64),
            _ => None,
        })
        .collect();
    let k = weights.len() as f64;
    let mean = weights.iter().sum::<f64>() / k;
    let std_error = if weights.len() > 1 {
        (weights.iter().map(|w| (w - mean).powi(2)).sum::<f64>() / (k - 1.0) / k).sqrt()
    } else {
        f64::NAN
    };
    let infeasible_count = outcomes.iter().filter(|o| matches!(o, SampleOutcome::Infeasible)).count();
    let skipped_count = outcomes.iter().filter(|o| matches!(o, SampleOutcome::Skipped { .. })).count();
    Ok(MinWeightSummary { outcomes, mean, std_error, infeasible_count, skipped_count })
}
