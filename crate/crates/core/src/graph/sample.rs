//! Configuration-model sampling of `LDPC(N, L, R)`.

use rand::seq::SliceRandom;
use rand::Rng;

use super::ensemble::{DegreeSequences, EnsembleSpec};
use super::tanner::TannerGraph;
use crate::error::{Error, Result};
use crate::rng::rng_from_seed;

/// Full-matching resamples allowed before giving up.
pub const MAX_ATTEMPTS: usize = 10_000;

/// A sampled graph plus how many matchings were drawn to get it.
#[derive(Debug, Clone)]
pub struct SampledGraph {
    pub graph: TannerGraph,
    pub attempts: usize,
}

/// Draws a graph uniformly from the simple configurations of `spec`.
///
/// Sockets are matched by a uniform random permutation; any matching with a
/// parallel edge is discarded whole and redrawn.
pub fn sample_graph(spec: &EnsembleSpec, seed: u64) -> Result<TannerGraph> {
    sample_graph_with_stats(spec, seed).map(|s| s.graph)
}

pub fn sample_graph_with_stats(spec: &EnsembleSpec, seed: u64) -> Result<SampledGraph> {
    let sequences = spec.degree_sequences()?;
    let mut rng = rng_from_seed(seed);
    sample_configuration(&sequences, &mut rng, MAX_ATTEMPTS)
}

/// Configuration model on explicit degree sequences.
pub fn sample_configuration<R: Rng>(seq: &DegreeSequences, rng: &mut R, max_attempts: usize) -> Result<SampledGraph> {
    let n_vars = seq.var_degrees.len();
    let edges = seq.edge_count();
    if edges != seq.check_degrees.iter().sum::<usize>() {
        return Err(Error::InvalidSpec("variable and check socket counts differ".into()));
    }
    // check_sockets[s] = owning check of socket s; var sockets are laid out in order.
    let check_sockets: Vec<usize> =
        seq.check_degrees.iter().enumerate().flat_map(|(c, &d)| std::iter::repeat_n(c, d)).collect();
    let var_offsets: Vec<usize> = std::iter::once(0)
        .chain(seq.var_degrees.iter().scan(0, |acc, &d| {
            *acc += d;
            Some(*acc)
        }))
        .collect();
    let mut perm: Vec<usize> = (0..edges).collect();
    let mut var_adj: Vec<Vec<usize>> = seq.var_degrees.iter().map(|&d| Vec::with_capacity(d)).collect();
    for attempt in 1..=max_attempts {
        perm.shuffle(rng);
        let mut simple = true;
        'vars: for v in 0..n_vars {
            let adj = &mut var_adj[v];
            adj.clear();
            for &socket in &perm[var_offsets[v]..var_offsets[v + 1]] {
                let c = check_sockets[socket];
                if adj.contains(&c) {
                    simple = false;
                    break 'vars;
                }
                adj.push(c);
            }
        }
        if simple {
            let graph = TannerGraph::from_var_lists(seq.check_degrees.len(), var_adj)?;
            return Ok(SampledGraph { graph, attempts: attempt });
        }
    }
    Err(Error::SamplingFailure { attempts: max_attempts, reason: "every matching had a parallel edge".into() })
}
