//! Progressive edge growth.
//!
//! Edges are placed one variable at a time. Each new edge of variable `v`
//! goes to a check at maximal distance from `v` in the graph built so far
//! (unreachable checks count as infinitely far), ties broken by lowest
//! current check degree and then lowest index. Checks are capped at
//! `ceil(E / M)` edges so the check side comes out as regular as the edge
//! count allows.

use super::tanner::{TannerGraph, UNREACHED};
use crate::error::{Error, Result};
use std::collections::VecDeque;

pub fn peg_construct(n_vars: usize, var_degrees: &[usize], n_checks: usize) -> Result<TannerGraph> {
    if var_degrees.len() != n_vars {
        return Err(Error::Construction(format!(
            "{} variable degrees given for {n_vars} variables",
            var_degrees.len()
        )));
    }
    if n_checks == 0 {
        return Err(Error::Construction("no check nodes".into()));
    }
    if let Some((v, &d)) = var_degrees.iter().enumerate().find(|(_, &d)| d == 0 || d > n_checks) {
        return Err(Error::Construction(format!("variable {v} has infeasible degree {d} with {n_checks} checks")));
    }
    let edges: usize = var_degrees.iter().sum();
    let capacity = edges.div_ceil(n_checks);

    let mut var_adj: Vec<Vec<usize>> = var_degrees.iter().map(|&d| Vec::with_capacity(d)).collect();
    let mut check_adj: Vec<Vec<usize>> = vec![Vec::with_capacity(capacity); n_checks];
    let mut check_dist = vec![UNREACHED; n_checks];
    let mut var_seen = vec![false; n_vars];
    let mut queue = VecDeque::new();

    for v in 0..n_vars {
        for _ in 0..var_degrees[v] {
            expand_distances(v, &var_adj, &check_adj, &mut check_dist, &mut var_seen, &mut queue);
            let chosen = (0..n_checks)
                .filter(|&c| check_adj[c].len() < capacity && check_dist[c] != 1)
                .min_by_key(|&c| (std::cmp::Reverse(check_dist[c]), check_adj[c].len(), c))
                .ok_or_else(|| {
                    Error::Construction(format!("no check with free capacity available for variable {v}"))
                })?;
            var_adj[v].push(chosen);
            check_adj[chosen].push(v);
        }
    }
    TannerGraph::from_var_lists(n_checks, var_adj)
}

/// Fills `check_dist` with BFS distances from variable `root` (odd values;
/// `UNREACHED` when disconnected).
fn expand_distances(
    root: usize,
    var_adj: &[Vec<usize>],
    check_adj: &[Vec<usize>],
    check_dist: &mut [u32],
    var_seen: &mut [bool],
    queue: &mut VecDeque<(usize, u32)>,
) {
    check_dist.fill(UNREACHED);
    var_seen.fill(false);
    queue.clear();
    var_seen[root] = true;
    queue.push_back((root, 0));
    while let Some((v, d)) = queue.pop_front() {
        for &c in &var_adj[v] {
            if check_dist[c] != UNREACHED {
                continue;
            }
            check_dist[c] = d + 1;
            for &u in &check_adj[c] {
                if !var_seen[u] {
                    var_seen[u] = true;
                    queue.push_back((u, d + 2));
                }
            }
        }
    }
}
