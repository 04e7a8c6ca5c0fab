use super::tanner::{Node, TannerGraph};

/// The depth-`k` neighborhood of a variable node: every node at distance at
/// most `k` from the root, grouped by distance, with the induced edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NeighborhoodView {
    pub root: usize,
    pub depth: usize,
    /// `levels[d]` holds the nodes at distance exactly `d` (variables on even
    /// levels, checks on odd ones), in BFS discovery order.
    pub levels: Vec<Vec<Node>>,
    /// Induced edges as `(variable, check)` pairs.
    pub edges: Vec<(usize, usize)>,
    pub tree_like: bool,
}

impl NeighborhoodView {
    pub fn node_count(&self) -> usize {
        self.levels.iter().map(Vec::len).sum()
    }

    pub fn variables(&self) -> impl Iterator<Item = usize> + '_ {
        self.levels.iter().flatten().filter_map(|n| match n {
            Node::Var(v) => Some(*v),
            Node::Check(_) => None,
        })
    }

    pub fn checks(&self) -> impl Iterator<Item = usize> + '_ {
        self.levels.iter().flatten().filter_map(|n| match n {
            Node::Check(c) => Some(*c),
            Node::Var(_) => None,
        })
    }

    /// Distinct variable count `n_k`.
    pub fn var_count(&self) -> usize {
        self.variables().count()
    }

    /// Distinct check count `m_k`.
    pub fn check_count(&self) -> usize {
        self.checks().count()
    }
}

/// Collects the nodes within distance `k` (inclusive) of variable `root`.
pub fn neighborhood(g: &TannerGraph, root: usize, k: usize) -> NeighborhoodView {
    let dist = g.distances_from_var(root, Some(k as u32));
    let mut levels: Vec<Vec<Node>> = vec![Vec::new(); k + 1];
    // Re-run the BFS order so levels list nodes in discovery order.
    let mut var_listed = vec![false; g.n_vars()];
    let mut check_listed = vec![false; g.n_checks()];
    var_listed[root] = true;
    let mut frontier = vec![Node::Var(root)];
    levels[0].push(Node::Var(root));
    for level in 1..=k {
        let mut next = Vec::new();
        for &node in &frontier {
            for nb in g.neighbors(node) {
                let (d, listed) = match nb {
                    Node::Var(v) => (dist.to_var(v), &mut var_listed[v]),
                    Node::Check(c) => (dist.to_check(c), &mut check_listed[c]),
                };
                if d == Some(level as u32) && !std::mem::replace(listed, true) {
                    next.push(nb);
                }
            }
        }
        levels[level] = next.clone();
        frontier = next;
    }
    let mut edges = Vec::new();
    for node in levels.iter().flatten() {
        if let Node::Var(v) = *node {
            for &c in g.var_neighbors(v) {
                if dist.to_check(c).is_some() {
                    edges.push((v, c));
                }
            }
        }
    }
    let node_count: usize = levels.iter().map(Vec::len).sum();
    let tree_like = edges.len() + 1 == node_count;
    NeighborhoodView { root, depth: k, levels, edges, tree_like }
}
