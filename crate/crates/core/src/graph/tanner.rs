use std::collections::VecDeque;

use crate::error::{Error, Result};

/// A node of a Tanner graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Node {
    Var(usize),
    Check(usize),
}

/// Bipartite graph between `n_vars` variable nodes and `n_checks` check
/// nodes, stored as adjacency lists on both sides. Immutable once built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TannerGraph {
    var_adj: Vec<Vec<usize>>,
    check_adj: Vec<Vec<usize>>,
}

pub(crate) const UNREACHED: u32 = u32::MAX;

/// BFS distances from one root to every variable and check node.
#[derive(Debug, Clone)]
pub struct Distances {
    pub(crate) var: Vec<u32>,
    pub(crate) check: Vec<u32>,
}

impl Distances {
    pub fn to_var(&self, v: usize) -> Option<u32> {
        (self.var[v] != UNREACHED).then_some(self.var[v])
    }

    pub fn to_check(&self, c: usize) -> Option<u32> {
        (self.check[c] != UNREACHED).then_some(self.check[c])
    }
}

impl TannerGraph {
    /// Builds a graph from per-check lists of variable indices.
    pub fn from_check_lists(n_vars: usize, checks: Vec<Vec<usize>>) -> Result<Self> {
        let mut var_adj = vec![Vec::new(); n_vars];
        for (c, vars) in checks.iter().enumerate() {
            for &v in vars {
                if v >= n_vars {
                    return Err(Error::InvalidInput(format!("check {c} references variable {v} >= {n_vars}")));
                }
                if var_adj[v].last() == Some(&c) {
                    return Err(Error::InvalidInput(format!("parallel edge between variable {v} and check {c}")));
                }
                var_adj[v].push(c);
            }
        }
        Ok(Self { var_adj, check_adj: checks })
    }

    /// Builds a graph from per-variable lists of check indices.
    pub fn from_var_lists(n_checks: usize, vars: Vec<Vec<usize>>) -> Result<Self> {
        let mut check_adj = vec![Vec::new(); n_checks];
        for (v, checks) in vars.iter().enumerate() {
            for &c in checks {
                if c >= n_checks {
                    return Err(Error::InvalidInput(format!("variable {v} references check {c} >= {n_checks}")));
                }
                if check_adj[c].last() == Some(&v) {
                    return Err(Error::InvalidInput(format!("parallel edge between variable {v} and check {c}")));
                }
                check_adj[c].push(v);
            }
        }
        Ok(Self { var_adj: vars, check_adj })
    }

    /// Uses `check_adj` as the check-side ordering after checking that it
    /// lists the same edges as the graph built from `vars`.
    pub(crate) fn from_both_lists(vars: Vec<Vec<usize>>, check_adj: Vec<Vec<usize>>) -> Result<Self> {
        let g = Self::from_var_lists(check_adj.len(), vars)?;
        for (c, list) in check_adj.iter().enumerate() {
            let mut expected = g.check_adj[c].clone();
            let mut found = list.clone();
            expected.sort_unstable();
            found.sort_unstable();
            if expected != found {
                return Err(Error::InvalidInput(format!("check {c} list disagrees with the variable lists")));
            }
        }
        Ok(Self { var_adj: g.var_adj, check_adj })
    }

    pub fn n_vars(&self) -> usize {
        self.var_adj.len()
    }

    pub fn n_checks(&self) -> usize {
        self.check_adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.var_adj.iter().map(Vec::len).sum()
    }

    pub fn var_neighbors(&self, v: usize) -> &[usize] {
        &self.var_adj[v]
    }

    pub fn check_neighbors(&self, c: usize) -> &[usize] {
        &self.check_adj[c]
    }

    pub fn var_degree(&self, v: usize) -> usize {
        self.var_adj[v].len()
    }

    pub fn check_degree(&self, c: usize) -> usize {
        self.check_adj[c].len()
    }

    pub fn var_lists(&self) -> &[Vec<usize>] {
        &self.var_adj
    }

    pub fn check_lists(&self) -> &[Vec<usize>] {
        &self.check_adj
    }

    pub fn neighbors(&self, node: Node) -> impl Iterator<Item = Node> + '_ {
        let (list, wrap): (&[usize], fn(usize) -> Node) = match node {
            Node::Var(v) => (&self.var_adj[v], Node::Check),
            Node::Check(c) => (&self.check_adj[c], Node::Var),
        };
        list.iter().map(move |&i| wrap(i))
    }

    /// Breadth-first distances from variable `root`, stopping after `max_depth`
    /// when given. Variables sit at even distances, checks at odd ones.
    pub fn distances_from_var(&self, root: usize, max_depth: Option<u32>) -> Distances {
        let mut var = vec![UNREACHED; self.n_vars()];
        let mut check = vec![UNREACHED; self.n_checks()];
        var[root] = 0;
        let mut queue = VecDeque::from([Node::Var(root)]);
        while let Some(node) = queue.pop_front() {
            let d = match node {
                Node::Var(v) => var[v],
                Node::Check(c) => check[c],
            };
            if max_depth.is_some_and(|m| d >= m) {
                continue;
            }
            match node {
                Node::Var(v) => {
                    for &c in &self.var_adj[v] {
                        if check[c] == UNREACHED {
                            check[c] = d + 1;
                            queue.push_back(Node::Check(c));
                        }
                    }
                }
                Node::Check(c) => {
                    for &u in &self.check_adj[c] {
                        if var[u] == UNREACHED {
                            var[u] = d + 1;
                            queue.push_back(Node::Var(u));
                        }
                    }
                }
            }
        }
        Distances { var, check }
    }

    /// Shortest-path length between two variable nodes, `None` if disconnected.
    pub fn distance(&self, vi: usize, vj: usize) -> Option<u32> {
        if vi == vj {
            return Some(0);
        }
        // Plain BFS with an early exit at the target.
        let mut var = vec![UNREACHED; self.n_vars()];
        let mut check_seen = vec![false; self.n_checks()];
        var[vi] = 0;
        let mut queue = VecDeque::from([vi]);
        while let Some(v) = queue.pop_front() {
            for &c in &self.var_adj[v] {
                if std::mem::replace(&mut check_seen[c], true) {
                    continue;
                }
                for &u in &self.check_adj[c] {
                    if var[u] == UNREACHED {
                        var[u] = var[v] + 2;
                        if u == vj {
                            return Some(var[u]);
                        }
                        queue.push_back(u);
                    }
                }
            }
        }
        None
    }

    /// Length of the shortest cycle, `None` for a forest.
    pub fn girth(&self) -> Option<usize> {
        let n = self.n_vars();
        let total = n + self.n_checks();
        let mut best = usize::MAX;
        let mut dist = vec![UNREACHED; total];
        let mut parent = vec![usize::MAX; total];
        let mut touched = Vec::new();
        let mut queue = VecDeque::new();
        let id = |node: Node| match node {
            Node::Var(v) => v,
            Node::Check(c) => n + c,
        };
        let node_of = |i: usize| if i < n { Node::Var(i) } else { Node::Check(i - n) };
        // Every cycle passes through a variable node.
        for root in 0..n {
            for &i in &touched {
                dist[i] = UNREACHED;
                parent[i] = usize::MAX;
            }
            touched.clear();
            queue.clear();
            dist[root] = 0;
            touched.push(root);
            queue.push_back(root);
            'bfs: while let Some(u) = queue.pop_front() {
                if 2 * dist[u] as usize + 1 >= best {
                    break;
                }
                for w in self.neighbors(node_of(u)).map(id) {
                    if dist[w] == UNREACHED {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        touched.push(w);
                        queue.push_back(w);
                    } else if parent[u] != w {
                        best = best.min((dist[u] + dist[w] + 1) as usize);
                        if best <= 4 {
                            break 'bfs;
                        }
                    }
                }
            }
            if best == 4 {
                break;
            }
        }
        (best != usize::MAX).then_some(best)
    }
}
