//! Backtracking search for a valid tree of height `2l` around a variable.
//!
//! A valid tree contains the root and all of its checks. Every check in the
//! tree has exactly one child, a variable one level further from the root
//! whose only check at the parent's level is that check. Variables below
//! level `2l` bring in all of their other checks, which must not already be
//! in the tree. Setting the tree's variables to 1 satisfies every check of
//! the height-`2l` computation graph.

use crate::graph::tanner::{Distances, Node, UNREACHED};
use crate::graph::TannerGraph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidTree {
    pub root: usize,
    pub variables: Vec<usize>,
    pub checks: Vec<usize>,
}

impl ValidTree {
    pub fn weight(&self) -> usize {
        self.variables.len()
    }

    pub fn nodes(&self) -> impl Iterator<Item = Node> + '_ {
        self.variables.iter().map(|&v| Node::Var(v)).chain(self.checks.iter().map(|&c| Node::Check(c)))
    }
}

struct Search<'a> {
    g: &'a TannerGraph,
    dist: Distances,
    depth: u32,
    in_var: Vec<bool>,
    in_check: Vec<bool>,
    variables: Vec<usize>,
    checks: Vec<usize>,
}

impl Search<'_> {
    fn var_level(&self, v: usize) -> u32 {
        self.dist.to_var(v).unwrap_or(UNREACHED)
    }

    fn check_level(&self, c: usize) -> u32 {
        self.dist.to_check(c).unwrap_or(UNREACHED)
    }

    fn solve(&mut self, pending: &mut Vec<usize>) -> bool {
        let Some(c) = pending.pop() else { return true };
        let level = self.check_level(c);
        let g = self.g;
        for &u in g.check_neighbors(c) {
            if self.in_var[u] || self.var_level(u) != level + 1 {
                continue;
            }
            if g.var_neighbors(u).iter().filter(|&&x| self.check_level(x) == level).count() != 1 {
                continue;
            }
            let pending_len = pending.len();
            let checks_len = self.checks.len();
            if level + 1 < self.depth {
                let others = || g.var_neighbors(u).iter().copied().filter(|&x| x != c);
                if others().any(|x| self.in_check[x]) {
                    continue;
                }
                for x in others() {
                    self.in_check[x] = true;
                    self.checks.push(x);
                    pending.push(x);
                }
            }
            self.in_var[u] = true;
            self.variables.push(u);
            if self.solve(pending) {
                return true;
            }
            self.in_var[u] = false;
            self.variables.pop();
            for &x in &self.checks[checks_len..] {
                self.in_check[x] = false;
            }
            self.checks.truncate(checks_len);
            pending.truncate(pending_len);
        }
        pending.push(c);
        false
    }
}

/// Finds a valid tree of height `2l` rooted at `v`, if one exists.
pub fn valid_tree_search(g: &TannerGraph, v: usize, l: usize) -> Option<ValidTree> {
    let depth = 2 * l as u32;
    let mut search = Search {
        g,
        dist: g.distances_from_var(v, Some(depth + 1)),
        depth,
        in_var: vec![false; g.n_vars()],
        in_check: vec![false; g.n_checks()],
        variables: vec![v],
        checks: Vec::new(),
    };
    search.in_var[v] = true;
    let mut pending = Vec::new();
    if l > 0 {
        for &c in g.var_neighbors(v) {
            search.in_check[c] = true;
            search.checks.push(c);
            pending.push(c);
        }
    }
    search.solve(&mut pending).then(|| ValidTree { root: v, variables: search.variables, checks: search.checks })
}
