//! Flooding sum-product decoding in the LLR domain.
//!
//! Messages live on edges, indexed check-major: the edges of check `c` are
//! `check_offsets[c]..check_offsets[c + 1]` in the order of
//! `TannerGraph::check_neighbors(c)`.
//!
//! Infinite LLRs are exact certainties. Sums saturate (`inf + x = inf`) and
//! opposite certainties cancel to a finite contribution of 0. Finite inputs
//! to the check rule are clamped to `±CLAMP`, and a check output is infinite
//! only when every other input is infinite.

use crate::graph::TannerGraph;
use crate::scalar::Real;

pub const CLAMP: f64 = 50.0;

/// Edge bookkeeping shared by all decodes on one graph.
#[derive(Debug, Clone)]
pub struct EdgeLayout {
    check_offsets: Vec<usize>,
    edge_var: Vec<usize>,
    var_offsets: Vec<usize>,
    var_edges: Vec<usize>,
}

impl EdgeLayout {
    pub fn new(g: &TannerGraph) -> Self {
        let mut check_offsets = Vec::with_capacity(g.n_checks() + 1);
        let mut edge_var = Vec::with_capacity(g.edge_count());
        check_offsets.push(0);
        for c in 0..g.n_checks() {
            edge_var.extend_from_slice(g.check_neighbors(c));
            check_offsets.push(edge_var.len());
        }
        let mut var_offsets = vec![0; g.n_vars() + 1];
        for &v in &edge_var {
            var_offsets[v + 1] += 1;
        }
        for v in 0..g.n_vars() {
            var_offsets[v + 1] += var_offsets[v];
        }
        let mut fill = var_offsets.clone();
        let mut var_edges = vec![0; edge_var.len()];
        for (e, &v) in edge_var.iter().enumerate() {
            var_edges[fill[v]] = e;
            fill[v] += 1;
        }
        Self { check_offsets, edge_var, var_offsets, var_edges }
    }

    pub fn n_vars(&self) -> usize {
        self.var_offsets.len() - 1
    }

    pub fn n_checks(&self) -> usize {
        self.check_offsets.len() - 1
    }

    pub fn n_edges(&self) -> usize {
        self.edge_var.len()
    }

    pub fn check_edges(&self, c: usize) -> std::ops::Range<usize> {
        self.check_offsets[c]..self.check_offsets[c + 1]
    }

    pub fn var_edges(&self, v: usize) -> &[usize] {
        &self.var_edges[self.var_offsets[v]..self.var_offsets[v + 1]]
    }

    /// Variable endpoint of edge `e`.
    pub fn edge_var(&self, e: usize) -> usize {
        self.edge_var[e]
    }
}

/// Messages after `iteration` completed iterations.
#[derive(Debug, Clone, PartialEq)]
pub struct BpState<F> {
    pub v2c: Vec<F>,
    pub c2v: Vec<F>,
    pub iteration: usize,
}

impl<F: Real> BpState<F> {
    pub fn new(layout: &EdgeLayout) -> Self {
        Self { v2c: vec![F::zero(); layout.n_edges()], c2v: vec![F::zero(); layout.n_edges()], iteration: 0 }
    }

    pub fn reset(&mut self) {
        self.v2c.fill(F::zero());
        self.c2v.fill(F::zero());
        self.iteration = 0;
    }
}

/// Running sum with exact handling of infinite terms.
#[derive(Debug, Clone, Copy)]
struct SatSum<F> {
    finite: F,
    pos_inf: u32,
    neg_inf: u32,
}

impl<F: Real> SatSum<F> {
    fn new() -> Self {
        Self { finite: F::zero(), pos_inf: 0, neg_inf: 0 }
    }

    fn add(&mut self, x: F) {
        if x == F::infinity() {
            self.pos_inf += 1;
        } else if x == F::neg_infinity() {
            self.neg_inf += 1;
        } else {
            self.finite = self.finite + x;
        }
    }

    fn value(&self) -> F {
        match (self.pos_inf > 0, self.neg_inf > 0) {
            (true, false) => F::infinity(),
            (false, true) => F::neg_infinity(),
            _ => self.finite,
        }
    }

    /// The sum with one previously added term taken out.
    fn without(&self, x: F) -> F {
        let mut rest = *self;
        if x == F::infinity() {
            rest.pos_inf -= 1;
        } else if x == F::neg_infinity() {
            rest.neg_inf -= 1;
        } else {
            rest.finite = rest.finite - x;
        }
        rest.value()
    }
}

/// Extrinsic sum of the channel LLR and incoming messages, leaving out `skip`.
pub fn v2c_message<F: Real>(llr: F, incoming: &[F], skip: usize) -> F {
    let mut sum = SatSum::new();
    sum.add(llr);
    for (i, &m) in incoming.iter().enumerate() {
        if i != skip {
            sum.add(m);
        }
    }
    sum.value()
}

/// Check-node rule `2 atanh(prod tanh(m/2))` over `incoming` without `skip`.
pub fn c2v_message<F: Real>(incoming: &[F], skip: usize) -> F {
    let clamp = F::lit(CLAMP);
    let half = F::lit(0.5);
    let mut product = F::one();
    let mut all_infinite = true;
    for (i, &m) in incoming.iter().enumerate() {
        if i == skip {
            continue;
        }
        if m.is_infinite() {
            product = product * m.signum();
        } else {
            all_infinite = false;
            product = product * (m.max(-clamp).min(clamp) * half).tanh();
        }
    }
    if all_infinite {
        return product * F::infinity();
    }
    let out = F::lit(2.0) * product.atanh();
    out.max(-clamp).min(clamp)
}

/// Variable-to-check half iteration, reading `state.c2v` from the previous iteration.
pub fn v2c_update<F: Real>(state: &mut BpState<F>, layout: &EdgeLayout, llr: &[F]) {
    for (v, &channel) in llr.iter().enumerate() {
        let edges = layout.var_edges(v);
        let mut sum = SatSum::new();
        sum.add(channel);
        for &e in edges {
            sum.add(state.c2v[e]);
        }
        for &e in edges {
            state.v2c[e] = sum.without(state.c2v[e]);
        }
    }
}

/// Check-to-variable half iteration, reading `state.v2c`.
pub fn c2v_update<F: Real>(state: &mut BpState<F>, layout: &EdgeLayout) {
    let clamp = F::lit(CLAMP);
    let half = F::lit(0.5);
    for c in 0..layout.n_checks() {
        let range = layout.check_edges(c);
        let incoming = &state.v2c[range.clone()];
        let out = &mut state.c2v[range];
        let finite = incoming.iter().filter(|m| !m.is_infinite()).count();
        // Product of tanh over all nonzero inputs, plus a zero count, lets
        // each extrinsic product be formed by division.
        let mut zeros = 0usize;
        let mut product = F::one();
        let t: Vec<F> = incoming
            .iter()
            .map(|&m| if m.is_infinite() { m.signum() } else { (m.max(-clamp).min(clamp) * half).tanh() })
            .collect();
        for &x in &t {
            if x == F::zero() {
                zeros += 1;
            } else {
                product = product * x;
            }
        }
        for (i, slot) in out.iter_mut().enumerate() {
            let others_finite = finite - usize::from(!incoming[i].is_infinite());
            let extrinsic = if t[i] == F::zero() {
                if zeros > 1 {
                    F::zero()
                } else {
                    product
                }
            } else if zeros > 0 {
                F::zero()
            } else {
                product / t[i]
            };
            *slot = if others_finite == 0 {
                extrinsic * F::infinity()
            } else {
                (F::lit(2.0) * extrinsic.atanh()).max(-clamp).min(clamp)
            };
        }
    }
    state.iteration += 1;
}

/// Channel LLRs plus every incoming check message.
pub fn marginals<F: Real>(state: &BpState<F>, layout: &EdgeLayout, llr: &[F], out: &mut [F]) {
    for (v, (&channel, slot)) in llr.iter().zip(out.iter_mut()).enumerate() {
        let mut sum = SatSum::new();
        sum.add(channel);
        for &e in layout.var_edges(v) {
            sum.add(state.c2v[e]);
        }
        *slot = sum.value();
    }
}

/// Hard decision: 0 for a positive marginal, 1 for a negative one, and 0 on a tie.
pub fn hard_decision<F: Real>(marginal: F) -> u8 {
    u8::from(marginal < F::zero())
}

/// Error tally against the all-zero word in half-bit units: 2 per wrong
/// bit, 1 per tie.
pub fn half_errors_vs_zero<F: Real>(marginals: &[F]) -> u64 {
    marginals
        .iter()
        .map(|&m| {
            if m < F::zero() {
                2
            } else if m == F::zero() {
                1
            } else {
                0
            }
        })
        .sum()
}

#[derive(Debug, Clone, PartialEq)]
pub struct DecodeOutput<F> {
    pub bits: Vec<u8>,
    pub marginals: Vec<F>,
}

/// Runs `iterations` flooding iterations without early stopping.
pub fn decode<F: Real>(g: &TannerGraph, llr: &[F], iterations: usize) -> DecodeOutput<F> {
    let layout = EdgeLayout::new(g);
    let mut trace = decode_trace(&layout, llr, iterations);
    let marginals = trace.pop().expect("trace holds iteration 0");
    let bits = marginals.iter().map(|&m| hard_decision(m)).collect();
    DecodeOutput { bits, marginals }
}

/// Marginals after each of 0, 1, ..., `iterations` iterations.
pub fn decode_trace<F: Real>(layout: &EdgeLayout, llr: &[F], iterations: usize) -> Vec<Vec<F>> {
    let mut state = BpState::new(layout);
    let mut trace = Vec::with_capacity(iterations + 1);
    let mut current = vec![F::zero(); llr.len()];
    marginals(&state, layout, llr, &mut current);
    trace.push(current.clone());
    for _ in 0..iterations {
        v2c_update(&mut state, layout, llr);
        c2v_update(&mut state, layout);
        marginals(&state, layout, llr, &mut current);
        trace.push(current.clone());
    }
    trace
}

/// Reusable decoder that reports the half-error count after every iteration.
#[derive(Debug, Clone)]
pub struct ZeroWordDecoder<'a, F> {
    layout: &'a EdgeLayout,
    state: BpState<F>,
    marginal: Vec<F>,
}

impl<'a, F: Real> ZeroWordDecoder<'a, F> {
    pub fn new(layout: &'a EdgeLayout) -> Self {
        Self { layout, state: BpState::new(layout), marginal: vec![F::zero(); layout.n_vars()] }
    }

    /// Decodes `llr` for `iterations` iterations; `errors[t]` receives the
    /// half-error count after iteration `t`.
    pub fn run(&mut self, llr: &[F], iterations: usize, errors: &mut [u64]) {
        self.state.reset();
        marginals(&self.state, self.layout, llr, &mut self.marginal);
        errors[0] = half_errors_vs_zero(&self.marginal);
        for slot in errors.iter_mut().take(iterations + 1).skip(1) {
            v2c_update(&mut self.state, self.layout, llr);
            c2v_update(&mut self.state, self.layout);
            marginals(&self.state, self.layout, llr, &mut self.marginal);
            *slot = half_errors_vs_zero(&self.marginal);
        }
    }
}
