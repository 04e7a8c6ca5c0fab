use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Real;

const SUM_TOLERANCE: f64 = 1e-12;

/// Which population the fractions of a [`DegreeDistribution`] count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Perspective {
    /// Fraction of nodes with each degree (`L_d`, `R_d`).
    Node,
    /// Fraction of edges attached to nodes of each degree (`λ_d`, `ρ_d`).
    Edge,
}

/// A finitely supported degree distribution.
///
/// Node-perspective distributions are the polynomials `L(x) = Σ L_d x^d`;
/// edge-perspective ones are `λ(x) = Σ λ_d x^(d-1)`. Fractions are kept in a
/// map keyed by degree so iteration is ordered by degree.
#[derive(Debug, Clone, PartialEq)]
pub struct DegreeDistribution {
    perspective: Perspective,
    terms: BTreeMap<usize, f64>,
}

impl DegreeDistribution {
    pub fn new(perspective: Perspective, terms: impl IntoIterator<Item = (usize, f64)>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (degree, fraction) in terms {
            if degree == 0 {
                return Err(Error::InvalidInput("degree 0 is not allowed".into()));
            }
            if !(fraction > 0.0 && fraction <= 1.0) {
                return Err(Error::InvalidInput(format!("fraction {fraction} for degree {degree} is outside (0, 1]")));
            }
            if map.insert(degree, fraction).is_some() {
                return Err(Error::InvalidInput(format!("degree {degree} listed twice")));
            }
        }
        if map.is_empty() {
            return Err(Error::InvalidInput("empty degree distribution".into()));
        }
        let total: f64 = map.values().sum();
        if (total - 1.0).abs() > SUM_TOLERANCE {
            return Err(Error::InvalidInput(format!("fractions sum to {total}, expected 1")));
        }
        Ok(Self { perspective, terms: map })
    }

    pub fn node(terms: impl IntoIterator<Item = (usize, f64)>) -> Result<Self> {
        Self::new(Perspective::Node, terms)
    }

    pub fn edge(terms: impl IntoIterator<Item = (usize, f64)>) -> Result<Self> {
        Self::new(Perspective::Edge, terms)
    }

    /// Single-degree distribution `x^d` (identical in both perspectives up to
    /// the exponent shift).
    pub fn regular(perspective: Perspective, degree: usize) -> Result<Self> {
        Self::new(perspective, [(degree, 1.0)])
    }

    pub fn perspective(&self) -> Perspective {
        self.perspective
    }

    pub fn terms(&self) -> &BTreeMap<usize, f64> {
        &self.terms
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, f64)> + '_ {
        self.terms.iter().map(|(&d, &f)| (d, f))
    }

    pub fn fraction(&self, degree: usize) -> f64 {
        self.terms.get(&degree).copied().unwrap_or(0.0)
    }

    pub fn max_degree(&self) -> usize {
        *self.terms.keys().next_back().expect("non-empty")
    }

    pub fn min_degree(&self) -> usize {
        *self.terms.keys().next().expect("non-empty")
    }

    /// `Some(d)` when the support is the single degree `d`.
    pub fn single_degree(&self) -> Option<usize> {
        (self.terms.len() == 1).then(|| self.min_degree())
    }

    /// Average node degree `Σ d·L_d` (= `L'(1)`), computed from either perspective.
    pub fn mean_node_degree(&self) -> f64 {
        match self.perspective {
            Perspective::Node => self.iter().map(|(d, f)| d as f64 * f).sum(),
            Perspective::Edge => 1.0 / self.iter().map(|(d, f)| f / d as f64).sum::<f64>(),
        }
    }

    /// Edge-perspective form: `λ_d = d·L_d / Σ d·L_d`.
    pub fn to_edge(&self) -> DegreeDistribution {
        match self.perspective {
            Perspective::Edge => self.clone(),
            Perspective::Node => {
                let norm: f64 = self.iter().map(|(d, f)| d as f64 * f).sum();
                let terms = self.iter().map(|(d, f)| (d, d as f64 * f / norm)).collect();
                Self { perspective: Perspective::Edge, terms }
            }
        }
    }

    /// Node-perspective form: `L_d = (λ_d / d) / Σ λ_d / d`.
    pub fn to_node(&self) -> DegreeDistribution {
        match self.perspective {
            Perspective::Node => self.clone(),
            Perspective::Edge => {
                let norm: f64 = self.iter().map(|(d, f)| f / d as f64).sum();
                let terms = self.iter().map(|(d, f)| (d, f / d as f64 / norm)).collect();
                Self { perspective: Perspective::Node, terms }
            }
        }
    }

    /// Evaluates the node polynomial `Σ L_d x^d` of the node form.
    pub fn node_poly<F: Real>(&self, x: F) -> F {
        self.to_node().iter().fold(F::zero(), |acc, (d, f)| acc + F::lit(f) * x.powi(d as i32))
    }

    /// Evaluates the edge polynomial `Σ λ_d x^(d-1)` of the edge form.
    pub fn edge_poly<F: Real>(&self, x: F) -> F {
        self.to_edge().iter().fold(F::zero(), |acc, (d, f)| acc + F::lit(f) * x.powi(d as i32 - 1))
    }
}

/// Node and edge forms of one side of an ensemble, cached for repeated
/// polynomial evaluation.
#[derive(Debug, Clone)]
pub(crate) struct PolyPair {
    node: Vec<(i32, f64)>,
    edge: Vec<(i32, f64)>,
}

impl PolyPair {
    pub(crate) fn new(dist: &DegreeDistribution) -> Self {
        let node = dist.to_node().iter().map(|(d, f)| (d as i32, f)).collect();
        let edge = dist.to_edge().iter().map(|(d, f)| (d as i32, f)).collect();
        Self { node, edge }
    }

    pub(crate) fn node_poly<F: Real>(&self, x: F) -> F {
        self.node.iter().fold(F::zero(), |acc, &(d, f)| acc + F::lit(f) * x.powi(d))
    }

    pub(crate) fn edge_poly<F: Real>(&self, x: F) -> F {
        self.edge.iter().fold(F::zero(), |acc, &(d, f)| acc + F::lit(f) * x.powi(d - 1))
    }
}

// JSON form is the plain `{degree: fraction}` map; the perspective comes from context.
impl Serialize for DegreeDistribution {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.terms.serialize(serializer)
    }
}

/// Deserializes a `{degree: fraction}` map as a node-perspective distribution.
pub fn deserialize_node<'de, D: serde::Deserializer<'de>>(d: D) -> std::result::Result<DegreeDistribution, D::Error> {
    let map = BTreeMap::<usize, f64>::deserialize(d)?;
    DegreeDistribution::node(map).map_err(serde::de::Error::custom)
}

/// Deserializes a `{degree: fraction}` map as an edge-perspective distribution.
pub fn deserialize_edge<'de, D: serde::Deserializer<'de>>(d: D) -> std::result::Result<DegreeDistribution, D::Error> {
    let map = BTreeMap::<usize, f64>::deserialize(d)?;
    DegreeDistribution::edge(map).map_err(serde::de::Error::custom)
}
