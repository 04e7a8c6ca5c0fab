//! Ensemble-average BER curves in the infinite-length limit: exact density
//! evolution on the BEC and the Gaussian approximation on the BI-AWGN
//! channel.

use serde::Serialize;

use crate::channel::ChannelModel;
use crate::error::{Error, Result};
use crate::graph::degree::{DegreeDistribution, PolyPair};
use crate::scalar::{q_function, Real};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum DeKind {
    #[serde(rename = "DE (exact, BEC)")]
    ExactBec,
    #[serde(rename = "DE (Gaussian approx., AWGN)")]
    GaussianAwgn,
}

impl DeKind {
    pub fn label(&self) -> &'static str {
        match self {
            Self::ExactBec => "DE (exact, BEC)",
            Self::GaussianAwgn => "DE (Gaussian approx., AWGN)",
        }
    }
}

/// Per-iteration DE values for `t = 0..=l`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DeTrace<F> {
    pub kind: DeKind,
    pub channel: ChannelModel<F>,
    /// Variable-to-check message error (erasure) probability.
    pub message_error: Vec<F>,
    /// Bit error (erasure) probability of the marginal.
    pub ber: Vec<F>,
}

/// BEC density evolution: `x_t = eps * lambda(1 - rho(1 - x_{t-1}))`.
pub fn de_bec<F: Real>(
    var_dist: &DegreeDistribution,
    check_dist: &DegreeDistribution,
    epsilon: F,
    iterations: usize,
) -> Result<DeTrace<F>> {
    let channel = ChannelModel::bec(epsilon)?;
    let lhs = PolyPair::new(var_dist);
    let rhs = PolyPair::new(check_dist);
    let mut x = vec![epsilon];
    let mut ber = vec![epsilon];
    for t in 1..=iterations {
        let y = F::one() - rhs.edge_poly(F::one() - x[t - 1]);
        x.push(epsilon * lhs.edge_poly(y));
        ber.push(epsilon * lhs.node_poly(y));
    }
    Ok(DeTrace { kind: DeKind::ExactBec, channel, message_error: x, ber })
}

/// Upper end of the first regime of [`phi`]. Both regimes agree here to
/// machine precision.
pub const PHI_SWITCH: f64 = 14.394_352_942_168_46;

/// Two-regime approximation of `phi(x) = 1 - E[tanh(u/2)]`, `u ~ N(x, 2x)`.
pub fn phi<F: Real>(x: F) -> F {
    let xf = x.as_f64();
    let v = if xf <= 0.0 {
        1.0
    } else if xf <= PHI_SWITCH {
        (-0.4527 * xf.powf(0.86) + 0.0218).exp().min(1.0)
    } else {
        (std::f64::consts::PI / xf).sqrt() * (-xf / 4.0).exp() * (1.0 - 10.0 / (7.0 * xf))
    };
    F::lit(v)
}

/// Inverse of [`phi`] by bisection; `phi_inv(y) = 0` for `y >= 1`.
pub fn phi_inv<F: Real>(y: F) -> F {
    let y = y.as_f64();
    if y >= 1.0 {
        return F::zero();
    }
    let mut hi = 1.0;
    while phi(hi) > y {
        hi *= 2.0;
        if hi > 1e6 {
            return F::lit(hi);
        }
    }
    let mut lo = 0.0;
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if phi(mid) > y {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo <= 1e-14 * hi {
            break;
        }
    }
    F::lit(0.5 * (lo + hi))
}

/// Gaussian-approximation DE of the check-to-variable mean on the BI-AWGN
/// channel. The BER is `sum_d L_d Q(sqrt((m0 + d m_u) / 2))`, `m0 = 2/sigma2`.
pub fn ga_awgn<F: Real>(
    var_dist: &DegreeDistribution,
    check_dist: &DegreeDistribution,
    sigma2: F,
    iterations: usize,
) -> Result<DeTrace<F>> {
    let channel = ChannelModel::biawgn(sigma2)?;
    let lambda = var_dist.to_edge();
    let node = var_dist.to_node();
    let rho = check_dist.to_edge();
    if rho.min_degree() < 2 {
        return Err(Error::InvalidSpec("check degrees must be at least 2".into()));
    }
    let m0 = 2.0 / sigma2.as_f64();
    let q = |m: f64| q_function((m / 2.0).max(0.0).sqrt());
    let message_error_at = |mu: f64| lambda.iter().map(|(d, f)| f * q(m0 + (d - 1) as f64 * mu)).sum::<f64>();
    let ber_at = |mu: f64| node.iter().map(|(d, f)| f * q(m0 + d as f64 * mu)).sum::<f64>();
    let mut mu = 0.0;
    let mut message_error = vec![F::lit(message_error_at(mu))];
    let mut ber = vec![F::lit(ber_at(mu))];
    for _ in 0..iterations {
        let s: f64 = lambda.iter().map(|(d, f)| f * phi(m0 + (d - 1) as f64 * mu)).sum();
        mu = rho
            .iter()
            .map(|(d, f)| {
                let inner = -(((d - 1) as f64) * (-s).ln_1p()).exp_m1();
                f * phi_inv(inner)
            })
            .sum();
        message_error.push(F::lit(message_error_at(mu)));
        ber.push(F::lit(ber_at(mu)));
    }
    Ok(DeTrace { kind: DeKind::GaussianAwgn, channel, message_error, ber })
}
