//! Closed-form bounds for regular ensembles `LDPC(N, x^J, x^K)`.
//!
//! Counting formulas are evaluated exactly in integers. Bounds and weights
//! are real-valued and never rounded.

use serde::{Deserialize, Serialize};

use crate::channel::ChannelModel;
use crate::error::{Error, Result};
use crate::scalar::{log2_q_function, q_function, Real};

pub const DEFAULT_THETA1: f64 = 0.99;

/// `J`, `K`, `N`, iteration count `l` and the window constant `theta1`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RegularParams<F = f64> {
    pub j: usize,
    pub k: usize,
    pub n: usize,
    pub l: usize,
    pub theta1: F,
}

impl<F: Real> RegularParams<F> {
    pub fn new(j: usize, k: usize, n: usize, l: usize, theta1: F) -> Result<Self> {
        if j < 3 {
            return Err(Error::NotApplicable(format!("variable degree J = {j}; the closed form needs J >= 3")));
        }
        if k < 2 {
            return Err(Error::InvalidInput(format!("check degree K = {k} must be at least 2")));
        }
        if n == 0 || (n * j) % k != 0 {
            return Err(Error::InvalidSpec(format!("N*J = {} is not divisible by K = {k}", n * j)));
        }
        if !(theta1 > F::zero() && theta1 < F::one()) {
            return Err(Error::InvalidInput(format!("theta1 = {theta1} must lie in (0, 1)")));
        }
        Ok(Self { j, k, n, l, theta1 })
    }

    pub fn with_l(self, l: usize) -> Self {
        Self { l, ..self }
    }

    pub fn n_checks(&self) -> usize {
        self.n * self.j / self.k
    }
}

/// Which piece of the piecewise weight bound applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Regime {
    /// `l` inside the tree window: weight of a valid tree.
    ValidTree,
    /// Between the windows: tree-maximal count of distinct variables.
    DistinctCount,
    /// Neighborhood saturates the graph: `w = N`.
    Saturated,
    /// Irregular recursion with `l <= l1`.
    RecursionTight,
    /// Irregular recursion with `l > l1`.
    RecursionGeneral,
}

impl Regime {
    pub fn as_str(&self) -> &'static str {
        match self {
            Self::ValidTree => "valid_tree",
            Self::DistinctCount => "distinct_count",
            Self::Saturated => "saturated",
            Self::RecursionTight => "recursion_tight",
            Self::RecursionGeneral => "recursion_general",
        }
    }
}

fn pow_u128(base: u128, exp: usize) -> Result<u128> {
    let exp = u32::try_from(exp).map_err(|_| Error::Domain(format!("exponent {exp} too large")))?;
    base.checked_pow(exp).ok_or_else(|| Error::Domain(format!("{base}^{exp} overflows 128-bit integers")))
}

fn overflow() -> Error {
    Error::Domain("count overflows 128-bit integers".into())
}

/// Valid-tree counts `(V_k, C_k)`.
pub fn vt_counts(j: usize, k: usize) -> Result<(u128, u128)> {
    if j < 3 {
        return Err(Error::Domain(format!("J = {j} must be at least 3")));
    }
    let jj = j as u128;
    let v = jj.checked_mul(pow_u128(jj - 1, k / 2)?).ok_or_else(overflow)? - 2;
    let c = jj.checked_mul(pow_u128(jj - 1, k.div_ceil(2))?).ok_or_else(overflow)? - jj;
    Ok((v / (jj - 2), c / (jj - 2)))
}

/// Maximal distinct counts `(n*_k, m*_k)` in a depth-`k` neighborhood.
pub fn max_counts(j: usize, k_deg: usize, k: usize) -> Result<(u128, u128)> {
    if j < 2 || k_deg < 2 || (j == 2 && k_deg == 2) {
        return Err(Error::Domain(format!("degrees (J, K) = ({j}, {k_deg}) out of range")));
    }
    if k == 0 {
        return Ok((1, 0));
    }
    let (jj, kk) = (j as u128, k_deg as u128);
    let base = (jj - 1) * (kk - 1);
    let denom = base - 1;
    let h = k / 2;
    let n_star = jj
        .checked_mul(pow_u128(kk - 1, h + 1)?)
        .and_then(|x| x.checked_mul(pow_u128(jj - 1, h).ok()?))
        .ok_or_else(overflow)?
        - kk;
    let m_star = jj.checked_mul(pow_u128(base, k.div_ceil(2))?).ok_or_else(overflow)? - jj;
    Ok((n_star / denom, m_star / denom))
}

/// `theta1 * log_{(J-1)^5 (K-1)^3} N^2`.
pub fn tree_window<F: Real>(j: usize, k: usize, n: usize, theta1: F) -> Result<F> {
    let base = 5.0 * ((j as f64) - 1.0).ln() + 3.0 * ((k as f64) - 1.0).ln();
    if base <= 0.0 || !base.is_finite() {
        return Err(Error::Domain(format!("log base (J-1)^5 (K-1)^3 <= 1 for (J, K) = ({j}, {k})")));
    }
    Ok(theta1 * F::lit(2.0 * (n as f64).ln() / base))
}

/// `log_{(J-1)(K-1)}((1 - K/(J(K-1))) N)`.
pub fn saturation_window<F: Real>(j: usize, k: usize, n: usize) -> F {
    let (jf, kf) = (j as f64, k as f64);
    let inner = (1.0 - kf / (jf * (kf - 1.0))) * n as f64;
    F::lit(inner.ln() / ((jf - 1.0) * (kf - 1.0)).ln())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeightBound<F> {
    pub w: F,
    pub regime: Regime,
}

/// Piecewise upper bound on the expected minimum weight after `l` iterations.
pub fn weight_ub_regular<F: Real>(p: &RegularParams<F>) -> Result<WeightBound<F>> {
    let (jf, kf) = (F::from_count(p.j), F::from_count(p.k));
    let l = F::from_count(p.l);
    let two = F::lit(2.0);
    if l <= tree_window(p.j, p.k, p.n, p.theta1)? {
        let w = (jf * (jf - F::one()).powi(p.l as i32) - two) / (jf - two);
        return Ok(WeightBound { w, regime: Regime::ValidTree });
    }
    if l > saturation_window(p.j, p.k, p.n) {
        return Ok(WeightBound { w: F::from_count(p.n), regime: Regime::Saturated });
    }
    let li = p.l as i32;
    let num = jf * (kf - F::one()).powi(li + 1) * (jf - F::one()).powi(li) - kf;
    let den = (jf - F::one()) * (kf - F::one()) - F::one();
    Ok(WeightBound { w: num / den, regime: Regime::DistinctCount })
}

/// `log2` of the channel lower bound for minimum weight `w`.
pub fn log2_ber_lower_from_weight<F: Real>(ch: &ChannelModel<F>, w: F) -> Result<F> {
    if w < F::zero() || w.is_nan() {
        return Err(Error::Domain(format!("weight {w} must be non-negative")));
    }
    Ok(match *ch {
        ChannelModel::Bec { epsilon } => {
            if w == F::zero() {
                F::zero()
            } else {
                w * epsilon.log2()
            }
        }
        ChannelModel::Bsc { q } => (w + F::one()) / F::lit(2.0) * q.log2(),
        ChannelModel::Biawgn { sigma2 } => log2_q_function((w / sigma2).sqrt()),
    })
}

/// BER lower bound for minimum weight `w`: `eps^w`, `q^((w+1)/2)` or `Q(sqrt(w/sigma2))`.
pub fn ber_lower_from_weight<F: Real>(ch: &ChannelModel<F>, w: F) -> Result<F> {
    if let ChannelModel::Biawgn { sigma2 } = *ch {
        if w < F::zero() || w.is_nan() {
            return Err(Error::Domain(format!("weight {w} must be non-negative")));
        }
        return Ok(q_function((w / sigma2).sqrt()));
    }
    Ok(log2_ber_lower_from_weight(ch, w)?.exp2())
}

/// `e^{1/(pi+2)} / 4 * sqrt((pi+2)/pi)`.
pub fn chernoff_constant<F: Real>() -> F {
    let pi = F::PI();
    let two = F::lit(2.0);
    (F::one() / (pi + two)).exp() / F::lit(4.0) * ((pi + two) / pi).sqrt()
}

/// Lower bound `c e^{-x^2} <= Q(x)` for `x >= 0`.
pub fn chernoff_q_lb<F: Real>(x: F) -> Result<F> {
    if x < F::zero() || x.is_nan() {
        return Err(Error::Domain(format!("x = {x} must be non-negative")));
    }
    Ok(chernoff_constant::<F>() * (-x * x).exp())
}

/// `gamma = log2(-log2 p)` for `p` in (0, 1).
pub fn gamma<F: Real>(p: F) -> Result<F> {
    if !(p > F::zero() && p < F::one()) {
        return Err(Error::Domain(format!("p = {p} outside (0, 1)")));
    }
    Ok((-p.log2()).log2())
}

/// `gamma` from `log2 p`, usable when `p` itself underflows.
pub fn gamma_from_log2<F: Real>(log2_p: F) -> Result<F> {
    if !(log2_p < F::zero()) {
        return Err(Error::Domain(format!("log2 p = {log2_p} must be negative")));
    }
    Ok((-log2_p).log2())
}

/// One iteration count of a bound curve.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BoundPoint<F> {
    pub l: usize,
    pub regime: Regime,
    pub w_ub: F,
    pub p_lower: F,
    pub log2_p_lower: F,
    pub gamma_lower: Option<F>,
    /// AWGN only: the exponential relaxation `c e^{-w/sigma2}`.
    pub p_lower_relaxed: Option<F>,
    pub p_upper_lentmaier: Option<F>,
}

impl<F: Real> BoundPoint<F> {
    pub fn from_weight(ch: &ChannelModel<F>, l: usize, w_ub: F, regime: Regime) -> Result<Self> {
        let log2_p_lower = log2_ber_lower_from_weight(ch, w_ub)?;
        let p_lower = ber_lower_from_weight(ch, w_ub)?;
        let p_lower_relaxed = match *ch {
            ChannelModel::Biawgn { sigma2 } => Some(chernoff_q_lb((w_ub / sigma2).sqrt())?),
            _ => None,
        };
        Ok(Self {
            l,
            regime,
            w_ub,
            p_lower,
            log2_p_lower,
            gamma_lower: gamma_from_log2(log2_p_lower).ok(),
            p_lower_relaxed,
            p_upper_lentmaier: None,
        })
    }
}

/// Lower bound at one iteration count for a regular ensemble.
pub fn closed_form_lower<F: Real>(ch: &ChannelModel<F>, p: &RegularParams<F>) -> Result<BoundPoint<F>> {
    let wb = weight_ub_regular(p)?;
    BoundPoint::from_weight(ch, p.l, wb.w, wb.regime)
}

/// Bound values for a range of iteration counts.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundCurve<F> {
    pub channel: ChannelModel<F>,
    pub points: Vec<BoundPoint<F>>,
}

pub fn closed_form_curve<F: Real>(
    ch: &ChannelModel<F>,
    p: &RegularParams<F>,
    ls: impl IntoIterator<Item = usize>,
) -> Result<BoundCurve<F>> {
    let points = ls.into_iter().map(|l| closed_form_lower(ch, &p.with_l(l))).collect::<Result<_>>()?;
    Ok(BoundCurve { channel: *ch, points })
}

/// Upper-bound form `2^{-a0 (J-1)^l}`; `a0` is caller supplied or fitted.
pub fn lentmaier_upper<F: Real>(j: usize, l: usize, a0: F) -> F {
    (-a0 * F::from_count(j - 1).powi(l as i32)).exp2()
}

/// `gamma` of [`lentmaier_upper`]: `log2(a0) + l log2(J-1)`.
pub fn lentmaier_gamma<F: Real>(j: usize, l: usize, a0: F) -> F {
    a0.log2() + F::from_count(l) * F::from_count(j - 1).log2()
}

/// The `a0` that makes the upper form pass through `p_anchor` at `l_anchor`.
pub fn fit_a0<F: Real>(j: usize, l_anchor: usize, p_anchor: F) -> Result<F> {
    if !(p_anchor > F::zero() && p_anchor < F::one()) {
        return Err(Error::Domain(format!("anchor probability {p_anchor} outside (0, 1)")));
    }
    Ok(-p_anchor.log2() / F::from_count(j - 1).powi(l_anchor as i32))
}

/// Growth rates of `gamma` per iteration: `log2(J-1)` for the tree regime
/// and `log2((J-1)(K-1))` for the distinct-count regime.
pub fn dominant_exponents<F: Real>(j: usize, k: usize) -> (F, F) {
    (F::from_count(j - 1).log2(), F::from_count((j - 1) * (k - 1)).log2())
}

/// Lower bound on the probability that a random `(v, G)` has minimum weight
/// at most `V_{2l}`, floored at 0.
pub fn valid_tree_prob_lb<F: Real>(j: usize, k: usize, n: usize, l: usize) -> Result<F> {
    if j < 3 || k < 2 || (n * j) % k != 0 {
        return Err(Error::InvalidSpec(format!("(J, K, N) = ({j}, {k}, {n}) is not a valid regular ensemble")));
    }
    let window = saturation_window::<f64>(j, k, n);
    if !(l as f64 <= window) {
        return Err(Error::Regime(format!("l = {l} exceeds the window {window:.6}")));
    }
    let m = (n * j / k) as f64;
    let (n_star, m_star) = max_counts(j, k, 2 * l)?;
    let (v_next, c_next) = vt_counts(j, 2 * l + 2)?;
    let (ns, ms, vn, cn) = (n_star as f64, m_star as f64, v_next as f64, c_next as f64);
    let a = (1.0 - (ms + cn) / m).max(0.0);
    let b = (1.0 - (ns + vn) / n as f64).max(0.0);
    Ok(F::lit((a.powf(cn) * b.powf(vn)).max(0.0)))
}
