//! Floating point scalar abstraction.
//!
//! The analytic routines (bounds, recursions, density evolution) and the BP
//! decoder are written against [`Real`] so they run in either `f32` or `f64`.
//! Special functions without a generic implementation (`erfc`) round-trip
//! through `f64`.

use std::fmt::{Debug, Display, LowerExp};

use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};

/// Floating point number: `f32` or `f64`.
pub trait Real:
    Float + FloatConst + FromPrimitive + ToPrimitive + Debug + Display + LowerExp + Default + Send + Sync + 'static
{
    /// Converts an `f64` constant into this type.
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal is representable")
    }

    fn from_count(n: usize) -> Self {
        Self::from_usize(n).expect("count is representable")
    }

    fn as_f64(self) -> f64 {
        self.to_f64().expect("float converts to f64")
    }
}

impl Real for f32 {}
impl Real for f64 {}

/// Gaussian tail probability `Q(x) = P(Z > x)`.
pub fn q_function<F: Real>(x: F) -> F {
    F::lit(0.5 * libm::erfc(x.as_f64() / std::f64::consts::SQRT_2))
}

/// `log2 Q(x)`, accurate far into the tail where `Q(x)` underflows.
pub fn log2_q_function<F: Real>(x: F) -> F {
    let xf = x.as_f64();
    let q = 0.5 * libm::erfc(xf / std::f64::consts::SQRT_2);
    if q > 1e-280 {
        return F::lit(q.log2());
    }
    // Asymptotic expansion of the Mills ratio.
    let x2 = xf * xf;
    let series = 1.0 - 1.0 / x2 + 3.0 / (x2 * x2) - 15.0 / (x2 * x2 * x2);
    let ln_q = -0.5 * x2 - (xf * (2.0 * std::f64::consts::PI).sqrt()).ln() + series.ln();
    F::lit(ln_q / std::f64::consts::LN_2)
}
