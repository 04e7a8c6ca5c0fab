//! Binary-input memoryless channels and their LLR maps.

use rand::Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rng::rng_from_seed;
use crate::scalar::Real;

/// Channel used for transmission, tagged by `kind` in JSON.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum ChannelModel<F = f64> {
    Bec { epsilon: F },
    Bsc { q: F },
    Biawgn { sigma2: F },
}

impl<F: Real> ChannelModel<F> {
    pub fn bec(epsilon: F) -> Result<Self> {
        Self::Bec { epsilon }.validated()
    }

    pub fn bsc(q: F) -> Result<Self> {
        Self::Bsc { q }.validated()
    }

    pub fn biawgn(sigma2: F) -> Result<Self> {
        Self::Biawgn { sigma2 }.validated()
    }

    /// Checks the parameter range of the variant.
    pub fn validated(self) -> Result<Self> {
        let ok = match self {
            Self::Bec { epsilon } => epsilon >= F::zero() && epsilon <= F::one(),
            Self::Bsc { q } => q > F::zero() && q < F::lit(0.5),
            Self::Biawgn { sigma2 } => sigma2 > F::zero() && sigma2.is_finite(),
        };
        if ok {
            Ok(self)
        } else {
            Err(Error::InvalidInput(format!("channel parameter out of range: {self:?}")))
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Self::Bec { .. } => "bec",
            Self::Bsc { .. } => "bsc",
            Self::Biawgn { .. } => "biawgn",
        }
    }

    /// Magnitude of a BSC channel LLR, `ln((1-q)/q)`.
    pub fn bsc_llr(q: F) -> F {
        ((F::one() - q) / q).ln()
    }

    /// LLR of one received symbol for transmitted bit `bit`.
    pub fn sample_llr<R: Rng + ?Sized>(&self, bit: u8, rng: &mut R) -> F {
        let sign = if bit == 0 { F::one() } else { -F::one() };
        match *self {
            Self::Bec { epsilon } => {
                if rng.random::<f64>() < epsilon.as_f64() {
                    F::zero()
                } else {
                    sign * F::infinity()
                }
            }
            Self::Bsc { q } => {
                let flipped = rng.random::<f64>() < q.as_f64();
                let mag = Self::bsc_llr(q);
                if flipped {
                    -sign * mag
                } else {
                    sign * mag
                }
            }
            Self::Biawgn { sigma2 } => {
                let noise: f64 = rng.sample(StandardNormal);
                let y = sign + F::lit(noise) * sigma2.sqrt();
                F::lit(2.0) * y / sigma2
            }
        }
    }

    /// Sends `codeword` through the channel with a caller-owned generator.
    pub fn transmit_with<R: Rng + ?Sized>(&self, codeword: &[u8], rng: &mut R) -> Vec<F> {
        codeword.iter().map(|&b| self.sample_llr(b, rng)).collect()
    }

    /// Sends `codeword` through the channel; deterministic per seed.
    pub fn transmit(&self, codeword: &[u8], seed: u64) -> Vec<F> {
        self.transmit_with(codeword, &mut rng_from_seed(seed))
    }

    /// Fills `out` with channel LLRs for the all-zero codeword.
    pub fn transmit_zero_into<R: Rng + ?Sized>(&self, out: &mut [F], rng: &mut R) {
        for x in out.iter_mut() {
            *x = self.sample_llr(0, rng);
        }
    }
}

/// Noise variance for BPSK at a given `Eb/N0` (dB) and code rate.
pub fn eb_n0_to_sigma2<F: Real>(eb_n0_db: F, rate: F) -> Result<F> {
    if !(rate > F::zero() && rate < F::one()) {
        return Err(Error::InvalidInput(format!("code rate {rate} outside (0, 1)")));
    }
    let linear = F::lit(10.0).powf(eb_n0_db / F::lit(10.0));
    Ok(F::one() / (F::lit(2.0) * rate * linear))
}
