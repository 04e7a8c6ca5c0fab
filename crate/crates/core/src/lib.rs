//! Iteration-limited BER lower bounds for LDPC code ensembles, together
//! with the tools to check them: flooding BP simulation, density evolution,
//! a distance recursion for irregular ensembles and exact minimum-weight
//! oracles on small neighborhoods.
//!
//! Analytic routines are generic over [`Real`] (`f32` or `f64`); the
//! aliases below fix the scalar to `f64`.

pub mod ber;
pub mod bp;
pub mod channel;
pub mod density;
pub mod error;
pub mod graph;
pub mod oracle;
pub mod recursion;
pub mod regular;
pub mod rng;
pub mod scalar;

pub use error::{Error, Result};
pub use scalar::Real;

pub type Channel64 = channel::ChannelModel<f64>;
pub type BoundCurve64 = regular::BoundCurve<f64>;
pub type BoundPoint64 = regular::BoundPoint<f64>;
pub type DeTrace64 = density::DeTrace<f64>;
pub type RecursionTrace64 = recursion::RecursionTrace<f64>;
pub type TailDistribution64 = recursion::TailDistribution<f64>;
pub type BerEstimate64 = ber::BerEstimate<f64>;
pub type RegularParams64 = regular::RegularParams<f64>;
