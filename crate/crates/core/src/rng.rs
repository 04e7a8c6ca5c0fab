//! Seed derivation for reproducible parallel Monte Carlo.
//!
//! Every independent unit of work (a trial, a graph instance, a sample) gets
//! its own generator seeded from `(master_seed, stream, index)`, so results
//! do not depend on scheduling or worker count.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type SimRng = ChaCha8Rng;

/// Stream tags keep per-purpose seeds disjoint for the same master seed.
pub mod stream {
    pub const GRAPH: u64 = 0x4752_4150_4800_0001;
    pub const CHANNEL: u64 = 0x4348_414e_0000_0002;
    pub const VERTEX: u64 = 0x5645_5254_0000_0003;
    pub const PAIRS: u64 = 0x5041_4952_0000_0004;
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Hashes `(master, stream, index)` into a 64-bit seed.
pub fn derive_seed(master: u64, stream: u64, index: u64) -> u64 {
    splitmix64(splitmix64(splitmix64(master) ^ stream) ^ index)
}

pub fn rng_from_seed(seed: u64) -> SimRng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn derived_rng(master: u64, stream: u64, index: u64) -> SimRng {
    rng_from_seed(derive_seed(master, stream, index))
}
