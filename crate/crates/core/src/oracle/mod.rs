//! Exact minimum-weight computations on small neighborhoods.

pub mod gf2;
pub mod valid_tree;

pub use gf2::{
    expected_min_weight_mc, local_system, min_weight_root_one, Gf2System, MinWeight, MinWeightSummary, SampleOutcome,
    MAX_FREE_DIMENSION,
};
pub use valid_tree::{valid_tree_search, ValidTree};
