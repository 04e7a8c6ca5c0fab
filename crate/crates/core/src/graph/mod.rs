//! Tanner graphs, degree distributions and the ensembles built from them.

pub mod alist;
pub mod degree;
pub mod ensemble;
pub mod neighborhood;
pub mod peg;
pub mod sample;
pub mod tanner;

pub use alist::{load_alist, parse_alist, save_alist, to_alist};
pub use degree::{DegreeDistribution, Perspective};
pub use ensemble::{DegreeSequences, EnsembleSpec};
pub use neighborhood::{neighborhood, NeighborhoodView};
pub use peg::peg_construct;
pub use sample::{sample_configuration, sample_graph, sample_graph_with_stats, SampledGraph, MAX_ATTEMPTS};
pub use tanner::{Distances, Node, TannerGraph};
