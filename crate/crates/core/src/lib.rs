//! Reachability oracles for transmission graphs of disk systems.
//!
//! A transmission graph has one vertex per point and a directed edge `p -> q`
//! whenever `|pq| <= r_p`. This crate builds the explicit graph (for
//! reference), a 1D geometric oracle, and three 2D standard oracles: a
//! planarization oracle for radius ratio below `sqrt(3)`, a separator-tree
//! oracle, and a randomized sampling oracle.

pub mod area;
pub mod closure;
mod error;
pub mod gen;
pub mod graph;
pub mod grid;
pub mod instance;
pub mod oned;
pub mod oracle;
pub mod planar;
pub mod point_set;
pub mod sample;
pub mod scc;
pub mod separator;

pub use error::{Error, Result};
pub use graph::{brute_geo_reach, brute_reach, enumerate_edges, TransmissionGraph};
pub use oned::{build_oracle_1d, Oracle1D};
pub use oracle::{BruteOracle, ReachabilityOracle};
pub use planar::{build_planar_oracle, PlanarOracle};
pub use point_set::PointSet;
pub use sample::{build_sample_oracle, SampleOracle};
pub use separator::{build_separator_oracle, SeparatorConfig, SeparatorOracle};

/// Vertex ids are input-order indices.
pub type VertexId = u32;
