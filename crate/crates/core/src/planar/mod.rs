//! Reachability for radius ratio below `sqrt(3)` via planarization.

mod dot;
pub mod geometry;
mod oracle;
mod plane;
mod sparse;

pub use dot::{plane_dot, sparse_dot};
pub use oracle::{
    build_planar_oracle, build_planar_oracle_with, PlanarOptions, PlanarOracle, PlanarStats,
};
pub use plane::{planarize, resolve_crossings, verify_plane, PlaneCheck, PlaneEdge, PlaneGraph};
pub use sparse::{
    emst, reach_equiv_check, sparsify, EdgeKind, SparseEdge, SparseGraph, NEIGHBORHOOD_RADIUS,
};
