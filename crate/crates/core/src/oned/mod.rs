//! Geometric reachability oracle for 1D transmission graphs: SCCs without
//! materializing the graph, a laminar tree of SCC intervals, sibling
//! reachpoint sweeps, and constant-time queries.

mod laminar;
mod oracle;
mod scc;

pub use laminar::{
    build_laminar_tree, compute_reachpoints, scc_intervals, LaminarTree, Reachpoints, Scc1D,
};
pub use oracle::{build_oracle_1d, Oracle1D};
pub use scc::scc_1d;
