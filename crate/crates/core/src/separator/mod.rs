//! Separator-tree reachability oracle.

mod band;
mod tree;

pub use band::Separation;
pub use tree::{
    build_separator_oracle, disk_separator, NodeSummary, RepChoice, SeparatorConfig, SeparatorNode,
    SeparatorOracle, SeparatorStats,
};
