//! Common query interface shared by every oracle.

use crate::error::Result;
use crate::graph::{brute_reach, TransmissionGraph};
use crate::point_set::PointSet;
use crate::VertexId;

/// A standard reachability oracle over the vertices of a transmission graph.
pub trait ReachabilityOracle: Send + Sync {
    fn num_vertices(&self) -> usize;

    /// Does `s` reach `t`?
    fn reaches(&self, s: VertexId, t: VertexId) -> Result<bool>;

    /// Rough heap footprint of the query structures, in bytes.
    fn heap_bytes(&self) -> usize;
}

/// Reference oracle: a BFS on the explicit transmission graph per query.
#[derive(Debug, Clone)]
pub struct BruteOracle {
    graph: TransmissionGraph,
}

impl BruteOracle {
    pub fn new(ps: &PointSet) -> Self {
        Self {
            graph: crate::graph::enumerate_edges(ps),
        }
    }

    pub fn from_graph(graph: TransmissionGraph) -> Self {
        Self { graph }
    }

    pub fn graph(&self) -> &TransmissionGraph {
        &self.graph
    }
}

impl ReachabilityOracle for BruteOracle {
    fn num_vertices(&self) -> usize {
        self.graph.n()
    }

    fn reaches(&self, s: VertexId, t: VertexId) -> Result<bool> {
        brute_reach(&self.graph, s, t)
    }

    fn heap_bytes(&self) -> usize {
        self.graph.n() * std::mem::size_of::<Vec<VertexId>>() + self.graph.m() * 4
    }
}
