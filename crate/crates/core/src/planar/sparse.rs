//! Sparse subgraph `H` of the transmission graph with the same reachability.
//!
//! Inside every nonempty level-0 cell the points form a clique; they are
//! connected by both orientations of their Euclidean minimum spanning tree.
//! Between a cell and each cell of its 7 x 7 neighborhood, one transmission
//! edge is kept if any exists.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{all_pairs_reach, enumerate_edges, TransmissionGraph};
use crate::grid::{CellId, GridIndex};
use crate::point_set::PointSet;
use crate::VertexId;

/// Half-width of the neighborhood block, in cells.
pub const NEIGHBORHOOD_RADIUS: i64 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeKind {
    Emst,
    InterCell,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SparseEdge {
    pub source: VertexId,
    pub target: VertexId,
    pub kind: EdgeKind,
}

#[derive(Debug, Clone)]
pub struct SparseGraph {
    n: usize,
    /// Sorted by (source, target).
    edges: Vec<SparseEdge>,
    inter_cell: BTreeMap<(CellId, CellId), (VertexId, VertexId)>,
    nonempty_cells: usize,
}

impl SparseGraph {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[SparseEdge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn nonempty_cells(&self) -> usize {
        self.nonempty_cells
    }

    /// The kept edge per ordered pair of neighboring cells.
    pub fn inter_cell(&self) -> &BTreeMap<(CellId, CellId), (VertexId, VertexId)> {
        &self.inter_cell
    }

    pub fn emst_edge_count(&self) -> usize {
        self.edges
            .iter()
            .filter(|e| e.kind == EdgeKind::Emst)
            .count()
    }

    pub fn to_graph(&self) -> TransmissionGraph {
        TransmissionGraph::from_edges(self.n, self.edges.iter().map(|e| (e.source, e.target)))
    }

    /// Copy with one directed edge removed; used to build mutants.
    pub fn without_edge(&self, source: VertexId, target: VertexId) -> Self {
        let mut h = self.clone();
        h.edges.retain(|e| (e.source, e.target) != (source, target));
        h
    }

    /// Builds a sparse graph from raw edges (all tagged inter-cell).
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (VertexId, VertexId)>) -> Self {
        let mut edges: Vec<SparseEdge> = edges
            .into_iter()
            .map(|(source, target)| SparseEdge {
                source,
                target,
                kind: EdgeKind::InterCell,
            })
            .collect();
        edges.sort_by_key(|e| (e.source, e.target));
        edges.dedup_by_key(|e| (e.source, e.target));
        Self {
            n,
            edges,
            inter_cell: BTreeMap::new(),
            nonempty_cells: 0,
        }
    }
}

/// EMST of a small point group by `O(k^2)` Prim. Ties in length are broken
/// by the smaller `(min id, max id)` pair. Returns undirected pairs.
pub fn emst(ps: &PointSet, pts: &[VertexId]) -> Vec<(VertexId, VertexId)> {
    let k = pts.len();
    if k < 2 {
        return Vec::new();
    }
    let key = |u: VertexId, v: VertexId| (ps.dist2(u, v), u.min(v), u.max(v));
    let mut in_tree = vec![false; k];
    in_tree[0] = true;
    let mut best: Vec<(i128, VertexId, VertexId)> = pts.iter().map(|&v| key(pts[0], v)).collect();
    let mut out = Vec::with_capacity(k - 1);
    for _ in 1..k {
        let j = (0..k)
            .filter(|&j| !in_tree[j])
            .min_by_key(|&j| best[j])
            .unwrap();
        in_tree[j] = true;
        out.push((best[j].1, best[j].2));
        for i in 0..k {
            if !in_tree[i] {
                let cand = key(pts[j], pts[i]);
                if cand < best[i] {
                    best[i] = cand;
                }
            }
        }
    }
    out
}

pub fn sparsify(ps: &PointSet) -> Result<SparseGraph> {
    if ps.dim() != 2 {
        return Err(Error::WrongDimension {
            expected: 2,
            found: ps.dim(),
        });
    }
    let grid = GridIndex::build(ps, 0);
    let mut edges = Vec::new();
    let mut inter_cell = BTreeMap::new();
    for sigma in grid.sorted_cells() {
        let here = grid.bucket(sigma);
        for (u, v) in emst(ps, here) {
            for (source, target) in [(u, v), (v, u)] {
                edges.push(SparseEdge {
                    source,
                    target,
                    kind: EdgeKind::Emst,
                });
            }
        }
        for dx in -NEIGHBORHOOD_RADIUS..=NEIGHBORHOOD_RADIUS {
            for dy in -NEIGHBORHOOD_RADIUS..=NEIGHBORHOOD_RADIUS {
                if (dx, dy) == (0, 0) {
                    continue;
                }
                let tau = (sigma.0 + dx, sigma.1 + dy);
                let there = grid.bucket(tau);
                let best = here
                    .iter()
                    .flat_map(|&p| there.iter().map(move |&q| (p, q)))
                    .filter(|&(p, q)| ps.covers(p, q))
                    .min_by_key(|&(p, q)| (ps.dist2(p, q), p, q));
                if let Some((source, target)) = best {
                    inter_cell.insert((sigma, tau), (source, target));
                    edges.push(SparseEdge {
                        source,
                        target,
                        kind: EdgeKind::InterCell,
                    });
                }
            }
        }
    }
    edges.sort_by_key(|e| (e.source, e.target));
    Ok(SparseGraph {
        n: ps.len(),
        edges,
        inter_cell,
        nonempty_cells: grid.num_cells(),
    })
}

/// True iff `h` and the transmission graph of `ps` have identical all-pairs reachability.
pub fn reach_equiv_check(ps: &PointSet, h: &SparseGraph) -> bool {
    let g = enumerate_edges(ps);
    all_pairs_reach(&g) == all_pairs_reach(&h.to_graph())
}
