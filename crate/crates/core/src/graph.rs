//! Explicit transmission graphs and the brute-force reference oracle.

use std::collections::{BTreeSet, VecDeque};

use fixedbitset::FixedBitSet;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::grid::GridIndex;
use crate::point_set::{PointSet, RawPoint};
use crate::VertexId;

/// Directed graph with sorted, duplicate-free out-adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransmissionGraph {
    out: Vec<Vec<VertexId>>,
    m: usize,
}

impl TransmissionGraph {
    pub fn from_adjacency(mut out: Vec<Vec<VertexId>>) -> Self {
        for list in &mut out {
            list.sort_unstable();
            list.dedup();
        }
        let m = out.iter().map(Vec::len).sum();
        Self { out, m }
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (VertexId, VertexId)>) -> Self {
        let mut out = vec![Vec::new(); n];
        for (u, v) in edges {
            out[u as usize].push(v);
        }
        Self::from_adjacency(out)
    }

    pub fn n(&self) -> usize {
        self.out.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn out(&self, v: VertexId) -> &[VertexId] {
        &self.out[v as usize]
    }

    pub fn adjacency(&self) -> &[Vec<VertexId>] {
        &self.out
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.out[u as usize].binary_search(&v).is_ok()
    }

    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().map(move |&v| (u as VertexId, v)))
    }

    pub fn transpose(&self) -> Vec<Vec<VertexId>> {
        let mut rev = vec![Vec::new(); self.n()];
        for (u, v) in self.edges() {
            rev[v as usize].push(u);
        }
        rev
    }

    fn check(&self, v: VertexId) -> Result<()> {
        if (v as usize) < self.n() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: v as usize,
                n: self.n(),
            })
        }
    }

    /// All vertices reachable from `s`, including `s`.
    pub fn reach_set(&self, s: VertexId) -> FixedBitSet {
        bfs(&self.out, s, None)
    }
}

/// Breadth-first search from `s`, optionally restricted to vertices in `mask`.
/// The start vertex is always included.
pub fn bfs(adj: &[Vec<VertexId>], s: VertexId, mask: Option<&FixedBitSet>) -> FixedBitSet {
    let mut seen = FixedBitSet::with_capacity(adj.len());
    let mut queue = VecDeque::new();
    seen.insert(s as usize);
    queue.push_back(s);
    while let Some(u) = queue.pop_front() {
        for &v in &adj[u as usize] {
            let vi = v as usize;
            if seen.contains(vi) || mask.is_some_and(|m| !m.contains(vi)) {
                continue;
            }
            seen.insert(vi);
            queue.push_back(v);
        }
    }
    seen
}

/// Hop distances from `s` (`u32::MAX` for unreachable vertices).
pub fn bfs_hops(adj: &[Vec<VertexId>], s: VertexId) -> Vec<u32> {
    let mut dist = vec![u32::MAX; adj.len()];
    let mut queue = VecDeque::new();
    dist[s as usize] = 0;
    queue.push_back(s);
    while let Some(u) = queue.pop_front() {
        let d = dist[u as usize] + 1;
        for &v in &adj[u as usize] {
            if dist[v as usize] == u32::MAX {
                dist[v as usize] = d;
                queue.push_back(v);
            }
        }
    }
    dist
}

/// Exact transmission graph via grid bucketing.
///
/// For each vertex `p` only the cells of the level-`ceil(log2 r_p)` grid that
/// meet the bounding box of `D(p)` are scanned.
pub fn enumerate_edges(ps: &PointSet) -> TransmissionGraph {
    let levels: BTreeSet<u32> = ps.ids().map(|v| ps.radius_level(v)).collect();
    let max_level = levels.iter().next_back().copied().unwrap_or(0);
    let mut grids: Vec<Option<GridIndex>> = vec![None; max_level as usize + 1];
    for &l in &levels {
        grids[l as usize] = Some(GridIndex::build(ps, l));
    }
    let dim = ps.dim();
    let out = ps
        .ids()
        .map(|p| {
            let grid = grids[ps.radius_level(p) as usize].as_ref().unwrap();
            let c = ps.raw_pos(p);
            let r = ps.raw_radius(p);
            let lo = ps.cell_of_point(
                [c[0] - r, if dim == 1 { 0 } else { c[1] - r }],
                grid.level(),
            );
            let hi = ps.cell_of_point(
                [c[0] + r, if dim == 1 { 0 } else { c[1] + r }],
                grid.level(),
            );
            let mut list = Vec::new();
            for cx in lo.0..=hi.0 {
                for cy in lo.1..=hi.1 {
                    list.extend(
                        grid.bucket((cx, cy))
                            .iter()
                            .copied()
                            .filter(|&q| q != p && ps.covers(p, q)),
                    );
                }
            }
            list
        })
        .collect();
    TransmissionGraph::from_adjacency(out)
}

/// Quadratic all-pairs construction, straight from the edge definition.
pub fn enumerate_edges_naive(ps: &PointSet) -> TransmissionGraph {
    let out = ps
        .ids()
        .map(|p| ps.ids().filter(|&q| q != p && ps.covers(p, q)).collect())
        .collect();
    TransmissionGraph::from_adjacency(out)
}

/// Does `s` reach `t`? Every vertex reaches itself.
pub fn brute_reach(g: &TransmissionGraph, s: VertexId, t: VertexId) -> Result<bool> {
    g.check(s)?;
    g.check(t)?;
    Ok(s == t || g.reach_set(s).contains(t as usize))
}

/// Does `s` reach the point `q` (input units), i.e. some `t` reachable from `s` with `|tq| <= r_t`?
pub fn brute_geo_reach(
    ps: &PointSet,
    g: &TransmissionGraph,
    s: VertexId,
    q: &[f64],
) -> Result<bool> {
    g.check(s)?;
    let q = ps.quantize(q)?;
    Ok(geo_reach_raw(ps, &g.reach_set(s), q))
}

/// Geometric reachability given a precomputed reach set of the source.
pub fn geo_reach_raw(ps: &PointSet, reach: &FixedBitSet, q: RawPoint) -> bool {
    reach.ones().any(|t| ps.covers_point(t as VertexId, q))
}

/// Reach sets of every vertex, computed in parallel.
pub fn all_pairs_reach(g: &TransmissionGraph) -> Vec<FixedBitSet> {
    (0..g.n() as VertexId)
        .into_par_iter()
        .map(|s| g.reach_set(s))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn running_instance() -> PointSet {
        PointSet::from_points(1, [([0.0], 1.0), ([2.0], 3.0), ([3.0], 1.0)]).unwrap()
    }

    #[test]
    fn running_instance_edges() {
        let g = enumerate_edges(&running_instance());
        let edges: Vec<_> = g.edges().collect();
        // 1-based {2->1, 2->3, 3->2}
        assert_eq!(edges, vec![(1, 0), (1, 2), (2, 1)]);
        assert_eq!(g, enumerate_edges_naive(&running_instance()));
    }

    #[test]
    fn trivial_graphs() {
        let one = PointSet::from_points(2, [([1.0, 1.0], 1.0)]).unwrap();
        assert_eq!(enumerate_edges(&one).m(), 0);
        let two = PointSet::from_points(2, [([1.0, 1.0], 1.0), ([1.0, 1.0], 1.0)]).unwrap();
        let g = enumerate_edges(&two);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 0)]);
    }

    #[test]
    fn brute_reachability() {
        let ps = running_instance();
        let g = enumerate_edges(&ps);
        assert!(brute_reach(&g, 0, 0).unwrap());
        assert!(brute_reach(&g, 1, 0).unwrap());
        assert!(!brute_reach(&g, 0, 1).unwrap());
        assert!(matches!(
            brute_reach(&g, 0, 3),
            Err(Error::IndexOutOfRange { index: 3, n: 3 })
        ));

        let single = TransmissionGraph::from_edges(2, [(1, 0)]);
        assert!(brute_reach(&single, 1, 0).unwrap());
        assert!(!brute_reach(&single, 0, 1).unwrap());
    }

    #[test]
    fn brute_geometric_reachability() {
        let ps = running_instance();
        let g = enumerate_edges(&ps);
        assert!(brute_geo_reach(&ps, &g, 1, &[2.0]).unwrap());
        assert!(brute_geo_reach(&ps, &g, 1, &[-0.9]).unwrap());
        assert!(!brute_geo_reach(&ps, &g, 0, &[1.5]).unwrap());
        assert!(matches!(
            brute_geo_reach(&ps, &g, 0, &[1.0, 2.0]),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn hop_distances() {
        let g = TransmissionGraph::from_edges(4, [(0, 1), (1, 2), (0, 2)]);
        assert_eq!(bfs_hops(g.adjacency(), 0), vec![0, 1, 1, u32::MAX]);
    }
}
