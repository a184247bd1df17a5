use crate::closure::ReachClosure;
use crate::error::{Error, Result};
use crate::oracle::ReachabilityOracle;
use crate::planar::plane::{planarize, resolve_crossings, PlaneGraph};
use crate::planar::sparse::sparsify;
use crate::point_set::PointSet;
use crate::scc::condense_adjacency;
use crate::VertexId;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct PlanarOptions {
    /// Experimental: planarize for `sqrt(3) <= Ψ <= 2` too. Answers are not
    /// guaranteed in that range; use it only to look for mismatches.
    pub allow_psi_up_to_two: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PlanarStats {
    pub n: usize,
    pub nonempty_cells: usize,
    pub sparse_edges: usize,
    pub emst_edges: usize,
    pub crossing_pairs: usize,
    pub plane_vertices: usize,
    pub plane_edges: usize,
    pub components: usize,
}

/// Standard reachability oracle for `Ψ < sqrt(3)`: the plane graph obtained by
/// sparsifying and resolving crossings, its condensation, and packed closure
/// rows over the components that hold original vertices.
#[derive(Debug, Clone)]
pub struct PlanarOracle {
    plane: PlaneGraph,
    component: Vec<u32>,
    closure: ReachClosure,
    stats: PlanarStats,
}

pub fn build_planar_oracle(ps: &PointSet) -> Result<PlanarOracle> {
    build_planar_oracle_with(ps, PlanarOptions::default())
}

pub fn build_planar_oracle_with(ps: &PointSet, opts: PlanarOptions) -> Result<PlanarOracle> {
    if ps.dim() != 2 {
        return Err(Error::WrongDimension {
            expected: 2,
            found: ps.dim(),
        });
    }
    let h = sparsify(ps)?;
    let plane = if opts.allow_psi_up_to_two {
        if !ps.psi_at_most_two() {
            return Err(Error::PsiTooLarge { psi: ps.psi() });
        }
        planarize(ps, &h)?
    } else {
        resolve_crossings(ps, &h)?
    };
    let cond = condense_adjacency(&plane.adjacency());
    let component: Vec<u32> = ps.ids().map(|v| cond.component(v)).collect();
    let mut tracked = component.clone();
    tracked.sort_unstable();
    tracked.dedup();
    let closure = ReachClosure::build(&cond, &tracked, &tracked);
    let stats = PlanarStats {
        n: ps.len(),
        nonempty_cells: h.nonempty_cells(),
        sparse_edges: h.edge_count(),
        emst_edges: h.emst_edge_count(),
        crossing_pairs: plane.crossing_pairs(),
        plane_vertices: plane.num_vertices(),
        plane_edges: plane.edges().len(),
        components: cond.count(),
    };
    Ok(PlanarOracle {
        plane,
        component,
        closure,
        stats,
    })
}

impl PlanarOracle {
    pub fn plane(&self) -> &PlaneGraph {
        &self.plane
    }

    pub fn stats(&self) -> PlanarStats {
        self.stats
    }

    pub fn query(&self, s: VertexId, t: VertexId) -> Result<bool> {
        let n = self.component.len();
        for v in [s, t] {
            if v as usize >= n {
                return Err(Error::IndexOutOfRange {
                    index: v as usize,
                    n,
                });
            }
        }
        Ok(self
            .closure
            .reaches(self.component[s as usize], self.component[t as usize]))
    }
}

impl ReachabilityOracle for PlanarOracle {
    fn num_vertices(&self) -> usize {
        self.component.len()
    }

    fn reaches(&self, s: VertexId, t: VertexId) -> Result<bool> {
        self.query(s, t)
    }

    fn heap_bytes(&self) -> usize {
        self.component.len() * 4 + self.closure.heap_bytes()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{brute_reach, enumerate_edges};

    #[test]
    fn mutual_pair() {
        let ps = PointSet::from_points(2, [([0.0, 0.0], 1.0), ([0.9, 0.0], 1.0)]).unwrap();
        let o = build_planar_oracle(&ps).unwrap();
        for s in 0..2 {
            for t in 0..2 {
                assert!(o.query(s, t).unwrap());
            }
        }
        assert!(matches!(o.query(0, 2), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn one_way_chain() {
        // Each disk reaches the next one to the right, never back.
        let pts: Vec<([f64; 2], f64)> = (0..6)
            .map(|i| ([1.5 * i as f64, 0.0], if i % 2 == 0 { 1.6 } else { 1.0 }))
            .collect();
        let ps = PointSet::from_points(2, pts).unwrap();
        let g = enumerate_edges(&ps);
        let o = build_planar_oracle(&ps).unwrap();
        for s in ps.ids() {
            for t in ps.ids() {
                assert_eq!(
                    o.query(s, t).unwrap(),
                    brute_reach(&g, s, t).unwrap(),
                    "{s} {t}"
                );
            }
        }
        assert!(o.query(0, 1).unwrap());
        assert!(!o.query(1, 0).unwrap());
    }

    #[test]
    fn refuses_large_ratio_unless_experimental() {
        let ps = PointSet::from_points(2, [([0.0, 0.0], 1.0), ([1.0, 0.0], 2.0)]).unwrap();
        assert!(matches!(
            build_planar_oracle(&ps),
            Err(Error::PsiTooLarge { .. })
        ));
        let opts = PlanarOptions {
            allow_psi_up_to_two: true,
        };
        let o = build_planar_oracle_with(&ps, opts).unwrap();
        assert!(o.query(1, 0).unwrap());
    }
}
