use crate::error::{Error, Result};
use crate::oned::laminar::{build_laminar_tree, compute_reachpoints, scc_intervals};
use crate::oned::scc::scc_1d;
use crate::oracle::ReachabilityOracle;
use crate::point_set::PointSet;
use crate::VertexId;

/// Geometric reachability oracle for 1D transmission graphs.
///
/// Stores one SCC label per vertex and the reach interval `[lr, rr]` per SCC.
/// A vertex reaches a point iff the point lies in the interval of its SCC.
#[derive(Debug, Clone)]
pub struct Oracle1D {
    component: Vec<u32>,
    lr: Vec<i64>,
    rr: Vec<i64>,
    pos: Vec<i64>,
    unit: i64,
}

pub fn build_oracle_1d(ps: &PointSet) -> Result<Oracle1D> {
    let part = scc_1d(ps)?;
    let tree = build_laminar_tree(scc_intervals(ps, &part))?;
    let reach = compute_reachpoints(&tree);
    Ok(Oracle1D {
        component: part.component,
        lr: reach.iter().map(|r| r.lr).collect(),
        rr: reach.iter().map(|r| r.rr).collect(),
        pos: ps.ids().map(|v| ps.raw_pos(v)[0]).collect(),
        unit: ps.unit(),
    })
}

impl Oracle1D {
    pub fn len(&self) -> usize {
        self.component.len()
    }

    pub fn is_empty(&self) -> bool {
        self.component.is_empty()
    }

    pub fn num_components(&self) -> usize {
        self.lr.len()
    }

    pub fn component(&self, v: VertexId) -> u32 {
        self.component[v as usize]
    }

    /// Reach interval of the SCC of `s`, in micro-units.
    pub fn reach_interval(&self, s: VertexId) -> (i64, i64) {
        let c = self.component[s as usize] as usize;
        (self.lr[c], self.rr[c])
    }

    fn check(&self, v: VertexId) -> Result<()> {
        if (v as usize) < self.len() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: v as usize,
                n: self.len(),
            })
        }
    }

    /// Does `s` reach the point `q`, given in micro-units?
    pub fn query_raw(&self, s: VertexId, q: i64) -> Result<bool> {
        self.check(s)?;
        let c = self.component[s as usize] as usize;
        Ok(self.lr[c] <= q && q <= self.rr[c])
    }

    /// Does `s` reach the point `q`, given in input units?
    pub fn query(&self, s: VertexId, q: f64) -> Result<bool> {
        let q = crate::point_set::to_micros(q).ok_or(Error::CoordinateOutOfRange { index: 0 })?;
        self.query_raw(s, q)
    }

    /// Standard query: `s` reaches `t` iff `s` reaches the location of `t`.
    pub fn query_vertex(&self, s: VertexId, t: VertexId) -> Result<bool> {
        self.check(t)?;
        self.query_raw(s, self.pos[t as usize])
    }

    /// Unit length (smallest radius) in micro-units.
    pub fn unit(&self) -> i64 {
        self.unit
    }
}

impl ReachabilityOracle for Oracle1D {
    fn num_vertices(&self) -> usize {
        self.len()
    }

    fn reaches(&self, s: VertexId, t: VertexId) -> Result<bool> {
        self.query_vertex(s, t)
    }

    fn heap_bytes(&self) -> usize {
        self.component.len() * 4 + self.lr.len() * 16 + self.pos.len() * 8
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn running() -> Oracle1D {
        let ps = PointSet::from_points(1, [([0.0], 1.0), ([2.0], 3.0), ([3.0], 1.0)]).unwrap();
        build_oracle_1d(&ps).unwrap()
    }

    #[test]
    fn running_instance_reachpoints() {
        let o = running();
        assert_eq!(o.reach_interval(1), (-1_000_000, 5_000_000));
        assert_eq!(o.reach_interval(2), (-1_000_000, 5_000_000));
        assert_eq!(o.reach_interval(0), (-1_000_000, 1_000_000));
    }

    #[test]
    fn geometric_queries() {
        let o = running();
        assert!(o.query(1, -0.5).unwrap());
        assert!(!o.query(0, 1.5).unwrap());
        assert!(o.query(0, 0.0).unwrap());
        assert!(matches!(
            o.query(3, 0.0),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn vertex_queries() {
        let o = running();
        assert!(o.query_vertex(0, 0).unwrap());
        assert!(o.query_vertex(1, 0).unwrap());
        assert!(!o.query_vertex(0, 1).unwrap());
        assert!(matches!(
            o.query_vertex(0, 7),
            Err(Error::IndexOutOfRange { .. })
        ));
    }
}
