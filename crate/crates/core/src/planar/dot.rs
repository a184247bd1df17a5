//! Graphviz export of the sparse and plane graphs.

use std::fmt::Write;

use crate::planar::plane::PlaneGraph;
use crate::planar::sparse::SparseGraph;
use crate::point_set::{from_micros, PointSet};

/// Sparse graph with vertices pinned at their input coordinates.
pub fn sparse_dot(ps: &PointSet, h: &SparseGraph) -> String {
    let mut out = String::from("digraph H {\n");
    for v in ps.ids() {
        let p = ps.raw_pos(v);
        let _ = writeln!(
            out,
            "  {v} [pos=\"{},{}!\"];",
            from_micros(p[0]),
            from_micros(p[1])
        );
    }
    for e in h.edges() {
        let _ = writeln!(out, "  {} -> {};", e.source, e.target);
    }
    out.push_str("}\n");
    out
}

/// Plane graph; crossing vertices are drawn as points at their decimal approximations.
pub fn plane_dot(pg: &PlaneGraph) -> String {
    let mut out = String::from("digraph Htilde {\n");
    for v in 0..pg.num_vertices() as u32 {
        let [x, y] = pg.position(v).to_f64();
        let (x, y) = (x / 1e6, y / 1e6);
        if pg.is_crossing(v) {
            let _ = writeln!(out, "  {v} [shape=point, pos=\"{x},{y}!\"];");
        } else {
            let _ = writeln!(out, "  {v} [pos=\"{x},{y}!\"];");
        }
    }
    for e in pg.edges() {
        let _ = writeln!(out, "  {} -> {};", e.source, e.target);
    }
    out.push_str("}\n");
    out
}
