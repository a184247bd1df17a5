//! Crossing resolution: turns the straight-line drawing of the sparse graph
//! into a plane graph by inserting every proper crossing as a new vertex.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::planar::geometry::{
    big_contact, crossing_param, point_at, properly_cross, BigPoint, Contact, Rat, RatPoint,
};
use crate::planar::sparse::SparseGraph;
use crate::point_set::{PointSet, RawPoint};
use crate::VertexId;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PlaneEdge {
    pub source: VertexId,
    pub target: VertexId,
    /// The sparse-graph edge whose segment contains this edge.
    pub support: (VertexId, VertexId),
}

#[derive(Debug, Clone)]
pub struct PlaneGraph {
    n_original: usize,
    positions: Vec<RatPoint>,
    edges: Vec<PlaneEdge>,
    crossing_pairs: usize,
}

impl PlaneGraph {
    pub fn n_original(&self) -> usize {
        self.n_original
    }

    pub fn num_vertices(&self) -> usize {
        self.positions.len()
    }

    /// Vertices added for crossings.
    pub fn num_crossing_vertices(&self) -> usize {
        self.positions.len() - self.n_original
    }

    pub fn is_crossing(&self, v: VertexId) -> bool {
        v as usize >= self.n_original
    }

    pub fn position(&self, v: VertexId) -> &RatPoint {
        &self.positions[v as usize]
    }

    pub fn edges(&self) -> &[PlaneEdge] {
        &self.edges
    }

    /// Pairs of sparse-graph segments that cross properly.
    pub fn crossing_pairs(&self) -> usize {
        self.crossing_pairs
    }

    pub fn adjacency(&self) -> Vec<Vec<VertexId>> {
        let mut adj = vec![Vec::new(); self.positions.len()];
        for e in &self.edges {
            adj[e.source as usize].push(e.target);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        adj
    }
}

/// An undirected segment of the sparse graph with the directions it carries.
struct Segment {
    a: VertexId,
    b: VertexId,
    forward: bool,
    backward: bool,
}

fn segments(h: &SparseGraph) -> Vec<Segment> {
    let mut by_pair: BTreeMap<(VertexId, VertexId), (bool, bool)> = BTreeMap::new();
    for e in h.edges() {
        let (a, b) = (e.source.min(e.target), e.source.max(e.target));
        let flags = by_pair.entry((a, b)).or_default();
        if e.source == a {
            flags.0 = true;
        } else {
            flags.1 = true;
        }
    }
    by_pair
        .into_iter()
        .map(|((a, b), (forward, backward))| Segment {
            a,
            b,
            forward,
            backward,
        })
        .collect()
}

/// Index pairs of candidate segments whose x-ranges overlap, via a sorted sweep.
fn overlapping_pairs<F>(boxes: &[([f64; 2], [f64; 2])], mut visit: F) -> Result<()>
where
    F: FnMut(usize, usize) -> Result<()>,
{
    let mut order: Vec<usize> = (0..boxes.len()).collect();
    order.sort_by(|&i, &j| boxes[i].0[0].total_cmp(&boxes[j].0[0]));
    for (k, &i) in order.iter().enumerate() {
        let (lo, hi) = boxes[i];
        for &j in &order[k + 1..] {
            let (lo2, hi2) = boxes[j];
            if lo2[0] > hi[0] {
                break;
            }
            if lo2[1] > hi[1] || hi2[1] < lo[1] {
                continue;
            }
            visit(i, j)?;
        }
    }
    Ok(())
}

/// Subdivides every sparse-graph segment at all of its proper crossings.
///
/// Crossings of the original arrangement are found once; each segment is then
/// split at its crossing points in order from one end to the other, which is
/// the same graph that iterative resolution produces. Concurrent crossings
/// through one point share a single new vertex. Guarded by `Ψ < sqrt(3)`.
pub fn resolve_crossings(ps: &PointSet, h: &SparseGraph) -> Result<PlaneGraph> {
    if !ps.psi_below_sqrt3() {
        return Err(Error::PsiTooLarge { psi: ps.psi() });
    }
    planarize(ps, h)
}

/// [`resolve_crossings`] without the radius-ratio guard.
pub fn planarize(ps: &PointSet, h: &SparseGraph) -> Result<PlaneGraph> {
    if ps.dim() != 2 {
        return Err(Error::WrongDimension {
            expected: 2,
            found: ps.dim(),
        });
    }
    let segs = segments(h);
    let ends: Vec<(RawPoint, RawPoint)> = segs
        .iter()
        .map(|s| (ps.raw_pos(s.a), ps.raw_pos(s.b)))
        .collect();
    let boxes: Vec<([f64; 2], [f64; 2])> = ends
        .iter()
        .map(|&(p, q)| {
            (
                [p[0].min(q[0]) as f64, p[1].min(q[1]) as f64],
                [p[0].max(q[0]) as f64, p[1].max(q[1]) as f64],
            )
        })
        .collect();

    let mut positions: Vec<RatPoint> = ps
        .ids()
        .map(|v| RatPoint::from_raw(ps.raw_pos(v)))
        .collect();
    let mut at_point: BTreeMap<RatPoint, VertexId> = BTreeMap::new();
    let mut splits: Vec<Vec<(Rat, VertexId)>> = vec![Vec::new(); segs.len()];
    let mut crossing_pairs = 0usize;

    overlapping_pairs(&boxes, |i, j| {
        let (si, sj) = (&segs[i], &segs[j]);
        if si.a == sj.a || si.a == sj.b || si.b == sj.a || si.b == sj.b {
            return Ok(());
        }
        let ((a, b), (c, d)) = (ends[i], ends[j]);
        if !properly_cross(a, b, c, d) {
            return Ok(());
        }
        crossing_pairs += 1;
        let (num_i, den_i) = crossing_param(a, b, c, d);
        let (num_j, den_j) = crossing_param(c, d, a, b);
        let x = point_at(a, b, num_i, den_i)?;
        let next = positions.len() as VertexId;
        let id = *at_point.entry(x.clone()).or_insert(next);
        if id == next {
            positions.push(x);
        }
        splits[i].push((Rat::new(num_i, den_i), id));
        splits[j].push((Rat::new(num_j, den_j), id));
        Ok(())
    })?;

    let mut edges = Vec::new();
    for (seg, mut cuts) in segs.iter().zip(splits) {
        cuts.sort();
        cuts.dedup_by_key(|c| c.1);
        let chain: Vec<VertexId> = std::iter::once(seg.a)
            .chain(cuts.into_iter().map(|c| c.1))
            .chain(std::iter::once(seg.b))
            .collect();
        if seg.forward {
            edges.extend(chain.windows(2).map(|w| PlaneEdge {
                source: w[0],
                target: w[1],
                support: (seg.a, seg.b),
            }));
        }
        if seg.backward {
            edges.extend(chain.windows(2).rev().map(|w| PlaneEdge {
                source: w[1],
                target: w[0],
                support: (seg.b, seg.a),
            }));
        }
    }
    Ok(PlaneGraph {
        n_original: ps.len(),
        positions,
        edges,
        crossing_pairs,
    })
}

/// Result of the independent planarity check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct PlaneCheck {
    /// Pairs of edges meeting at a point interior to both.
    pub proper_crossings: usize,
    /// Touching without a shared endpoint vertex, including collinear overlap.
    pub degenerate_contacts: usize,
}

/// f64 orientation with a conservative error bound: `Some(sign)` only when the sign is certain.
fn filtered_orient(a: [f64; 2], b: [f64; 2], c: [f64; 2]) -> Option<i32> {
    let (bx, by, cx, cy) = (b[0] - a[0], b[1] - a[1], c[0] - a[0], c[1] - a[1]);
    let (l, r) = (bx * cy, by * cx);
    let v = l - r;
    // Inputs are rounded rationals, so each coordinate carries an error up to m * 2^-52.
    let m = [a, b, c]
        .iter()
        .flat_map(|p| p.iter())
        .fold(1.0f64, |acc, x| acc.max(x.abs()));
    let eps = m * 2f64.powi(-50);
    let bound = 4.0 * eps * (bx.abs() + by.abs() + cx.abs() + cy.abs() + 4.0 * eps)
        + 1e-15 * (l.abs() + r.abs());
    if v > bound {
        Some(1)
    } else if v < -bound {
        Some(-1)
    } else {
        None
    }
}

/// Exact check that no two edges of `pg` meet except at shared endpoints.
///
/// Reverse edge pairs are checked once. Segments far apart are rejected with a
/// certified floating-point filter; everything else is decided with big
/// rationals, independently of the arithmetic used to build `pg`.
pub fn verify_plane(pg: &PlaneGraph) -> PlaneCheck {
    let mut pairs: Vec<(VertexId, VertexId)> = pg
        .edges()
        .iter()
        .map(|e| (e.source.min(e.target), e.source.max(e.target)))
        .collect();
    pairs.sort_unstable();
    pairs.dedup();
    let approx: Vec<[f64; 2]> = pg.positions.iter().map(|p| p.to_f64()).collect();
    let exact: Vec<BigPoint> = pg.positions.iter().map(BigPoint::from).collect();
    let boxes: Vec<([f64; 2], [f64; 2])> = pairs
        .iter()
        .map(|&(u, v)| {
            let (p, q) = (approx[u as usize], approx[v as usize]);
            (
                [p[0].min(q[0]) - 1.0, p[1].min(q[1]) - 1.0],
                [p[0].max(q[0]) + 1.0, p[1].max(q[1]) + 1.0],
            )
        })
        .collect();
    let mut out = PlaneCheck::default();
    let _ = overlapping_pairs(&boxes, |i, j| {
        let ((a, b), (c, d)) = (pairs[i], pairs[j]);
        if a == c || a == d || b == c || b == d {
            return Ok(());
        }
        let f = |v: VertexId| approx[v as usize];
        let separated =
            |o1: Option<i32>, o2: Option<i32>| matches!((o1, o2), (Some(x), Some(y)) if x * y > 0);
        if separated(
            filtered_orient(f(a), f(b), f(c)),
            filtered_orient(f(a), f(b), f(d)),
        ) || separated(
            filtered_orient(f(c), f(d), f(a)),
            filtered_orient(f(c), f(d), f(b)),
        ) {
            return Ok(());
        }
        let e = |v: VertexId| &exact[v as usize];
        match big_contact(e(a), e(b), e(c), e(d)) {
            Contact::Proper => out.proper_crossings += 1,
            Contact::Degenerate => out.degenerate_contacts += 1,
            Contact::Disjoint => {}
        }
        Ok(())
    });
    out
}
