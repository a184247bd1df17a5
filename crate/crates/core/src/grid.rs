//! Hierarchical grids anchored at the origin.
//!
//! The grid at level `i` has cells of diameter `2^i` (normalized units), so
//! the side is `2^i / sqrt(dim)`. Vertex cells are computed exactly from the
//! micro-unit coordinates: in 2D the cell index is `floor(x * sqrt(2) / d)`
//! with `d = 2^i * unit`, resolved with integer comparisons.

use std::collections::HashMap;
use std::f64::consts::SQRT_2;

use crate::point_set::{PointSet, RawPoint};
use crate::VertexId;

/// Integer cell coordinates; the second component is 0 in 1D.
pub type CellId = (i64, i64);

/// Side length of a level-`level` cell in normalized units.
pub fn cell_side(dim: usize, level: u32) -> f64 {
    let diameter = (level as f64).exp2();
    if dim == 1 {
        diameter
    } else {
        diameter / SQRT_2
    }
}

/// Cell containing a point given in normalized coordinates.
pub fn grid_cell(point: &[f64], level: u32) -> CellId {
    let side = cell_side(point.len(), level);
    let x = (point[0] / side).floor() as i64;
    let y = point.get(1).map_or(0, |&y| (y / side).floor() as i64);
    (x, y)
}

/// Exact cell of a micro-unit point for a grid whose unit length is `unit` micro-units.
pub fn raw_cell(dim: usize, p: RawPoint, unit: i64, level: u32) -> CellId {
    if level >= 64 {
        let f = |c: i64| if c < 0 { -1 } else { 0 };
        return (f(p[0]), if dim == 1 { 0 } else { f(p[1]) });
    }
    let d = (unit as i128) << level;
    if dim == 1 {
        (floor_div(p[0] as i128, d), 0)
    } else {
        (floor_sqrt2_div(p[0], d), floor_sqrt2_div(p[1], d))
    }
}

fn floor_div(a: i128, d: i128) -> i64 {
    a.div_euclid(d) as i64
}

/// `floor(x * sqrt(2) / d)` for `d > 0`.
fn floor_sqrt2_div(x: i64, d: i128) -> i64 {
    if d > (1i128 << 60) {
        return if x < 0 { -1 } else { 0 };
    }
    let mut k = ((x as f64) * SQRT_2 / d as f64).floor() as i64;
    while !le_sqrt2(k as i128 * d, x) {
        k -= 1;
    }
    while le_sqrt2((k as i128 + 1) * d, x) {
        k += 1;
    }
    k
}

/// `a <= x * sqrt(2)`, exactly.
fn le_sqrt2(a: i128, x: i64) -> bool {
    let x = x as i128;
    if x >= 0 {
        a <= 0 || a * a <= 2 * x * x
    } else {
        a < 0 && a * a >= 2 * x * x
    }
}

impl PointSet {
    /// Exact grid cell of vertex `v` at `level`.
    pub fn cell_of(&self, v: VertexId, level: u32) -> CellId {
        self.cell_of_point(self.raw_pos(v), level)
    }

    /// Exact grid cell of a micro-unit point at `level`.
    pub fn cell_of_point(&self, p: RawPoint, level: u32) -> CellId {
        raw_cell(self.dim(), p, self.unit(), level)
    }
}

/// Bucketing of all vertices of a point set by their cell at one level.
#[derive(Debug, Clone)]
pub struct GridIndex {
    level: u32,
    buckets: HashMap<CellId, Vec<VertexId>>,
}

impl GridIndex {
    pub fn build(ps: &PointSet, level: u32) -> Self {
        Self::build_for(ps, level, ps.ids())
    }

    /// Buckets only the given vertices; lists stay sorted if `ids` is ascending.
    pub fn build_for(ps: &PointSet, level: u32, ids: impl IntoIterator<Item = VertexId>) -> Self {
        let mut buckets: HashMap<CellId, Vec<VertexId>> = HashMap::new();
        for v in ids {
            buckets.entry(ps.cell_of(v, level)).or_default().push(v);
        }
        Self { level, buckets }
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn bucket(&self, cell: CellId) -> &[VertexId] {
        self.buckets.get(&cell).map_or(&[], Vec::as_slice)
    }

    pub fn num_cells(&self) -> usize {
        self.buckets.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (CellId, &[VertexId])> {
        self.buckets.iter().map(|(&c, v)| (c, v.as_slice()))
    }

    /// Nonempty cells in ascending order.
    pub fn sorted_cells(&self) -> Vec<CellId> {
        let mut cells: Vec<CellId> = self.buckets.keys().copied().collect();
        cells.sort_unstable();
        cells
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn float_cells() {
        assert_eq!(grid_cell(&[0.0, 0.0], 0), (0, 0));
        assert_eq!(grid_cell(&[0.8, 0.0], 0), (1, 0));
        assert_eq!(grid_cell(&[-0.1], 0), (-1, 0));
        assert_eq!(grid_cell(&[3.0], 1), (1, 0));
    }

    #[test]
    fn exact_cells_match_float_away_from_boundaries() {
        let unit = 1_000_000;
        for x in (-5_000_000i64..5_000_000).step_by(123_457) {
            for level in 0..4 {
                let exact = raw_cell(2, [x, -x], unit, level);
                let float = grid_cell(&[x as f64 / unit as f64, -x as f64 / unit as f64], level);
                assert_eq!(exact, float, "x = {x}, level = {level}");
            }
        }
    }

    #[test]
    fn exact_cell_on_sqrt2_boundary() {
        // x = 707107 micro-units is just above 1/sqrt(2); 707106 just below.
        assert_eq!(raw_cell(2, [707_107, 0], 1_000_000, 0), (1, 0));
        assert_eq!(raw_cell(2, [707_106, 0], 1_000_000, 0), (0, 0));
        assert_eq!(raw_cell(2, [-707_106, 0], 1_000_000, 0), (-1, 0));
        assert_eq!(raw_cell(2, [-707_107, 0], 1_000_000, 0), (-2, 0));
        assert_eq!(raw_cell(1, [-1, 0], 1_000_000, 0), (-1, 0));
        assert_eq!(raw_cell(1, [1_000_000, 0], 1_000_000, 0), (1, 0));
    }

    #[test]
    fn huge_levels_collapse_to_origin_cells() {
        assert_eq!(raw_cell(2, [5, -5], 1, 70), (0, -1));
        assert_eq!(raw_cell(2, [5, -5], 1, 62), (0, -1));
    }
}
