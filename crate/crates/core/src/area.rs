//! Cell-count proxy for the area of a disk union.
//!
//! `mu_hat(D)` is the number of level-0 cells whose closed square meets at
//! least one closed disk of `D`. Computed in normalized floating point with a
//! relative slack of 1e-9 so that tangent cells count as touching.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::grid::{cell_side, CellId};
use crate::point_set::PointSet;
use crate::VertexId;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AreaProxy {
    cells: Vec<CellId>,
}

impl AreaProxy {
    pub fn count(&self) -> usize {
        self.cells.len()
    }

    /// Covered cells, ascending.
    pub fn cells(&self) -> &[CellId] {
        &self.cells
    }

    pub fn contains(&self, cell: CellId) -> bool {
        self.cells.binary_search(&cell).is_ok()
    }
}

/// Level-0 cells meeting the disk of `v`, ascending.
pub fn disk_cells(ps: &PointSet, v: VertexId) -> Vec<CellId> {
    let side = cell_side(2, 0);
    let c = ps.coords(v);
    let (cx, cy, r) = (c[0], c[1], ps.radius(v));
    let limit = r * r * (1.0 + 1e-9);
    let x0 = ((cx - r) / side).floor() as i64;
    let x1 = ((cx + r) / side).floor() as i64;
    let y0 = ((cy - r) / side).floor() as i64;
    let y1 = ((cy + r) / side).floor() as i64;
    let mut cells = Vec::new();
    for kx in x0..=x1 {
        let lo = kx as f64 * side;
        let dx = cx - cx.clamp(lo, lo + side);
        for ky in y0..=y1 {
            let lo = ky as f64 * side;
            let dy = cy - cy.clamp(lo, lo + side);
            if dx * dx + dy * dy <= limit {
                cells.push((kx, ky));
            }
        }
    }
    cells
}

pub fn area_proxy(ps: &PointSet) -> Result<AreaProxy> {
    let ids: Vec<VertexId> = ps.ids().collect();
    area_proxy_of(ps, &ids)
}

pub fn area_proxy_of(ps: &PointSet, ids: &[VertexId]) -> Result<AreaProxy> {
    if ps.dim() != 2 {
        return Err(Error::WrongDimension {
            expected: 2,
            found: ps.dim(),
        });
    }
    let mut set = HashSet::new();
    for &v in ids {
        set.extend(disk_cells(ps, v));
    }
    let mut cells: Vec<CellId> = set.into_iter().collect();
    cells.sort_unstable();
    Ok(AreaProxy { cells })
}
