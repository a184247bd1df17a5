//! Axis-aligned band separator for disk sets.
//!
//! A band `[c - R, c + R]` (with `R` the largest radius present) splits the
//! disks into those entirely left of it (`A`), entirely right of it (`B`),
//! and the rest (`S`). The unions of `A` and `B` are disjoint, so no
//! transmission edge joins them. Among all band positions that keep
//! `mu_hat(A)` and `mu_hat(B)` within `balance_alpha * mu_hat(all)`, the one
//! with the smallest `mu_hat(S)` wins.

use crate::error::{Error, Result};
use crate::VertexId;

/// Disk `v` as seen by the sweep: raw center, raw radius, covered cells.
pub(crate) struct DiskView<'a> {
    pub pos: &'a [[i64; 2]],
    pub rad: &'a [i64],
    /// Dense indices of the level-0 cells each disk meets.
    pub cells: &'a [Vec<u32>],
    pub num_cells: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Separation {
    pub a: Vec<VertexId>,
    pub b: Vec<VertexId>,
    pub s: Vec<VertexId>,
    /// 0 for a vertical band (split on x), 1 for horizontal.
    pub axis: usize,
    /// Band center, doubled micro-units.
    pub center2: i64,
    pub fallback: bool,
}

/// Counts distinct cells of a multiset of disks.
struct CellCounter {
    count: Vec<u32>,
    distinct: usize,
}

impl CellCounter {
    fn new(k: usize) -> Self {
        Self {
            count: vec![0; k],
            distinct: 0,
        }
    }

    fn add(&mut self, cells: &[u32]) {
        for &c in cells {
            let slot = &mut self.count[c as usize];
            if *slot == 0 {
                self.distinct += 1;
            }
            *slot += 1;
        }
    }

    fn remove(&mut self, cells: &[u32]) {
        for &c in cells {
            let slot = &mut self.count[c as usize];
            *slot -= 1;
            if *slot == 0 {
                self.distinct -= 1;
            }
        }
    }
}

pub(crate) fn mu_hat(view: &DiskView, ids: &[VertexId]) -> usize {
    let mut seen = vec![false; view.num_cells];
    let mut k = 0;
    for &v in ids {
        for &c in &view.cells[v as usize] {
            if !seen[c as usize] {
                seen[c as usize] = true;
                k += 1;
            }
        }
    }
    k
}

/// Best band over both axes, or `CannotSeparate` if no position is balanced.
pub(crate) fn band_separator(view: &DiskView, ids: &[VertexId], alpha: f64) -> Result<Separation> {
    if ids.len() < 2 {
        return Err(Error::CannotSeparate);
    }
    let total = mu_hat(view, ids);
    let limit = alpha * total as f64;
    let big_r = ids.iter().map(|&v| view.rad[v as usize]).max().unwrap();
    let mut best: Option<(usize, usize, usize, i64)> = None;

    for axis in 0..2 {
        let x = |v: VertexId| view.pos[v as usize][axis];
        let r = |v: VertexId| view.rad[v as usize];
        let mut xs: Vec<i64> = ids.iter().map(|&v| x(v)).collect();
        xs.sort_unstable();
        xs.dedup();
        let mut candidates = Vec::with_capacity(2 * xs.len());
        for (i, &xi) in xs.iter().enumerate() {
            candidates.push(2 * xi);
            if let Some(&next) = xs.get(i + 1) {
                candidates.push(xi + next);
            }
        }
        // B loses a disk once 2(x - r) <= c + 2R; A gains it once 2(x + r) < c - 2R.
        let mut leave_b: Vec<VertexId> = ids.to_vec();
        leave_b.sort_by_key(|&v| (2 * (x(v) - r(v)), v));
        let mut enter_a: Vec<VertexId> = ids.to_vec();
        enter_a.sort_by_key(|&v| (2 * (x(v) + r(v)), v));

        let mut a = CellCounter::new(view.num_cells);
        let mut b = CellCounter::new(view.num_cells);
        let mut s = CellCounter::new(view.num_cells);
        for &v in ids {
            b.add(&view.cells[v as usize]);
        }
        let (mut nb, mut na) = (0usize, 0usize);
        for &c in &candidates {
            while nb < leave_b.len() && 2 * (x(leave_b[nb]) - r(leave_b[nb])) <= c + 2 * big_r {
                let cells = &view.cells[leave_b[nb] as usize];
                b.remove(cells);
                s.add(cells);
                nb += 1;
            }
            while na < enter_a.len() && 2 * (x(enter_a[na]) + r(enter_a[na])) < c - 2 * big_r {
                let cells = &view.cells[enter_a[na] as usize];
                s.remove(cells);
                a.add(cells);
                na += 1;
            }
            let in_b = ids.len() - nb;
            if na + in_b == 0 {
                continue;
            }
            if a.distinct as f64 > limit || b.distinct as f64 > limit {
                continue;
            }
            let key = (s.distinct, nb - na, axis, c);
            if best.is_none_or(|cur| key < cur) {
                best = Some(key);
            }
        }
    }

    let best = best.ok_or(Error::CannotSeparate)?;
    let (_, _, axis, c) = best;
    let mut sep = Separation {
        a: Vec::new(),
        b: Vec::new(),
        s: Vec::new(),
        axis,
        center2: c,
        fallback: false,
    };
    for &v in ids {
        let (x, r) = (view.pos[v as usize][axis], view.rad[v as usize]);
        if 2 * (x + r) < c - 2 * big_r {
            sep.a.push(v);
        } else if 2 * (x - r) > c + 2 * big_r {
            sep.b.push(v);
        } else {
            sep.s.push(v);
        }
    }
    Ok(sep)
}

/// Split at the median center x-coordinate; `S` is every disk meeting the split line.
pub(crate) fn median_split(view: &DiskView, ids: &[VertexId]) -> Separation {
    let mut xs: Vec<i64> = ids.iter().map(|&v| view.pos[v as usize][0]).collect();
    xs.sort_unstable();
    let m = xs[(xs.len() - 1) / 2];
    let mut sep = Separation {
        a: Vec::new(),
        b: Vec::new(),
        s: Vec::new(),
        axis: 0,
        center2: 2 * m,
        fallback: true,
    };
    for &v in ids {
        let (x, r) = (view.pos[v as usize][0], view.rad[v as usize]);
        if x + r < m {
            sep.a.push(v);
        } else if x - r > m {
            sep.b.push(v);
        } else {
            sep.s.push(v);
        }
    }
    sep
}
