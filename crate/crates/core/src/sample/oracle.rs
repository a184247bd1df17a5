use std::collections::HashMap;

use fixedbitset::FixedBitSet;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{bfs, enumerate_edges};
use crate::grid::{CellId, GridIndex};
use crate::oracle::ReachabilityOracle;
use crate::point_set::PointSet;
use crate::sample::delta::{first_common, DeltaLists};
use crate::VertexId;

const ALPHA_MIN: f64 = 0.05;
const ALPHA_MAX: f64 = 0.95;

/// Exponent `alpha` solving `n^alpha = n^(2/3) (max(log2 psi, 1) / log2 n)^(1/3)`, clamped to `[0.05, 0.95]`.
pub fn choose_alpha(n: usize, psi: f64) -> f64 {
    if n < 2 {
        return 2.0 / 3.0;
    }
    let n = n as f64;
    let ratio = psi.log2().max(1.0) / n.log2();
    (2.0 / 3.0 + ratio.ln() / (3.0 * n.ln())).clamp(ALPHA_MIN, ALPHA_MAX)
}

/// Inclusion intensity `m = 4 n^alpha ln n`.
pub fn sample_intensity(n: usize, alpha: f64) -> f64 {
    let n = n as f64;
    4.0 * n.powf(alpha) * n.ln()
}

/// Each vertex independently with probability `min(1, m / n)`, drawn in id order.
pub fn sample_hitting_set(n: usize, alpha: f64, seed: u64) -> Vec<VertexId> {
    if n == 0 {
        return Vec::new();
    }
    let p = (sample_intensity(n, alpha) / n as f64).clamp(0.0, 1.0);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n as VertexId).filter(|_| rng.gen_bool(p)).collect()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SampleOptions {
    pub seed: u64,
    /// Overrides [`choose_alpha`].
    pub alpha: Option<f64>,
    /// Drops the sample entirely, leaving only the short-path lists.
    pub force_empty_sample: bool,
}

impl SampleOptions {
    pub fn seeded(seed: u64) -> Self {
        Self {
            seed,
            alpha: None,
            force_empty_sample: false,
        }
    }
}

/// Why a query answered yes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Witness {
    Identical,
    /// A sampled vertex reached from `s` that reaches `t`.
    Sample(VertexId),
    /// A level-`level` cell whose representative `rep` is reached from `s` and reaches `t`.
    Cell {
        level: u32,
        cell: CellId,
        rep: VertexId,
    },
}

/// Per level: the representative cells and, per vertex, the sorted lists of
/// those cells it reaches (`from`) or is reached by (`to`).
#[derive(Debug, Clone)]
pub struct Level {
    pub level: u32,
    /// Cells with a vertex of this radius class, ascending; list entries index this.
    pub cells: Vec<CellId>,
    pub reps: Vec<VertexId>,
    from: DeltaLists,
    to: DeltaLists,
}

impl Level {
    pub fn from_list(&self, v: VertexId) -> Vec<u32> {
        self.from.get(v as usize).collect()
    }

    pub fn to_list(&self, v: VertexId) -> Vec<u32> {
        self.to.get(v as usize).collect()
    }

    pub fn entries(&self) -> usize {
        self.from.entries() + self.to.entries()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SampleStats {
    pub n: usize,
    pub alpha: f64,
    pub intensity: f64,
    pub sample_size: usize,
    pub levels: usize,
    /// `(from + to)` list entries per level.
    pub list_entries: Vec<usize>,
    pub list_bytes: usize,
    pub row_bytes: usize,
}

/// Randomized oracle: boolean rows for a random sample catch long paths,
/// per-level neighborhood lists catch short ones. Answers may be false
/// negatives but every yes carries a witness.
#[derive(Debug, Clone)]
pub struct SampleOracle {
    n: usize,
    psi: f64,
    alpha: f64,
    seed: u64,
    sample: Vec<VertexId>,
    /// Per sampled vertex: everything it reaches.
    reaches: Vec<FixedBitSet>,
    /// Per sampled vertex: everything reaching it.
    reached_by: Vec<FixedBitSet>,
    levels: Vec<Level>,
    /// Cell-distance bound, squared, in cells: `8 n^(2 (1 - alpha))`.
    reach_cells2: f64,
}

pub fn build_sample_oracle(ps: &PointSet, seed: u64) -> Result<SampleOracle> {
    build_sample_oracle_with(ps, SampleOptions::seeded(seed))
}

/// `sigma` and `tau` are neighbors iff the closed squares are within
/// `2^(i+1) n^(1 - alpha)`. With side `2^i / sqrt(2)` that is
/// `gx^2 + gy^2 <= 8 n^(2 (1 - alpha))`, `g` the per-axis gap in whole cells.
fn cells_near(a: CellId, b: CellId, reach_cells2: f64) -> bool {
    let gap = |d: i64| (d.unsigned_abs().saturating_sub(1)) as f64;
    let (gx, gy) = (gap(a.0 - b.0), gap(a.1 - b.1));
    gx * gx + gy * gy <= reach_cells2
}

pub fn build_sample_oracle_with(ps: &PointSet, opts: SampleOptions) -> Result<SampleOracle> {
    if ps.dim() != 2 {
        return Err(Error::WrongDimension {
            expected: 2,
            found: ps.dim(),
        });
    }
    let n = ps.len();
    let alpha = opts.alpha.unwrap_or_else(|| choose_alpha(n, ps.psi()));
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(Error::InvalidSpec(format!(
            "alpha {alpha} must lie in (0, 1)"
        )));
    }
    let g = enumerate_edges(ps);
    let adj = g.adjacency();
    let radj = g.transpose();

    let sample = if opts.force_empty_sample {
        Vec::new()
    } else {
        sample_hitting_set(n, alpha, opts.seed)
    };
    let (reaches, reached_by): (Vec<FixedBitSet>, Vec<FixedBitSet>) = sample
        .par_iter()
        .map(|&x| (bfs(adj, x, None), bfs(&radj, x, None)))
        .unzip();

    let reach_cells2 = 8.0 * (n as f64).powf(2.0 * (1.0 - alpha));
    let top = ps.ids().map(|v| ps.radius_level(v)).max().unwrap_or(0);
    let mut levels = Vec::with_capacity(top as usize + 1);
    for i in 0..=top {
        levels.push(build_level(ps, adj, &radj, i, reach_cells2));
    }
    Ok(SampleOracle {
        n,
        psi: ps.psi(),
        alpha,
        seed: opts.seed,
        sample,
        reaches,
        reached_by,
        levels,
        reach_cells2,
    })
}

fn build_level(
    ps: &PointSet,
    adj: &[Vec<VertexId>],
    radj: &[Vec<VertexId>],
    i: u32,
    reach_cells2: f64,
) -> Level {
    let n = ps.len();
    let grid = GridIndex::build(ps, i);
    let occupied = grid.sorted_cells();
    let mut reps: HashMap<CellId, VertexId> = HashMap::new();
    for v in ps.ids().filter(|&v| ps.radius_class(v) == i) {
        reps.entry(ps.cell_of(v, i)).or_insert(v);
    }
    let mut cells: Vec<CellId> = reps.keys().copied().collect();
    cells.sort_unstable();
    let rep_list: Vec<VertexId> = cells.iter().map(|c| reps[c]).collect();

    // Neighborhood vertex sets, by scanning either the offset disk or all occupied cells.
    let span = reach_cells2.sqrt().floor() as i64 + 1;
    let offsets = ((2 * span + 1) * (2 * span + 1)) as usize;
    let neighborhood = |sigma: CellId| -> FixedBitSet {
        let mut mask = FixedBitSet::with_capacity(n);
        let mut take = |tau: CellId| {
            for &v in grid.bucket(tau) {
                mask.insert(v as usize);
            }
        };
        if offsets < occupied.len() {
            for dx in -span..=span {
                for dy in -span..=span {
                    let tau = (sigma.0 + dx, sigma.1 + dy);
                    if cells_near(sigma, tau, reach_cells2) {
                        take(tau);
                    }
                }
            }
        } else {
            for &tau in &occupied {
                if cells_near(sigma, tau, reach_cells2) {
                    take(tau);
                }
            }
        }
        mask
    };

    let found: Vec<(FixedBitSet, FixedBitSet)> = cells
        .par_iter()
        .zip(rep_list.par_iter())
        .map(|(&sigma, &r)| {
            let mask = neighborhood(sigma);
            (bfs(radj, r, Some(&mask)), bfs(adj, r, Some(&mask)))
        })
        .collect();
    let mut from = vec![Vec::new(); n];
    let mut to = vec![Vec::new(); n];
    for (k, (reach_r, from_r)) in found.iter().enumerate() {
        for v in reach_r.ones() {
            from[v].push(k as u32);
        }
        for v in from_r.ones() {
            to[v].push(k as u32);
        }
    }
    let pack = |lists: Vec<Vec<u32>>| {
        let mut d = DeltaLists::new();
        for l in lists {
            d.push(&l);
        }
        d
    };
    Level {
        level: i,
        cells,
        reps: rep_list,
        from: pack(from),
        to: pack(to),
    }
}

impl SampleOracle {
    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn psi(&self) -> f64 {
        self.psi
    }

    pub fn sample(&self) -> &[VertexId] {
        &self.sample
    }

    pub fn levels(&self) -> &[Level] {
        &self.levels
    }

    /// Hop length below which paths are caught without the sample: `n^(1 - alpha)`.
    pub fn short_path_bound(&self) -> f64 {
        (self.n as f64).powf(1.0 - self.alpha)
    }

    /// Are two cells of the same level neighbors?
    pub fn neighbors(&self, a: CellId, b: CellId) -> bool {
        cells_near(a, b, self.reach_cells2)
    }

    pub fn stats(&self) -> SampleStats {
        let row_bytes = self
            .reaches
            .iter()
            .chain(&self.reached_by)
            .map(|r| r.as_slice().len() * 4)
            .sum();
        SampleStats {
            n: self.n,
            alpha: self.alpha,
            intensity: sample_intensity(self.n, self.alpha),
            sample_size: self.sample.len(),
            levels: self.levels.len(),
            list_entries: self.levels.iter().map(Level::entries).collect(),
            list_bytes: self
                .levels
                .iter()
                .map(|l| l.from.heap_bytes() + l.to.heap_bytes())
                .sum(),
            row_bytes,
        }
    }

    pub fn witness(&self, s: VertexId, t: VertexId) -> Result<Option<Witness>> {
        for v in [s, t] {
            if v as usize >= self.n {
                return Err(Error::IndexOutOfRange {
                    index: v as usize,
                    n: self.n,
                });
            }
        }
        if s == t {
            return Ok(Some(Witness::Identical));
        }
        for (k, &x) in self.sample.iter().enumerate() {
            if self.reached_by[k].contains(s as usize) && self.reaches[k].contains(t as usize) {
                return Ok(Some(Witness::Sample(x)));
            }
        }
        for lvl in &self.levels {
            if let Some(k) = first_common(lvl.from.get(s as usize), lvl.to.get(t as usize)) {
                return Ok(Some(Witness::Cell {
                    level: lvl.level,
                    cell: lvl.cells[k as usize],
                    rep: lvl.reps[k as usize],
                }));
            }
        }
        Ok(None)
    }

    pub fn query(&self, s: VertexId, t: VertexId) -> Result<bool> {
        Ok(self.witness(s, t)?.is_some())
    }
}

impl ReachabilityOracle for SampleOracle {
    fn num_vertices(&self) -> usize {
        self.n
    }

    fn reaches(&self, s: VertexId, t: VertexId) -> Result<bool> {
        self.query(s, t)
    }

    fn heap_bytes(&self) -> usize {
        let st = self.stats();
        st.row_bytes + st.list_bytes + 4 * self.sample.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::brute_reach;

    #[test]
    fn alpha_examples() {
        assert!((choose_alpha(1 << 10, 1024.0) - 2.0 / 3.0).abs() < 1e-12);
        assert!((choose_alpha(1024, 2.0) - 0.5559).abs() < 5e-4);
        let tiny = choose_alpha(4, 1e6);
        assert!((ALPHA_MIN..=ALPHA_MAX).contains(&tiny));
    }

    #[test]
    fn hitting_set_rules() {
        assert_eq!(sample_hitting_set(1, 0.5, 3), Vec::<VertexId>::new());
        assert_eq!(sample_hitting_set(10, 0.9, 3), (0..10).collect::<Vec<_>>());
        assert_eq!(
            sample_hitting_set(100, 0.5, 42),
            sample_hitting_set(100, 0.5, 42)
        );
        let a = sample_hitting_set(100, 0.2, 42);
        assert_eq!(a, sample_hitting_set(100, 0.2, 42));
        assert_ne!(a, sample_hitting_set(100, 0.2, 43));
        assert!(a.windows(2).all(|w| w[0] < w[1]));
        assert!(!a.is_empty() && a.len() < 100);
    }

    #[test]
    fn single_vertex() {
        let ps = PointSet::from_points(2, [([0.0, 0.0], 1.0)]).unwrap();
        let o = build_sample_oracle(&ps, 1).unwrap();
        assert!(o.sample().is_empty());
        assert_eq!(o.levels().len(), 1);
        assert_eq!(o.witness(0, 0).unwrap(), Some(Witness::Identical));
        assert!(o.query(0, 1).is_err());
    }

    #[test]
    fn one_edge_found_without_sample() {
        let ps = PointSet::from_points(2, [([0.0, 0.0], 1.5), ([1.2, 0.0], 1.0)]).unwrap();
        let opts = SampleOptions {
            force_empty_sample: true,
            ..SampleOptions::seeded(0)
        };
        let o = build_sample_oracle_with(&ps, opts).unwrap();
        assert!(matches!(
            o.witness(0, 1).unwrap(),
            Some(Witness::Cell { .. })
        ));
        assert!(!o.query(1, 0).unwrap());
    }

    #[test]
    fn chain_needs_the_sample() {
        // 60 disks one unit apart: every hop is an edge, long paths leave the neighborhoods.
        let ps = PointSet::from_points(2, (0..60).map(|i| ([i as f64, 0.0], 1.0))).unwrap();
        let g = enumerate_edges(&ps);
        let bare = SampleOptions {
            alpha: Some(0.9),
            force_empty_sample: true,
            seed: 0,
        };
        let o = build_sample_oracle_with(&ps, bare).unwrap();
        assert!(o.query(0, 2).unwrap());
        assert!(!o.query(0, 59).unwrap());
        assert!(brute_reach(&g, 0, 59).unwrap());
        let full = build_sample_oracle_with(
            &ps,
            SampleOptions {
                force_empty_sample: false,
                ..bare
            },
        )
        .unwrap();
        assert_eq!(full.sample().len(), 60);
        assert_eq!(full.witness(0, 59).unwrap(), Some(Witness::Sample(0)));
    }

    #[test]
    fn neighborhoods_are_symmetric() {
        let ps = PointSet::from_points(
            2,
            (0..30).map(|i| ([(i * 7 % 30) as f64, (i * 3 % 11) as f64], 1.0)),
        )
        .unwrap();
        let o = build_sample_oracle_with(
            &ps,
            SampleOptions {
                alpha: Some(0.8),
                ..SampleOptions::seeded(1)
            },
        )
        .unwrap();
        for a in -6..6 {
            for b in -6..6 {
                let (x, y) = ((a, b), (b, a * 2));
                assert_eq!(o.neighbors(x, y), o.neighbors(y, x));
            }
        }
        assert!(o.neighbors((0, 0), (1, 1)));
    }
}
