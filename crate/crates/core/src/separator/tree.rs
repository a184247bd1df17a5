use std::collections::HashMap;

use fixedbitset::FixedBitSet;
use rayon::prelude::*;
use serde::Serialize;

use crate::area::disk_cells;
use crate::error::{Error, Result};
use crate::graph::{bfs, enumerate_edges};
use crate::grid::CellId;
use crate::oracle::ReachabilityOracle;
use crate::point_set::PointSet;
use crate::separator::band::{band_separator, median_split, mu_hat, DiskView, Separation};
use crate::VertexId;

/// Which vertex of a cell stands in for the whole cell.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub enum RepChoice {
    #[default]
    Smallest,
    Largest,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SeparatorConfig {
    /// Upper bound on `mu_hat(A) / mu_hat(all)` and `mu_hat(B) / mu_hat(all)`.
    pub balance_alpha: f64,
    /// Subproblems with at most this many disks become leaves.
    pub min_leaf_size: usize,
    pub representative: RepChoice,
}

impl Default for SeparatorConfig {
    fn default() -> Self {
        Self {
            balance_alpha: 0.75,
            min_leaf_size: 8,
            representative: RepChoice::Smallest,
        }
    }
}

impl SeparatorConfig {
    fn validate(&self) -> Result<()> {
        if !(self.balance_alpha > 0.0 && self.balance_alpha < 1.0) {
            return Err(Error::InvalidSpec(
                "balance_alpha must lie in (0, 1)".into(),
            ));
        }
        if self.min_leaf_size == 0 {
            return Err(Error::InvalidSpec(
                "min_leaf_size must be at least 1".into(),
            ));
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
pub struct SeparatorNode {
    pub id: u32,
    pub parent: Option<u32>,
    pub children: Vec<u32>,
    pub depth: u32,
    pub leaf: bool,
    /// The band sweep found no balanced position; the median split was used.
    pub fallback: bool,
    /// Disks of this node's subproblem, ascending.
    pub subproblem: Vec<VertexId>,
    pub a: Vec<VertexId>,
    pub b: Vec<VertexId>,
    pub s: Vec<VertexId>,
    pub mu_all: usize,
    pub mu_a: usize,
    pub mu_b: usize,
    pub mu_s: usize,
    /// `mu_hat(S) / (psi^2 sqrt(mu_hat(all)))`.
    pub beta_hat: f64,
    /// Level-0 cells meeting the separator disks.
    pub cells: Vec<CellId>,
    /// Subproblem vertices with centers in `cells`, absorbed here.
    pub absorbed: Vec<VertexId>,
    /// One representative per nonempty cell of `cells`, ascending.
    pub reps: Vec<VertexId>,
    /// Representatives of every cell of the subproblem, ascending; indexes the rows.
    domain: Vec<VertexId>,
    from_rows: Vec<FixedBitSet>,
    to_rows: Vec<FixedBitSet>,
}

impl SeparatorNode {
    fn slot(&self, r: VertexId) -> Option<usize> {
        self.domain.binary_search(&r).ok()
    }

    /// Does representative `reps[k]` reach representative `r` inside the subproblem?
    pub fn rep_reaches(&self, k: usize, r: VertexId) -> bool {
        self.slot(r).is_some_and(|i| self.from_rows[k].contains(i))
    }

    /// Does representative `r` reach `reps[k]` inside the subproblem?
    pub fn rep_reached_by(&self, k: usize, r: VertexId) -> bool {
        self.slot(r).is_some_and(|i| self.to_rows[k].contains(i))
    }

    fn table_bits(&self) -> usize {
        2 * self.reps.len() * self.domain.len()
    }
}

/// One node of the JSON tree dump.
#[derive(Debug, Clone, Serialize)]
pub struct NodeSummary {
    pub id: u32,
    pub parent: Option<u32>,
    pub children: Vec<u32>,
    pub depth: u32,
    pub leaf: bool,
    pub fallback: bool,
    pub disks: usize,
    pub mu_all: usize,
    pub mu_a: usize,
    pub mu_b: usize,
    pub mu_s: usize,
    pub reps: usize,
    pub absorbed: usize,
    pub beta_hat: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SeparatorStats {
    pub nodes: usize,
    pub leaves: usize,
    pub fallback_nodes: usize,
    pub depth: u32,
    pub max_beta_hat: f64,
    pub table_bits: usize,
}

/// Separator tree with representative reachability tables.
#[derive(Debug, Clone)]
pub struct SeparatorOracle {
    nodes: Vec<SeparatorNode>,
    /// Representative of each vertex's level-0 cell.
    representative: Vec<VertexId>,
    /// Node that absorbed each vertex.
    absorbed_at: Vec<u32>,
    config: SeparatorConfig,
}

/// Separates the disks `ids` with the band sweep; `CannotSeparate` if no band is balanced.
pub fn disk_separator(ps: &PointSet, ids: &[VertexId], balance_alpha: f64) -> Result<Separation> {
    if ps.dim() != 2 {
        return Err(Error::WrongDimension {
            expected: 2,
            found: ps.dim(),
        });
    }
    let prep = Prepared::new(ps);
    band_separator(&prep.view(), ids, balance_alpha)
}

struct Prepared {
    pos: Vec<[i64; 2]>,
    rad: Vec<i64>,
    cells: Vec<Vec<u32>>,
    cell_ids: Vec<CellId>,
}

impl Prepared {
    fn new(ps: &PointSet) -> Self {
        let mut index: HashMap<CellId, u32> = HashMap::new();
        let mut cell_ids = Vec::new();
        let cells = ps
            .ids()
            .map(|v| {
                disk_cells(ps, v)
                    .into_iter()
                    .map(|c| {
                        *index.entry(c).or_insert_with(|| {
                            cell_ids.push(c);
                            cell_ids.len() as u32 - 1
                        })
                    })
                    .collect()
            })
            .collect();
        Self {
            pos: ps.ids().map(|v| ps.raw_pos(v)).collect(),
            rad: ps.ids().map(|v| ps.raw_radius(v)).collect(),
            cells,
            cell_ids,
        }
    }

    fn view(&self) -> DiskView<'_> {
        DiskView {
            pos: &self.pos,
            rad: &self.rad,
            cells: &self.cells,
            num_cells: self.cell_ids.len(),
        }
    }
}

pub fn build_separator_oracle(ps: &PointSet, cfg: SeparatorConfig) -> Result<SeparatorOracle> {
    if ps.dim() != 2 {
        return Err(Error::WrongDimension {
            expected: 2,
            found: ps.dim(),
        });
    }
    cfg.validate()?;
    let n = ps.len();
    let g = enumerate_edges(ps);
    let adj = g.adjacency();
    let radj = g.transpose();
    let prep = Prepared::new(ps);
    let view = prep.view();

    let center: Vec<CellId> = ps.ids().map(|v| ps.cell_of(v, 0)).collect();
    let mut rep_of_cell: HashMap<CellId, VertexId> = HashMap::new();
    for v in ps.ids() {
        let e = rep_of_cell.entry(center[v as usize]).or_insert(v);
        if cfg.representative == RepChoice::Largest {
            *e = (*e).max(v);
        }
    }
    let representative: Vec<VertexId> = center.iter().map(|c| rep_of_cell[c]).collect();
    let psi2 = ps.psi() * ps.psi();

    let mut nodes: Vec<SeparatorNode> = Vec::new();
    let mut absorbed_at = vec![u32::MAX; n];
    let mut work: Vec<(Vec<VertexId>, Option<u32>, u32)> = vec![(ps.ids().collect(), None, 0)];
    while let Some((ids, parent, depth)) = work.pop() {
        let id = nodes.len() as u32;
        if let Some(p) = parent {
            nodes[p as usize].children.push(id);
        }
        let mu_all = mu_hat(&view, &ids);
        let leaf = ids.len() <= cfg.min_leaf_size;
        let sep = if leaf {
            None
        } else {
            Some(
                band_separator(&view, &ids, cfg.balance_alpha)
                    .unwrap_or_else(|_| median_split(&view, &ids)),
            )
        };

        let (cells, absorbed) = match &sep {
            None => {
                let mut cells: Vec<CellId> = ids.iter().map(|&v| center[v as usize]).collect();
                cells.sort_unstable();
                cells.dedup();
                (cells, ids.clone())
            }
            Some(sep) => {
                let mut dense: Vec<u32> = sep
                    .s
                    .iter()
                    .flat_map(|&v| prep.cells[v as usize].iter().copied())
                    .collect();
                dense.sort_unstable();
                dense.dedup();
                let mut cells: Vec<CellId> =
                    dense.iter().map(|&c| prep.cell_ids[c as usize]).collect();
                cells.sort_unstable();
                let absorbed: Vec<VertexId> = ids
                    .iter()
                    .copied()
                    .filter(|&v| cells.binary_search(&center[v as usize]).is_ok())
                    .collect();
                (cells, absorbed)
            }
        };
        for &v in &absorbed {
            absorbed_at[v as usize] = id;
        }
        let mut reps: Vec<VertexId> = absorbed
            .iter()
            .map(|&v| representative[v as usize])
            .collect();
        reps.sort_unstable();
        reps.dedup();
        let mut domain: Vec<VertexId> = ids.iter().map(|&v| representative[v as usize]).collect();
        domain.sort_unstable();
        domain.dedup();

        let mut mask = FixedBitSet::with_capacity(n);
        for &v in &ids {
            mask.insert(v as usize);
        }
        let row = |seen: FixedBitSet| {
            let mut row = FixedBitSet::with_capacity(domain.len());
            for (i, &d) in domain.iter().enumerate() {
                if seen.contains(d as usize) {
                    row.insert(i);
                }
            }
            row
        };
        let (from_rows, to_rows): (Vec<FixedBitSet>, Vec<FixedBitSet>) = reps
            .par_iter()
            .map(|&r| {
                (
                    row(bfs(adj, r, Some(&mask))),
                    row(bfs(&radj, r, Some(&mask))),
                )
            })
            .unzip();

        let (mut a, mut b, mut s, mut mu_a, mut mu_b, mut mu_s, mut fallback) =
            (Vec::new(), Vec::new(), Vec::new(), 0, 0, 0, false);
        if let Some(sep) = sep {
            mu_a = mu_hat(&view, &sep.a);
            mu_b = mu_hat(&view, &sep.b);
            mu_s = mu_hat(&view, &sep.s);
            fallback = sep.fallback;
            let rest = |side: &[VertexId]| -> Vec<VertexId> {
                side.iter()
                    .copied()
                    .filter(|&v| absorbed_at[v as usize] != id)
                    .collect()
            };
            // Pushed in reverse so the A side is numbered first.
            for side in [rest(&sep.b), rest(&sep.a)] {
                if !side.is_empty() {
                    work.push((side, Some(id), depth + 1));
                }
            }
            (a, b, s) = (sep.a, sep.b, sep.s);
        }
        let mut sorted_ids = ids;
        sorted_ids.sort_unstable();
        nodes.push(SeparatorNode {
            id,
            parent,
            children: Vec::new(),
            depth,
            leaf,
            fallback,
            subproblem: sorted_ids,
            a,
            b,
            s,
            mu_all,
            mu_a,
            mu_b,
            mu_s,
            beta_hat: mu_s as f64 / (psi2 * (mu_all as f64).sqrt()),
            cells,
            absorbed,
            reps,
            domain,
            from_rows,
            to_rows,
        });
    }
    debug_assert!(absorbed_at.iter().all(|&x| x != u32::MAX));
    Ok(SeparatorOracle {
        nodes,
        representative,
        absorbed_at,
        config: cfg,
    })
}

impl SeparatorOracle {
    pub fn nodes(&self) -> &[SeparatorNode] {
        &self.nodes
    }

    pub fn root(&self) -> &SeparatorNode {
        &self.nodes[0]
    }

    pub fn config(&self) -> SeparatorConfig {
        self.config
    }

    pub fn representative(&self, v: VertexId) -> VertexId {
        self.representative[v as usize]
    }

    pub fn absorbing_node(&self, v: VertexId) -> u32 {
        self.absorbed_at[v as usize]
    }

    pub fn stats(&self) -> SeparatorStats {
        SeparatorStats {
            nodes: self.nodes.len(),
            leaves: self.nodes.iter().filter(|x| x.leaf).count(),
            fallback_nodes: self.nodes.iter().filter(|x| x.fallback).count(),
            depth: self.nodes.iter().map(|x| x.depth).max().unwrap_or(0),
            max_beta_hat: self
                .nodes
                .iter()
                .filter(|x| !x.leaf)
                .map(|x| x.beta_hat)
                .fold(0.0, f64::max),
            table_bits: self.nodes.iter().map(|x| x.table_bits()).sum(),
        }
    }

    pub fn summary(&self) -> Vec<NodeSummary> {
        self.nodes
            .iter()
            .map(|x| NodeSummary {
                id: x.id,
                parent: x.parent,
                children: x.children.clone(),
                depth: x.depth,
                leaf: x.leaf,
                fallback: x.fallback,
                disks: x.subproblem.len(),
                mu_all: x.mu_all,
                mu_a: x.mu_a,
                mu_b: x.mu_b,
                mu_s: x.mu_s,
                reps: x.reps.len(),
                absorbed: x.absorbed.len(),
                beta_hat: x.beta_hat,
            })
            .collect()
    }

    fn lca(&self, mut u: u32, mut w: u32) -> u32 {
        let depth = |x: u32| self.nodes[x as usize].depth;
        while depth(u) > depth(w) {
            u = self.nodes[u as usize].parent.unwrap();
        }
        while depth(w) > depth(u) {
            w = self.nodes[w as usize].parent.unwrap();
        }
        while u != w {
            u = self.nodes[u as usize].parent.unwrap();
            w = self.nodes[w as usize].parent.unwrap();
        }
        u
    }

    /// A representative on the root path of the LCA through which `s` reaches `t`, if any.
    ///
    /// Leaves list every representative of their subproblem, so the same walk
    /// also answers pairs absorbed by one leaf.
    pub fn witness(&self, s: VertexId, t: VertexId) -> Result<Option<(u32, VertexId)>> {
        let n = self.representative.len();
        for v in [s, t] {
            if v as usize >= n {
                return Err(Error::IndexOutOfRange {
                    index: v as usize,
                    n,
                });
            }
        }
        let (rs, rt) = (self.representative(s), self.representative(t));
        if rs == rt {
            return Ok(Some((self.absorbing_node(rs), rs)));
        }
        let mut x = Some(self.lca(self.absorbing_node(rs), self.absorbing_node(rt)));
        while let Some(id) = x {
            let node = &self.nodes[id as usize];
            for (k, &r) in node.reps.iter().enumerate() {
                if node.rep_reached_by(k, rs) && node.rep_reaches(k, rt) {
                    return Ok(Some((id, r)));
                }
            }
            x = node.parent;
        }
        Ok(None)
    }

    pub fn query(&self, s: VertexId, t: VertexId) -> Result<bool> {
        Ok(self.witness(s, t)?.is_some())
    }
}

impl ReachabilityOracle for SeparatorOracle {
    fn num_vertices(&self) -> usize {
        self.representative.len()
    }

    fn reaches(&self, s: VertexId, t: VertexId) -> Result<bool> {
        self.query(s, t)
    }

    fn heap_bytes(&self) -> usize {
        let per_node: usize = self
            .nodes
            .iter()
            .map(|x| {
                x.table_bits() / 8
                    + 4 * (x.reps.len() + x.domain.len() + x.absorbed.len() + x.subproblem.len())
            })
            .sum();
        per_node + 8 * self.representative.len()
    }
}
