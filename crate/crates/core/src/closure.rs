//! Packed transitive closure over a condensation DAG.

use fixedbitset::FixedBitSet;

use crate::scc::Condensation;

/// Reachability rows restricted to a set of target components.
///
/// Rows are built in reverse topological order: the row of `c` is `c` itself
/// (when tracked) united with the rows of its DAG successors. Only rows of
/// the requested source components are retained.
#[derive(Debug, Clone)]
pub struct ReachClosure {
    slot: Vec<u32>,
    rows: Vec<FixedBitSet>,
}

impl ReachClosure {
    pub fn build(cond: &Condensation, sources: &[u32], targets: &[u32]) -> Self {
        let k = cond.count();
        let mut slot = vec![u32::MAX; k];
        let mut width = 0u32;
        for &t in targets {
            if slot[t as usize] == u32::MAX {
                slot[t as usize] = width;
                width += 1;
            }
        }
        let mut keep = FixedBitSet::with_capacity(k);
        for &s in sources {
            keep.insert(s as usize);
        }
        let mut rows = vec![FixedBitSet::new(); k];
        // Remaining predecessors per component, so rows can be dropped once consumed.
        let mut pending = vec![0u32; k];
        for succ in &cond.dag {
            for &c in succ {
                pending[c as usize] += 1;
            }
        }
        for &c in cond.topo.iter().rev() {
            let ci = c as usize;
            let mut row = FixedBitSet::with_capacity(width as usize);
            if slot[ci] != u32::MAX {
                row.insert(slot[ci] as usize);
            }
            for &d in &cond.dag[ci] {
                let di = d as usize;
                row.union_with(&rows[di]);
                pending[di] -= 1;
                if pending[di] == 0 && !keep.contains(di) {
                    rows[di] = FixedBitSet::new();
                }
            }
            if pending[ci] == 0 && !keep.contains(ci) {
                continue;
            }
            rows[ci] = row;
        }
        Self { slot, rows }
    }

    /// Does component `from` reach component `to`? `to` must be a tracked target.
    pub fn reaches(&self, from: u32, to: u32) -> bool {
        let s = self.slot[to as usize];
        s != u32::MAX && self.rows[from as usize].contains(s as usize)
    }

    pub fn heap_bytes(&self) -> usize {
        self.slot.len() * 4
            + self
                .rows
                .iter()
                .map(|r| r.as_slice().len() * 4)
                .sum::<usize>()
    }
}
