//! Kosaraju–Sharir on a 1D transmission graph without materializing its edges.
//!
//! Forward edges are discovered by predecessor/successor lookups among the
//! unvisited points in coordinate order. Reverse edges (`q -> p` with `p` in `D(q)`) are
//! discovered by stabbing the disks of unvisited points at `p`, using a
//! max-right-endpoint segment tree over the disks sorted by left endpoint.

use crate::error::{Error, Result};
use crate::point_set::PointSet;
use crate::scc::SccPartition;
use crate::VertexId;

/// Unvisited points, by coordinate rank. Deletion links a slot to its
/// neighbour with path-compressed "next unvisited" pointers in each direction.
struct ForwardIndex {
    /// `right[i]`: smallest unvisited slot `>= i`, `n` if none.
    right: Vec<usize>,
    /// `left[i]`: one more than the largest unvisited slot `< i`, `0` if none.
    left: Vec<usize>,
}

fn find(link: &mut [usize], mut i: usize) -> usize {
    let mut root = i;
    while link[root] != root {
        root = link[root];
    }
    while link[i] != root {
        let next = link[i];
        link[i] = root;
        i = next;
    }
    root
}

impl ForwardIndex {
    fn new(n: usize) -> Self {
        Self {
            right: (0..=n).collect(),
            left: (0..=n).collect(),
        }
    }

    fn remove(&mut self, i: usize) {
        self.right[i] = i + 1;
        self.left[i + 1] = i;
    }

    /// Removes and returns an unvisited out-neighbour of slot `i`, if any.
    fn take_neighbor(&mut self, xs: &[i64], rs: &[i64], i: usize) -> Option<usize> {
        let (x, r) = (xs[i], rs[i]);
        let l = find(&mut self.left, i);
        let hit = if l > 0 && x - xs[l - 1] <= r {
            Some(l - 1)
        } else {
            let j = find(&mut self.right, i);
            (j < xs.len() && xs[j] - x <= r).then_some(j)
        }?;
        self.remove(hit);
        Some(hit)
    }
}

/// Disks `[x - r, x + r]` of unvisited points, sorted by left endpoint.
struct StabIndex {
    left: Vec<i64>,
    order: Vec<usize>,
    slot: Vec<usize>,
    size: usize,
    /// Max right endpoint per segment-tree node; `i64::MIN` for deleted disks.
    tree: Vec<i64>,
}

impl StabIndex {
    fn new(xs: &[i64], rs: &[i64]) -> Self {
        let n = xs.len();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_unstable_by_key(|&i| (xs[i] - rs[i], i));
        let size = n.next_power_of_two();
        let mut tree = vec![i64::MIN; 2 * size];
        let mut slot = vec![0; n];
        let mut left = Vec::with_capacity(n);
        for (k, &i) in order.iter().enumerate() {
            tree[size + k] = xs[i] + rs[i];
            slot[i] = k;
            left.push(xs[i] - rs[i]);
        }
        for k in (1..size).rev() {
            tree[k] = tree[2 * k].max(tree[2 * k + 1]);
        }
        Self {
            left,
            order,
            slot,
            size,
            tree,
        }
    }

    fn remove(&mut self, i: usize) {
        let mut k = self.size + self.slot[i];
        self.tree[k] = i64::MIN;
        while k > 1 {
            k /= 2;
            self.tree[k] = self.tree[2 * k].max(self.tree[2 * k + 1]);
        }
    }

    /// Removes and returns an unvisited point whose disk contains `x`.
    fn take_stabbing(&mut self, x: i64) -> Option<usize> {
        // Candidates: disks with left endpoint <= x, a prefix of the order.
        let limit = self.left.partition_point(|&l| l <= x);
        let k = self.first_at_least(1, 0, self.size, limit, x)?;
        let i = self.order[k];
        self.remove(i);
        Some(i)
    }

    /// Leftmost leaf index below `limit` in `node`'s range `[lo, hi)` with value >= x.
    fn first_at_least(
        &self,
        node: usize,
        lo: usize,
        hi: usize,
        limit: usize,
        x: i64,
    ) -> Option<usize> {
        if lo >= limit || self.tree[node] < x {
            return None;
        }
        if hi - lo == 1 {
            return Some(lo);
        }
        let mid = (lo + hi) / 2;
        self.first_at_least(2 * node, lo, mid, limit, x)
            .or_else(|| self.first_at_least(2 * node + 1, mid, hi, limit, x))
    }
}

/// SCCs of a 1D transmission graph in `O(n log n)`. Component labels are a
/// topological numbering of the condensation.
pub fn scc_1d(ps: &PointSet) -> Result<SccPartition> {
    if ps.dim() != 1 {
        return Err(Error::WrongDimension {
            expected: 1,
            found: ps.dim(),
        });
    }
    let n = ps.len();
    // Work on coordinate ranks so neighbouring points sit in neighbouring slots.
    let mut by_x: Vec<VertexId> = ps.ids().collect();
    by_x.sort_unstable_by_key(|&v| (ps.raw_pos(v)[0], v));
    let xs: Vec<i64> = by_x.iter().map(|&v| ps.raw_pos(v)[0]).collect();
    let rs: Vec<i64> = by_x.iter().map(|&v| ps.raw_radius(v)).collect();

    // First pass: DFS finishing order on G.
    let mut fwd = ForwardIndex::new(n);
    let mut visited = vec![false; n];
    let mut finish = Vec::with_capacity(n);
    let mut stack = Vec::new();
    for root in 0..n {
        if visited[root] {
            continue;
        }
        visited[root] = true;
        fwd.remove(root);
        stack.push(root);
        while let Some(&p) = stack.last() {
            match fwd.take_neighbor(&xs, &rs, p) {
                Some(q) => {
                    visited[q] = true;
                    stack.push(q);
                }
                None => {
                    stack.pop();
                    finish.push(p);
                }
            }
        }
    }

    // Second pass: DFS on the transpose in decreasing finishing order.
    let mut rev = StabIndex::new(&xs, &rs);
    let mut by_rank = vec![u32::MAX; n];
    let mut count = 0u32;
    for &root in finish.iter().rev() {
        if by_rank[root] != u32::MAX {
            continue;
        }
        by_rank[root] = count;
        rev.remove(root);
        stack.push(root);
        while let Some(&p) = stack.last() {
            match rev.take_stabbing(xs[p]) {
                Some(q) => {
                    by_rank[q] = count;
                    stack.push(q);
                }
                None => {
                    stack.pop();
                }
            }
        }
        count += 1;
    }
    let mut component = vec![0; n];
    for (i, &v) in by_x.iter().enumerate() {
        component[v as usize] = by_rank[i];
    }
    Ok(SccPartition {
        component,
        count: count as usize,
    })
}
