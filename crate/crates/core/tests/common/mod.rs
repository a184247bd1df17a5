//! Reference implementations for tests, written against the raw definitions.

#![allow(dead_code)]

use std::collections::VecDeque;

use transreach::PointSet;

/// Naive transmission graph: `p -> q` iff `p != q` and `|pq|^2 <= r_p^2`, exactly.
pub fn naive_adjacency(ps: &PointSet) -> Vec<Vec<u32>> {
    let n = ps.len() as u32;
    (0..n)
        .map(|p| {
            let a = ps.raw_pos(p);
            let r = ps.raw_radius(p) as i128;
            (0..n)
                .filter(|&q| {
                    let b = ps.raw_pos(q);
                    let (dx, dy) = ((a[0] - b[0]) as i128, (a[1] - b[1]) as i128);
                    p != q && dx * dx + dy * dy <= r * r
                })
                .collect()
        })
        .collect()
}

pub fn bfs_from(adj: &[Vec<u32>], s: u32) -> Vec<bool> {
    let mut seen = vec![false; adj.len()];
    seen[s as usize] = true;
    let mut queue = VecDeque::from([s]);
    while let Some(u) = queue.pop_front() {
        for &v in &adj[u as usize] {
            if !seen[v as usize] {
                seen[v as usize] = true;
                queue.push_back(v);
            }
        }
    }
    seen
}

pub fn hops_from(adj: &[Vec<u32>], s: u32) -> Vec<Option<u32>> {
    let mut dist = vec![None; adj.len()];
    dist[s as usize] = Some(0);
    let mut queue = VecDeque::from([s]);
    while let Some(u) = queue.pop_front() {
        let d = dist[u as usize].unwrap() + 1;
        for &v in &adj[u as usize] {
            if dist[v as usize].is_none() {
                dist[v as usize] = Some(d);
                queue.push_back(v);
            }
        }
    }
    dist
}

/// All-pairs reachability, `reach[s][t]`.
pub struct Reference {
    pub adj: Vec<Vec<u32>>,
    pub reach: Vec<Vec<bool>>,
}

impl Reference {
    pub fn new(ps: &PointSet) -> Self {
        let adj = naive_adjacency(ps);
        let reach = (0..ps.len() as u32).map(|s| bfs_from(&adj, s)).collect();
        Self { adj, reach }
    }

    pub fn from_adjacency(adj: Vec<Vec<u32>>) -> Self {
        let reach = (0..adj.len() as u32).map(|s| bfs_from(&adj, s)).collect();
        Self { adj, reach }
    }

    pub fn reaches(&self, s: u32, t: u32) -> bool {
        self.reach[s as usize][t as usize]
    }

    /// Does `s` reach some vertex whose disk holds the raw point `q`?
    pub fn geo_reaches(&self, ps: &PointSet, s: u32, q: [i64; 2]) -> bool {
        self.reach[s as usize].iter().enumerate().any(|(t, &ok)| {
            if !ok {
                return false;
            }
            let p = ps.raw_pos(t as u32);
            let r = ps.raw_radius(t as u32) as i128;
            let (dx, dy) = ((p[0] - q[0]) as i128, (p[1] - q[1]) as i128);
            dx * dx + dy * dy <= r * r
        })
    }
}

/// Sign of the cross product `(b - a) x (c - a)`.
pub fn orient(a: [i64; 2], b: [i64; 2], c: [i64; 2]) -> i32 {
    let v = (b[0] - a[0]) as i128 * (c[1] - a[1]) as i128
        - (b[1] - a[1]) as i128 * (c[0] - a[0]) as i128;
    v.signum() as i32
}

/// Closed disks of `a` and `b` intersect.
pub fn disks_meet(ps: &PointSet, a: u32, b: u32) -> bool {
    let (p, q) = (ps.raw_pos(a), ps.raw_pos(b));
    let r = (ps.raw_radius(a) + ps.raw_radius(b)) as i128;
    let (dx, dy) = ((p[0] - q[0]) as i128, (p[1] - q[1]) as i128);
    dx * dx + dy * dy <= r * r
}
