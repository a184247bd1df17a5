//! SCC intervals, their laminar tree, and reachpoint propagation among siblings.

use crate::error::{Error, Result};
use crate::point_set::PointSet;
use crate::scc::SccPartition;
use crate::VertexId;

/// Landmarks of one SCC, all in micro-units.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Scc1D {
    pub id: u32,
    pub members: Vec<VertexId>,
    /// Leftmost member coordinate.
    pub l: i64,
    /// Rightmost member coordinate.
    pub r: i64,
    /// Direct left reachpoint: min over members of `p - r_p`.
    pub dl: i64,
    /// Direct right reachpoint: max over members of `p + r_p`.
    pub dr: i64,
}

pub fn scc_intervals(ps: &PointSet, part: &SccPartition) -> Vec<Scc1D> {
    part.members()
        .into_iter()
        .enumerate()
        .map(|(id, members)| {
            let xs = members
                .iter()
                .map(|&v| (ps.raw_pos(v)[0], ps.raw_radius(v)));
            let (mut l, mut r, mut dl, mut dr) = (i64::MAX, i64::MIN, i64::MAX, i64::MIN);
            for (x, rad) in xs {
                l = l.min(x);
                r = r.max(x);
                dl = dl.min(x - rad);
                dr = dr.max(x + rad);
            }
            Scc1D {
                id: id as u32,
                members,
                l,
                r,
                dl,
                dr,
            }
        })
        .collect()
}

/// Containment tree of SCC intervals. A synthetic root groups the top-level
/// intervals when there is more than one; it carries no landmarks.
#[derive(Debug, Clone)]
pub struct LaminarTree {
    pub nodes: Vec<Scc1D>,
    pub parent: Vec<Option<u32>>,
    /// Children per node, left to right.
    pub children: Vec<Vec<u32>>,
    /// Top-level nodes, left to right.
    pub top: Vec<u32>,
}

impl LaminarTree {
    pub fn has_synthetic_root(&self) -> bool {
        self.top.len() > 1
    }

    /// Every sibling group, each ordered left to right.
    pub fn sibling_groups(&self) -> impl Iterator<Item = &[u32]> {
        std::iter::once(self.top.as_slice()).chain(
            self.children
                .iter()
                .filter(|c| !c.is_empty())
                .map(Vec::as_slice),
        )
    }
}

pub fn build_laminar_tree(nodes: Vec<Scc1D>) -> Result<LaminarTree> {
    let k = nodes.len();
    let mut order: Vec<u32> = (0..k as u32).collect();
    order.sort_by_key(|&c| {
        let s = &nodes[c as usize];
        (s.l, std::cmp::Reverse(s.r))
    });
    let mut parent = vec![None; k];
    let mut children = vec![Vec::new(); k];
    let mut top = Vec::new();
    let mut stack: Vec<u32> = Vec::new();
    for &c in &order {
        let cur = &nodes[c as usize];
        while let Some(&t) = stack.last() {
            if nodes[t as usize].r < cur.l {
                stack.pop();
            } else {
                break;
            }
        }
        match stack.last() {
            Some(&t) => {
                let enclosing = &nodes[t as usize];
                if cur.r > enclosing.r {
                    return Err(Error::LaminarityViolation(
                        enclosing.l,
                        enclosing.r,
                        cur.l,
                        cur.r,
                    ));
                }
                parent[c as usize] = Some(t);
                children[t as usize].push(c);
            }
            None => top.push(c),
        }
        stack.push(c);
    }
    Ok(LaminarTree {
        nodes,
        parent,
        children,
        top,
    })
}

/// Left and right reachpoints per SCC, in micro-units.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Reachpoints {
    pub lr: i64,
    pub rr: i64,
}

/// Stack sweeps over every sibling group: left to right for `lr`, mirrored for `rr`.
pub fn compute_reachpoints(tree: &LaminarTree) -> Vec<Reachpoints> {
    let nodes = &tree.nodes;
    let mut out: Vec<Reachpoints> = nodes
        .iter()
        .map(|s| Reachpoints { lr: s.dl, rr: s.dr })
        .collect();
    let mut stack: Vec<u32> = Vec::new();
    for group in tree.sibling_groups() {
        stack.clear();
        for &c in group {
            let mut lr = nodes[c as usize].dl;
            while let Some(&t) = stack.last() {
                if lr <= nodes[t as usize].r {
                    lr = lr.min(out[t as usize].lr);
                    stack.pop();
                } else {
                    break;
                }
            }
            out[c as usize].lr = lr;
            stack.push(c);
        }
        stack.clear();
        for &c in group.iter().rev() {
            let mut rr = nodes[c as usize].dr;
            while let Some(&t) = stack.last() {
                if rr >= nodes[t as usize].l {
                    rr = rr.max(out[t as usize].rr);
                    stack.pop();
                } else {
                    break;
                }
            }
            out[c as usize].rr = rr;
            stack.push(c);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn node(id: u32, l: i64, r: i64, dl: i64, dr: i64) -> Scc1D {
        Scc1D {
            id,
            members: vec![id],
            l,
            r,
            dl,
            dr,
        }
    }

    #[test]
    fn disjoint_intervals_are_siblings() {
        let t = build_laminar_tree(vec![node(0, 0, 0, -1, 1), node(1, 2, 3, -1, 5)]).unwrap();
        assert_eq!(t.top, vec![0, 1]);
        assert!(t.has_synthetic_root());
    }

    #[test]
    fn nested_interval_is_a_child() {
        let t = build_laminar_tree(vec![node(0, 2, 3, 1, 4), node(1, 0, 10, -2, 12)]).unwrap();
        assert_eq!(t.top, vec![1]);
        assert_eq!(t.parent[0], Some(1));
        assert_eq!(t.children[1], vec![0]);
        assert!(!t.has_synthetic_root());
    }

    #[test]
    fn single_scc() {
        let t = build_laminar_tree(vec![node(0, 5, 7, 3, 9)]).unwrap();
        assert_eq!(t.top, vec![0]);
        assert!(!t.has_synthetic_root());
        assert_eq!(compute_reachpoints(&t), vec![Reachpoints { lr: 3, rr: 9 }]);
    }

    #[test]
    fn crossing_intervals_are_rejected() {
        let err = build_laminar_tree(vec![node(0, 0, 5, 0, 5), node(1, 3, 8, 3, 8)]).unwrap_err();
        assert!(matches!(err, Error::LaminarityViolation(..)));
    }

    #[test]
    fn sibling_sweep() {
        // A = [0,0] with dl = -1; B = [2,3] whose disk reaches -1.
        let t = build_laminar_tree(vec![node(0, 0, 0, -1, 1), node(1, 2, 3, -1, 5)]).unwrap();
        let rp = compute_reachpoints(&t);
        assert_eq!(rp[1], Reachpoints { lr: -1, rr: 5 });
        assert_eq!(rp[0], Reachpoints { lr: -1, rr: 1 });
    }

    #[test]
    fn pop_on_tie() {
        // B's direct reach ends exactly at A's right end; A's own reach goes further left.
        let t = build_laminar_tree(vec![node(0, 0, 1, -4, 1), node(1, 3, 3, 1, 3)]).unwrap();
        assert_eq!(compute_reachpoints(&t)[1].lr, -4);
    }
}
