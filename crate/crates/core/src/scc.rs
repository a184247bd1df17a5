//! Strongly connected components and condensation DAGs.

use fixedbitset::FixedBitSet;

use crate::graph::TransmissionGraph;
use crate::VertexId;

/// Component label per vertex. Labels are a topological numbering of the
/// condensation: every edge between components goes from a smaller to a larger label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SccPartition {
    pub component: Vec<u32>,
    pub count: usize,
}

impl SccPartition {
    /// Member lists per component, each ascending.
    pub fn members(&self) -> Vec<Vec<VertexId>> {
        let mut members = vec![Vec::new(); self.count];
        for (v, &c) in self.component.iter().enumerate() {
            members[c as usize].push(v as VertexId);
        }
        members
    }

    /// Relabels components by their smallest member, for order-insensitive comparison.
    pub fn canonical(&self) -> Vec<u32> {
        let mut first = vec![u32::MAX; self.count];
        for (v, &c) in self.component.iter().enumerate() {
            if first[c as usize] == u32::MAX {
                first[c as usize] = v as u32;
            }
        }
        self.component.iter().map(|&c| first[c as usize]).collect()
    }
}

#[derive(Debug, Clone)]
pub struct Condensation {
    pub partition: SccPartition,
    /// Sorted, duplicate-free DAG successors per component.
    pub dag: Vec<Vec<u32>>,
    /// Components in a topological order (sources first).
    pub topo: Vec<u32>,
}

impl Condensation {
    pub fn component(&self, v: VertexId) -> u32 {
        self.partition.component[v as usize]
    }

    pub fn count(&self) -> usize {
        self.partition.count
    }
}

pub fn condense(g: &TransmissionGraph) -> Condensation {
    condense_adjacency(g.adjacency())
}

/// Tarjan's algorithm, iterative.
pub fn condense_adjacency(adj: &[Vec<VertexId>]) -> Condensation {
    let partition = tarjan(adj);
    let mut dag = vec![Vec::new(); partition.count];
    for (u, list) in adj.iter().enumerate() {
        let cu = partition.component[u];
        for &v in list {
            let cv = partition.component[v as usize];
            if cu != cv {
                dag[cu as usize].push(cv);
            }
        }
    }
    for list in &mut dag {
        list.sort_unstable();
        list.dedup();
    }
    let topo = (0..partition.count as u32).collect();
    Condensation {
        partition,
        dag,
        topo,
    }
}

fn tarjan(adj: &[Vec<VertexId>]) -> SccPartition {
    const UNSEEN: u32 = u32::MAX;
    let n = adj.len();
    let mut index = vec![UNSEEN; n];
    let mut low = vec![0u32; n];
    let mut on_stack = FixedBitSet::with_capacity(n);
    let mut stack: Vec<u32> = Vec::new();
    let mut emitted = vec![UNSEEN; n];
    let mut next_index = 0u32;
    let mut count = 0u32;
    // (vertex, position in its adjacency list)
    let mut call: Vec<(u32, usize)> = Vec::new();

    for root in 0..n as u32 {
        if index[root as usize] != UNSEEN {
            continue;
        }
        call.push((root, 0));
        index[root as usize] = next_index;
        low[root as usize] = next_index;
        next_index += 1;
        stack.push(root);
        on_stack.insert(root as usize);

        while let Some(&mut (v, ref mut pos)) = call.last_mut() {
            let vi = v as usize;
            if let Some(&w) = adj[vi].get(*pos) {
                *pos += 1;
                let wi = w as usize;
                if index[wi] == UNSEEN {
                    index[wi] = next_index;
                    low[wi] = next_index;
                    next_index += 1;
                    stack.push(w);
                    on_stack.insert(wi);
                    call.push((w, 0));
                } else if on_stack.contains(wi) {
                    low[vi] = low[vi].min(index[wi]);
                }
                continue;
            }
            call.pop();
            if let Some(&(parent, _)) = call.last() {
                let pi = parent as usize;
                low[pi] = low[pi].min(low[vi]);
            }
            if low[vi] == index[vi] {
                loop {
                    let w = stack.pop().unwrap();
                    on_stack.set(w as usize, false);
                    emitted[w as usize] = count;
                    if w == v {
                        break;
                    }
                }
                count += 1;
            }
        }
    }
    // Tarjan emits sinks first; flip to a topological numbering.
    let component = emitted.iter().map(|&e| count - 1 - e).collect();
    SccPartition {
        component,
        count: count as usize,
    }
}
