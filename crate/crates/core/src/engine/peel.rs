use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::graph::{Graph, Vertex, VertexMapping};

/// A vertex removed during peeling, with the neighbors still present when it
/// was removed. Those are exactly the neighbors colored before it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeeledVertex {
    pub vertex: Vertex,
    pub neighbors: Vec<Vertex>,
}

#[derive(Debug, Clone)]
pub struct Peeling {
    /// Removal order.
    pub stack: Vec<PeeledVertex>,
    /// Residual graph; every vertex has degree ≥ k (exactly k when Δ ≤ k).
    pub core: Graph,
    pub mapping: VertexMapping,
}

/// Repeatedly removes the lowest-id vertex whose current degree is below `k`.
pub fn peel_reducible(g: &Graph, k: usize) -> Peeling {
    let n = g.vertex_count();
    let mut degree: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut queued = vec![false; n];
    let mut heap = BinaryHeap::new();
    for v in g.vertices() {
        if degree[v] < k {
            queued[v] = true;
            heap.push(Reverse(v));
        }
    }

    let mut stack = Vec::new();
    while let Some(Reverse(v)) = heap.pop() {
        removed[v] = true;
        let neighbors: Vec<Vertex> = g.neighbors(v).iter().copied().filter(|&w| !removed[w]).collect();
        for &w in &neighbors {
            degree[w] -= 1;
            if degree[w] < k && !queued[w] {
                queued[w] = true;
                heap.push(Reverse(w));
            }
        }
        stack.push(PeeledVertex { vertex: v, neighbors });
    }

    let gone: Vec<Vertex> = stack.iter().map(|p| p.vertex).collect();
    let (core, mapping) = g.without_vertices(&gone);
    Peeling { stack, core, mapping }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::tests::complete;

    fn order(p: &Peeling) -> Vec<Vertex> {
        p.stack.iter().map(|s| s.vertex).collect()
    }

    #[test]
    fn path_peels_completely() {
        let p3 = Graph::from_edge_list(3, [(0, 1), (1, 2)]).unwrap();
        let p = peel_reducible(&p3, 3);
        assert_eq!(order(&p), [0, 1, 2]);
        assert_eq!(p.stack[0].neighbors, [1]);
        assert_eq!(p.stack[1].neighbors, [2]);
        assert!(p.stack[2].neighbors.is_empty());
        assert_eq!(p.core.vertex_count(), 0);
    }

    #[test]
    fn pendant_on_k4() {
        let mut edges: Vec<_> = complete(4).edges().collect();
        edges.push((0, 4));
        let g = Graph::from_edge_list(5, edges).unwrap();
        let p = peel_reducible(&g, 3);
        assert_eq!(order(&p), [4]);
        assert_eq!(p.core, complete(4));
        assert_eq!(p.mapping.as_slice(), &[0, 1, 2, 3]);
    }

    #[test]
    fn regular_graph_is_its_own_core() {
        let k33 = Graph::from_edge_list(6, (0..3).flat_map(|a| (3..6).map(move |b| (a, b)))).unwrap();
        let p = peel_reducible(&k33, 3);
        assert!(p.stack.is_empty());
        assert_eq!(p.core, k33);
    }

    #[test]
    fn lower_id_candidate_created_later_goes_first() {
        // 0-1-2-3 path plus triangle 3,4,5 with chord-free tail at 5-6
        let g = Graph::from_edge_list(7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 3), (5, 6)]).unwrap();
        let p = peel_reducible(&g, 2);
        // only 0 and 6 start below degree 2; removing 0 exposes 1 before 6
        assert_eq!(order(&p), [0, 1, 2, 6]);
        assert_eq!(p.mapping.as_slice(), &[3, 4, 5]);
    }
}
