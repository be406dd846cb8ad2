use crate::graph::{Graph, Vertex};

/// Greedy maximal independent set over ascending vertex ids.
pub fn maximal_independent_set(g: &Graph) -> Vec<Vertex> {
    let mut blocked = vec![false; g.vertex_count()];
    let mut set = Vec::new();
    for v in g.vertices() {
        if blocked[v] {
            continue;
        }
        set.push(v);
        for &w in g.neighbors(v) {
            blocked[w] = true;
        }
    }
    set
}
