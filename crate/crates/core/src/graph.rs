//! Immutable simple undirected graphs on dense `0..n` vertex ids.
//!
//! Every recursive step of the engine works on an induced subgraph of its
//! caller's graph. [`Graph::induced_subgraph`] renumbers the kept vertices in
//! ascending parent order and hands back a [`VertexMapping`] so colorings and
//! certificates can be lifted back up. Because the renumbering is monotone,
//! any ordering-based canonical form survives lifting unchanged.

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

/// Vertex identifier, always in `0..n` for the graph it belongs to.
pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("vertex {vertex} out of range for graph with {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
}

/// Simple undirected graph with sorted adjacency lists.
///
/// Adjacency is symmetric, loop-free and deduplicated; `has_edge` is a binary
/// search over the smaller endpoint's list.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    edge_count: usize,
}

impl Graph {
    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            edge_count: 0,
        }
    }

    /// Builds a graph from unordered pairs. Duplicates collapse; self-loops
    /// and out-of-range ids are rejected.
    pub fn from_edge_list<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        Ok(Self::from_raw_adjacency(adj))
    }

    /// Sorts and deduplicates each list. Caller guarantees symmetry, range and
    /// absence of loops.
    fn from_raw_adjacency(mut adj: Vec<Vec<Vertex>>) -> Self {
        let mut degree_sum = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            degree_sum += list.len();
        }
        Graph {
            adj,
            edge_count: degree_sum / 2,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.adj.len()
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    /// Maximum degree, 0 for the empty graph.
    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        let (a, b) = if self.adj[u].len() <= self.adj[v].len() {
            (u, v)
        } else {
            (v, u)
        };
        self.adj[a].binary_search(&b).is_ok()
    }

    /// All edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| {
            let start = list.partition_point(|&w| w <= u);
            list[start..].iter().map(move |&v| (u, v))
        })
    }

    /// Copy of this graph with the edge `uv` added (no-op if present).
    pub fn with_edge(&self, u: Vertex, v: Vertex) -> Result<Self, GraphError> {
        let n = self.vertex_count();
        for w in [u, v] {
            if w >= n {
                return Err(GraphError::VertexOutOfRange { vertex: w, n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if self.has_edge(u, v) {
            return Ok(self.clone());
        }
        let mut g = self.clone();
        for (a, b) in [(u, v), (v, u)] {
            let pos = g.adj[a].partition_point(|&w| w < b);
            g.adj[a].insert(pos, b);
        }
        g.edge_count += 1;
        Ok(g)
    }

    /// Subgraph induced by `subset`, renumbered ascending by parent id.
    ///
    /// `subset` may be in any order and may contain duplicates. Panics if a
    /// member is out of range.
    pub fn induced_subgraph(&self, subset: &[Vertex]) -> (Graph, VertexMapping) {
        let mut keep: Vec<Vertex> = subset.to_vec();
        keep.sort_unstable();
        keep.dedup();
        self.induced_on_sorted(keep)
    }

    /// Subgraph induced by every vertex *not* in `removed`.
    pub fn without_vertices(&self, removed: &[Vertex]) -> (Graph, VertexMapping) {
        let mut drop = vec![false; self.vertex_count()];
        for &v in removed {
            drop[v] = true;
        }
        let keep = self.vertices().filter(|&v| !drop[v]).collect();
        self.induced_on_sorted(keep)
    }

    fn induced_on_sorted(&self, keep: Vec<Vertex>) -> (Graph, VertexMapping) {
        const ABSENT: usize = usize::MAX;
        let mut local = vec![ABSENT; self.vertex_count()];
        for (i, &v) in keep.iter().enumerate() {
            local[v] = i;
        }
        let adj = keep
            .iter()
            .map(|&v| {
                // parent lists are sorted and `local` is monotone, so the
                // child lists come out sorted as well
                self.adj[v]
                    .iter()
                    .filter_map(|&w| match local[w] {
                        ABSENT => None,
                        i => Some(i),
                    })
                    .collect::<Vec<_>>()
            })
            .collect::<Vec<_>>();
        let edge_count = adj.iter().map(Vec::len).sum::<usize>() / 2;
        (
            Graph { adj, edge_count },
            VertexMapping { to_parent: keep },
        )
    }

    /// Open neighborhood of a vertex set: vertices outside `set` adjacent to
    /// some member. Sorted ascending.
    pub fn neighborhood_of_set(&self, set: &[Vertex]) -> Vec<Vertex> {
        let mut inside = vec![false; self.vertex_count()];
        for &t in set {
            inside[t] = true;
        }
        let mut seen = vec![false; self.vertex_count()];
        let mut out = Vec::new();
        for &t in set {
            for &w in &self.adj[t] {
                if !inside[w] && !seen[w] {
                    seen[w] = true;
                    out.push(w);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Vertex sets of the connected components, each sorted, ordered by
    /// smallest member.
    pub fn connected_components(&self) -> Vec<Vec<Vertex>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut components = Vec::new();
        let mut queue = VecDeque::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            queue.push_back(start);
            let mut comp = Vec::new();
            while let Some(v) = queue.pop_front() {
                comp.push(v);
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            components.push(comp);
        }
        components
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count() <= 1 || self.connected_components().len() == 1
    }

    /// True iff every pair of distinct members is adjacent.
    pub fn is_clique(&self, set: &[Vertex]) -> bool {
        set.iter().enumerate().all(|(i, &u)| {
            set[i + 1..]
                .iter()
                .all(|&v| u != v && self.has_edge(u, v))
        })
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.vertex_count())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Injective map from a subgraph's vertex ids to its parent's ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexMapping {
    to_parent: Vec<Vertex>,
}

impl VertexMapping {
    pub fn identity(n: usize) -> Self {
        VertexMapping {
            to_parent: (0..n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.to_parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.to_parent.is_empty()
    }

    pub fn to_parent(&self, v: Vertex) -> Vertex {
        self.to_parent[v]
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.to_parent
    }

    /// Maps every id in `vertices` to the parent.
    pub fn lift(&self, vertices: &[Vertex]) -> Vec<Vertex> {
        vertices.iter().map(|&v| self.to_parent[v]).collect()
    }

    /// `self` maps child → middle, `outer` maps middle → top.
    pub fn then(&self, outer: &VertexMapping) -> VertexMapping {
        VertexMapping {
            to_parent: outer.lift(&self.to_parent),
        }
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    pub fn complete(n: usize) -> Graph {
        Graph::from_edge_list(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    pub fn cycle(n: usize) -> Graph {
        Graph::from_edge_list(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn complete_graph_from_pairs() {
        let k4 = Graph::from_edge_list(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert!(k4.vertices().all(|v| k4.degree(v) == 3));
        assert_eq!(k4.edge_count(), 6);
    }

    #[test]
    fn path_degrees_and_dedup() {
        let p3 = Graph::from_edge_list(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(p3.vertices().map(|v| p3.degree(v)).collect::<Vec<_>>(), [1, 2, 1]);

        let e = Graph::from_edge_list(2, [(0, 1), (0, 1), (1, 0)]).unwrap();
        assert_eq!(e.edge_count(), 1);
        assert_eq!(e.neighbors(0), &[1]);
    }

    #[test]
    fn rejects_loops_and_range() {
        assert_eq!(Graph::from_edge_list(3, [(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert_eq!(
            Graph::from_edge_list(3, [(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 })
        );
    }

    #[test]
    fn induced_subgraphs() {
        let (p, m) = cycle(5).induced_subgraph(&[2, 0, 1]);
        assert_eq!(p.edges().collect::<Vec<_>>(), [(0, 1), (1, 2)]);
        assert_eq!(m.as_slice(), &[0, 1, 2]);

        let (e, m) = complete(4).induced_subgraph(&[3, 1]);
        assert_eq!(e.edges().collect::<Vec<_>>(), [(0, 1)]);
        assert_eq!(m.as_slice(), &[1, 3]);

        let (g, m) = complete(4).induced_subgraph(&[]);
        assert_eq!(g.vertex_count(), 0);
        assert!(m.is_empty());
    }

    #[test]
    fn without_vertices_is_complement() {
        let c5 = cycle(5);
        let (a, ma) = c5.without_vertices(&[3, 4]);
        let (b, mb) = c5.induced_subgraph(&[0, 1, 2]);
        assert_eq!(a, b);
        assert_eq!(ma, mb);
    }

    #[test]
    fn neighborhoods() {
        assert_eq!(complete(4).neighborhood_of_set(&[0, 1, 2]), [3]);
        let p3 = Graph::from_edge_list(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(p3.neighborhood_of_set(&[1]), [0, 2]);
        assert!(p3.neighborhood_of_set(&[0, 1, 2]).is_empty());
    }

    #[test]
    fn components() {
        let two = Graph::from_edge_list(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert_eq!(two.connected_components(), vec![vec![0, 1, 2], vec![3, 4, 5]]);
        assert_eq!(Graph::empty(3).connected_components(), vec![vec![0], vec![1], vec![2]]);
        assert_eq!(cycle(5).connected_components(), vec![vec![0, 1, 2, 3, 4]]);
    }

    #[test]
    fn cliques() {
        assert!(complete(4).is_clique(&[0, 1, 2, 3]));
        let k4e = Graph::from_edge_list(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        assert!(!k4e.is_clique(&[1, 2, 3]));
        assert!(k4e.is_clique(&[2]));
        assert!(!k4e.is_clique(&[1, 1]));
    }

    #[test]
    fn with_edge_keeps_sorted() {
        let p = Graph::from_edge_list(4, [(0, 1), (2, 3)]).unwrap();
        let q = p.with_edge(3, 0).unwrap();
        assert_eq!(q.neighbors(0), &[1, 3]);
        assert_eq!(q.edge_count(), 3);
        assert_eq!(q.with_edge(0, 3).unwrap(), q);
    }

    #[test]
    fn mapping_composition() {
        let g = cycle(6);
        let (a, ma) = g.without_vertices(&[0]);
        let (_, mb) = a.without_vertices(&[0]);
        assert_eq!(mb.then(&ma).as_slice(), &[2, 3, 4, 5]);
    }
}
