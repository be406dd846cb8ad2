//! List coloring of a connected graph whose lists are as long as the degrees.
//!
//! If some edge `uv` has `L(u) ≠ L(v)`, give `u` a color `α ∈ L(u) ∖ L(v)`.
//! Then `v` keeps its full list while losing a neighbor, so coloring the rest
//! greedily from the far end toward `v` leaves every vertex an uncolored
//! neighbor closer to `v` and leaves `v` itself one spare color. The distance
//! ordering is taken in `G − u`; this needs `G − u` connected, which holds
//! for every vertex of a 2-connected graph (cliques, cycles).

use std::collections::VecDeque;

use thiserror::Error;

use crate::graph::{Graph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ListColoringError {
    #[error("expected {expected} lists, got {got}")]
    ListCountMismatch { expected: usize, got: usize },
    #[error("graph is not connected")]
    NotConnected,
    #[error("vertex {vertex} has a list of {len} colors but degree {degree}")]
    ListTooShort { vertex: Vertex, len: usize, degree: usize },
    #[error("no edge joins two vertices with different lists")]
    NoQualifyingEdge,
    #[error("vertex {vertex} has no list color left")]
    Exhausted { vertex: Vertex },
}

/// Proper assignment with `c(v) ∈ lists[v]` for every `v`.
///
/// Preconditions: `g` connected, `|lists[v]| ≥ deg(v)`, and some edge with
/// differing lists. Success is guaranteed when `g` is additionally
/// 2-connected; otherwise the procedure may report [`ListColoringError::Exhausted`]
/// (e.g. a path whose end lists force a conflict), never an improper result.
pub fn list_color_connected(g: &Graph, lists: &[Vec<usize>]) -> Result<Vec<usize>, ListColoringError> {
    let n = g.vertex_count();
    if lists.len() != n {
        return Err(ListColoringError::ListCountMismatch { expected: n, got: lists.len() });
    }
    if !g.is_connected() {
        return Err(ListColoringError::NotConnected);
    }
    let lists: Vec<Vec<usize>> = lists
        .iter()
        .map(|l| {
            let mut l = l.clone();
            l.sort_unstable();
            l.dedup();
            l
        })
        .collect();
    for v in g.vertices() {
        if lists[v].len() < g.degree(v) {
            return Err(ListColoringError::ListTooShort {
                vertex: v,
                len: lists[v].len(),
                degree: g.degree(v),
            });
        }
    }

    let (u, v, alpha) = pick_start(g, &lists)?;

    let dist = distances_avoiding(g, v, u);
    let mut order: Vec<Vertex> = g.vertices().filter(|&w| w != u && w != v).collect();
    // unreachable vertices (only possible when u is a cut vertex) sort first
    order.sort_by_key(|&w| (std::cmp::Reverse(dist[w]), w));
    order.push(v);

    let mut color: Vec<Option<usize>> = vec![None; n];
    color[u] = Some(alpha);
    for w in order {
        let pick = lists[w]
            .iter()
            .copied()
            .find(|&c| g.neighbors(w).iter().all(|&z| color[z] != Some(c)))
            .ok_or(ListColoringError::Exhausted { vertex: w })?;
        color[w] = Some(pick);
    }
    Ok(color.into_iter().map(|c| c.expect("every vertex assigned")).collect())
}

// First edge (ascending) with differing lists, oriented so L(u) ∖ L(v) ≠ ∅,
// preferring the lower endpoint as u. Orientations whose u disconnects the
// graph are skipped while a non-separating one exists.
fn pick_start(g: &Graph, lists: &[Vec<usize>]) -> Result<(Vertex, Vertex, usize), ListColoringError> {
    let mut fallback = None;
    for (a, b) in g.edges() {
        if lists[a] == lists[b] {
            continue;
        }
        for (u, v) in [(a, b), (b, a)] {
            let Some(alpha) = lists[u].iter().copied().find(|c| lists[v].binary_search(c).is_err()) else {
                continue;
            };
            if connected_without(g, u) {
                return Ok((u, v, alpha));
            }
            fallback.get_or_insert((u, v, alpha));
        }
    }
    fallback.ok_or(ListColoringError::NoQualifyingEdge)
}

fn connected_without(g: &Graph, removed: Vertex) -> bool {
    let Some(start) = g.vertices().find(|&w| w != removed) else {
        return true;
    };
    let dist = distances_avoiding(g, start, removed);
    g.vertices().all(|w| w == removed || dist[w] != usize::MAX)
}

// BFS distances from `source` in g − `removed`; unreachable = usize::MAX.
fn distances_avoiding(g: &Graph, source: Vertex, removed: Vertex) -> Vec<usize> {
    let mut dist = vec![usize::MAX; g.vertex_count()];
    dist[source] = 0;
    let mut queue = VecDeque::from([source]);
    while let Some(a) = queue.pop_front() {
        for &b in g.neighbors(a) {
            if b != removed && dist[b] == usize::MAX {
                dist[b] = dist[a] + 1;
                queue.push_back(b);
            }
        }
    }
    dist
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::tests::{complete, cycle};

    fn respects(g: &Graph, lists: &[Vec<usize>], c: &[usize]) -> bool {
        g.vertices().all(|v| lists[v].contains(&c[v])) && g.edges().all(|(a, b)| c[a] != c[b])
    }

    // all assignments drawn from the lists
    fn brute_force_exists(g: &Graph, lists: &[Vec<usize>]) -> bool {
        fn go(g: &Graph, lists: &[Vec<usize>], c: &mut Vec<usize>) -> bool {
            let v = c.len();
            if v == g.vertex_count() {
                return true;
            }
            for &x in &lists[v] {
                if g.neighbors(v).iter().all(|&w| w >= v || c[w] != x) {
                    c.push(x);
                    if go(g, lists, c) {
                        return true;
                    }
                    c.pop();
                }
            }
            false
        }
        go(g, lists, &mut Vec::new())
    }

    #[test]
    fn triangle_trace() {
        let lists = vec![vec![0, 1], vec![0, 1], vec![1, 2]];
        assert_eq!(list_color_connected(&complete(3), &lists).unwrap(), [0, 1, 2]);
    }

    #[test]
    fn single_edge() {
        let g = complete(2);
        let lists = vec![vec![0], vec![0, 1]];
        assert_eq!(list_color_connected(&g, &lists).unwrap(), [0, 1]);
    }

    #[test]
    fn c5_with_one_different_list() {
        let g = cycle(5);
        let lists = vec![vec![0, 1], vec![0, 1], vec![0, 1], vec![0, 1], vec![1, 2]];
        assert!(brute_force_exists(&g, &lists));
        let c = list_color_connected(&g, &lists).unwrap();
        assert!(respects(&g, &lists, &c));
    }

    #[test]
    fn k4_with_size_three_lists() {
        let g = complete(4);
        let lists = vec![vec![0, 1, 2], vec![0, 1, 2], vec![0, 1, 2], vec![0, 1, 3]];
        assert!(brute_force_exists(&g, &lists));
        let c = list_color_connected(&g, &lists).unwrap();
        assert!(respects(&g, &lists, &c));
    }

    #[test]
    fn contract_errors() {
        let g = complete(3);
        let same = vec![vec![0, 1]; 3];
        assert_eq!(list_color_connected(&g, &same), Err(ListColoringError::NoQualifyingEdge));
        let short = vec![vec![0], vec![0, 1], vec![1, 2]];
        assert!(matches!(
            list_color_connected(&g, &short),
            Err(ListColoringError::ListTooShort { vertex: 0, .. })
        ));
        let split = Graph::from_edge_list(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(
            list_color_connected(&split, &[vec![0], vec![1], vec![0], vec![1]]),
            Err(ListColoringError::NotConnected)
        );
    }

    #[test]
    fn gallai_tree_without_solution_is_refused() {
        // P3 with end lists {0} and {1}: the middle vertex has nothing left
        let p3 = Graph::from_edge_list(3, [(0, 1), (1, 2)]).unwrap();
        let lists = vec![vec![0], vec![0, 1], vec![1]];
        assert!(!brute_force_exists(&p3, &lists));
        assert!(matches!(
            list_color_connected(&p3, &lists),
            Err(ListColoringError::Exhausted { .. })
        ));
    }

    #[test]
    fn path_with_slack_succeeds() {
        let p4 = Graph::from_edge_list(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let lists = vec![vec![0], vec![0, 1], vec![0, 1], vec![0, 1]];
        let c = list_color_connected(&p4, &lists).unwrap();
        assert!(respects(&p4, &lists, &c));
    }
}
