//! Completing a partial coloring of a `k`-regular component over a small
//! leftover structure.

use crate::engine::{invariant, list_color_connected, Coloring, EngineError, PartialColoring};
use crate::graph::{Graph, Vertex};

/// Finishes a coloring of `c` over the obstruction vertex set `t`.
///
/// Every vertex outside `t` must be colored. Each `t`-vertex loses the colors
/// of its outside neighbors from `0..k`; in a `k`-regular `c` with `t` a
/// `K_k` or a chordless odd cycle that leaves exactly `deg_t` colors, and two
/// attachments with distinct colors make some pair of lists differ.
pub fn extend_over_t(
    c: &Graph,
    k: usize,
    t: &[Vertex],
    partial: &PartialColoring,
) -> Result<Coloring, EngineError> {
    if t.len() < 3 {
        return Err(invariant(format!("obstruction set of size {} is below 3", t.len())));
    }
    if partial.len() != c.vertex_count() {
        return Err(invariant("partial coloring length differs from graph order"));
    }
    let (inner, mapping) = c.induced_subgraph(t);
    let mut in_t = vec![false; c.vertex_count()];
    for &v in t {
        in_t[v] = true;
    }
    if let Some(v) = c.vertices().find(|&v| !in_t[v] && partial.get(v).is_none()) {
        return Err(invariant(format!("vertex {v} outside the obstruction is uncolored")));
    }

    let lists: Vec<Vec<usize>> = mapping
        .as_slice()
        .iter()
        .map(|&v| {
            let mut available = vec![true; k];
            for &w in c.neighbors(v) {
                if !in_t[w] {
                    if let Some(col) = partial.get(w).filter(|&col| col < k) {
                        available[col] = false;
                    }
                }
            }
            (0..k).filter(|&col| available[col]).collect()
        })
        .collect();

    let assigned = list_color_connected(&inner, &lists)
        .map_err(|e| invariant(format!("extension over obstruction failed: {e}")))?;

    let mut full = partial.clone();
    for (local, col) in assigned.into_iter().enumerate() {
        full.set(mapping.to_parent(local), col);
    }
    full.complete()
        .ok_or_else(|| invariant("extension over obstruction left a vertex uncolored"))
}

/// Finishes a coloring of `c` over `d`, a `K_{k+1}` minus the edge `xy`.
///
/// `x` and `y` have one outside neighbor each, so at most two colors are
/// forbidden for the pair; they share the smallest color free for both. The
/// rest of `d` then sees at most `k − 1` distinct colors per vertex.
pub fn extend_over_d(
    c: &Graph,
    k: usize,
    d: &[Vertex],
    x: Vertex,
    y: Vertex,
    partial: &PartialColoring,
) -> Result<Coloring, EngineError> {
    if k < 3 || d.len() != k + 1 {
        return Err(invariant(format!("D has {} vertices at budget {k}", d.len())));
    }
    if partial.len() != c.vertex_count() {
        return Err(invariant("partial coloring length differs from graph order"));
    }
    if x == y || !d.contains(&x) || !d.contains(&y) {
        return Err(invariant("x and y must be distinct members of D"));
    }
    if c.has_edge(x, y) {
        return Err(invariant(format!("D contains the edge {x}-{y} it should miss")));
    }
    let rest: Vec<Vertex> = {
        let mut r: Vec<Vertex> = d.iter().copied().filter(|&v| v != x && v != y).collect();
        r.sort_unstable();
        r
    };
    for (i, &a) in d.iter().enumerate() {
        for &b in &d[i + 1..] {
            if (a, b) != (x, y) && (a, b) != (y, x) && !c.has_edge(a, b) {
                return Err(invariant(format!("D is missing edge {a}-{b}")));
            }
        }
    }
    let mut in_d = vec![false; c.vertex_count()];
    for &v in d {
        in_d[v] = true;
    }
    if let Some(v) = c.vertices().find(|&v| !in_d[v] && partial.get(v).is_none()) {
        return Err(invariant(format!("vertex {v} outside D is uncolored")));
    }

    let mut full = partial.clone();
    let mut forbidden = vec![false; k];
    for end in [x, y] {
        for &w in c.neighbors(end) {
            if !in_d[w] {
                if let Some(col) = partial.get(w).filter(|&col| col < k) {
                    forbidden[col] = true;
                }
            }
        }
    }
    let shared = forbidden
        .iter()
        .position(|&f| !f)
        .ok_or_else(|| invariant("no common color for x and y"))?;
    full.set(x, shared);
    full.set(y, shared);
    // colors of x, y and everything outside D are fixed now; D ∖ {x, y}
    // is colored in ascending id order
    let mut colored_in_d = vec![false; c.vertex_count()];
    colored_in_d[x] = true;
    colored_in_d[y] = true;
    for v in rest {
        let mut taken = vec![false; k];
        for &w in c.neighbors(v) {
            if !in_d[w] || colored_in_d[w] {
                if let Some(col) = full.get(w).filter(|&col| col < k) {
                    taken[col] = true;
                }
            }
        }
        let col = taken
            .iter()
            .position(|&t| !t)
            .ok_or_else(|| invariant(format!("vertex {v} of D has no free color")))?;
        full.set(v, col);
        colored_in_d[v] = true;
    }
    full.complete()
        .ok_or_else(|| invariant("extension over D left a vertex uncolored"))
}
