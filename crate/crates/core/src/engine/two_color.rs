use std::collections::{HashMap, VecDeque};

use crate::engine::{ColorOutcome, Coloring, Obstruction};
use crate::graph::{Graph, Vertex};

/// Bipartition by breadth-first layers, or an odd cycle closed by the first
/// same-layer edge found.
///
/// Components are searched from their smallest vertex. The returned cycle is
/// in canonical orientation but may have chords; callers that need an
/// induced cycle run [`shrink_to_induced_odd_cycle`].
pub fn two_color(g: &Graph) -> ColorOutcome {
    const UNSEEN: usize = usize::MAX;
    let n = g.vertex_count();
    let mut side = vec![UNSEEN; n];
    let mut parent = vec![UNSEEN; n];
    let mut depth = vec![0usize; n];
    let mut queue = VecDeque::new();

    for root in 0..n {
        if side[root] != UNSEEN {
            continue;
        }
        side[root] = 0;
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if side[w] == UNSEEN {
                    side[w] = 1 - side[u];
                    parent[w] = u;
                    depth[w] = depth[u] + 1;
                    queue.push_back(w);
                } else if side[w] == side[u] {
                    return ColorOutcome::Obstructed(Obstruction::OddCycle(close_cycle(
                        u, w, &parent, &depth,
                    )));
                }
            }
        }
    }
    ColorOutcome::Colored(Coloring::new(side))
}

// u and w sit on the same BFS layer; walk both up to their common ancestor.
fn close_cycle(u: Vertex, w: Vertex, parent: &[Vertex], depth: &[usize]) -> Vec<Vertex> {
    debug_assert_eq!(depth[u], depth[w]);
    let (mut a, mut b) = (u, w);
    let mut up = vec![a];
    let mut down = vec![b];
    while a != b {
        a = parent[a];
        b = parent[b];
        up.push(a);
        down.push(b);
    }
    // `up` ends at the ancestor; `down` repeats it
    down.pop();
    up.reverse();
    up.extend(down);
    canonical_cycle(up)
}

/// Rotates a cycle to start at its smallest vertex and orients it toward the
/// smaller of that vertex's two neighbors.
pub fn canonical_cycle(mut cycle: Vec<Vertex>) -> Vec<Vertex> {
    if let Some(start) = cycle.iter().enumerate().min_by_key(|&(_, &v)| v).map(|(i, _)| i) {
        cycle.rotate_left(start);
    }
    let len = cycle.len();
    if len >= 3 && cycle[1] > cycle[len - 1] {
        cycle[1..].reverse();
    }
    cycle
}

/// Cuts an odd cycle along chords until it is chordless.
///
/// A chord splits an odd cycle into two shorter cycles of opposite parity;
/// the odd one is kept. The first chord is taken by lowest position, then
/// nearest partner.
pub fn shrink_to_induced_odd_cycle(g: &Graph, cycle: &[Vertex]) -> Vec<Vertex> {
    let mut cycle = cycle.to_vec();
    while let Some((i, j)) = first_chord(g, &cycle) {
        let inner = j - i + 1;
        cycle = if inner % 2 == 1 {
            cycle[i..=j].to_vec()
        } else {
            let mut outer = cycle[j..].to_vec();
            outer.extend_from_slice(&cycle[..=i]);
            outer
        };
    }
    canonical_cycle(cycle)
}

// Positions (i, j), i < j, of the chord with smallest i, then smallest j.
fn first_chord(g: &Graph, cycle: &[Vertex]) -> Option<(usize, usize)> {
    let len = cycle.len();
    let position: HashMap<Vertex, usize> = cycle.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    (0..len).find_map(|i| {
        g.neighbors(cycle[i])
            .iter()
            .filter_map(|w| position.get(w).copied())
            .filter(|&j| j > i + 1 && !(i == 0 && j == len - 1))
            .min()
            .map(|j| (i, j))
    })
}

/// Odd length ≥ 3, no repeats, consecutive vertices adjacent, no chords.
pub(crate) fn is_chordless_odd_cycle(g: &Graph, cycle: &[Vertex]) -> bool {
    let len = cycle.len();
    if len < 3 || len.is_multiple_of(2) || cycle.iter().any(|&v| v >= g.vertex_count()) {
        return false;
    }
    let mut sorted = cycle.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    sorted.len() == len
        && (0..len).all(|i| g.has_edge(cycle[i], cycle[(i + 1) % len]))
        && first_chord(g, cycle).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::tests::cycle;

    #[test]
    fn path_and_empty() {
        let p3 = Graph::from_edge_list(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(two_color(&p3), ColorOutcome::Colored(Coloring::new(vec![0, 1, 0])));
        assert_eq!(
            two_color(&Graph::empty(3)),
            ColorOutcome::Colored(Coloring::new(vec![0, 0, 0]))
        );
    }

    #[test]
    fn c5_cycle() {
        assert_eq!(
            two_color(&cycle(5)),
            ColorOutcome::Obstructed(Obstruction::OddCycle(vec![0, 1, 2, 3, 4]))
        );
    }

    #[test]
    fn odd_cycle_in_later_component() {
        let g = Graph::from_edge_list(5, [(0, 1), (2, 3), (3, 4), (4, 2)]).unwrap();
        assert_eq!(
            two_color(&g),
            ColorOutcome::Obstructed(Obstruction::OddCycle(vec![2, 3, 4]))
        );
    }

    #[test]
    fn canonical_orientation() {
        assert_eq!(canonical_cycle(vec![3, 2, 1, 0, 4]), [0, 1, 2, 3, 4]);
        assert_eq!(canonical_cycle(vec![7, 5, 9]), [5, 7, 9]);
    }

    #[test]
    fn shrink_c5_with_chord() {
        let g = cycle(5).with_edge(0, 2).unwrap();
        assert_eq!(shrink_to_induced_odd_cycle(&g, &[0, 1, 2, 3, 4]), [0, 1, 2]);
    }

    #[test]
    fn shrink_keeps_chordless() {
        let c7 = cycle(7);
        let input = [0, 1, 2, 3, 4, 5, 6];
        assert_eq!(shrink_to_induced_odd_cycle(&c7, &input), input);
    }

    #[test]
    fn shrink_c9_with_two_chords() {
        let g = cycle(9).with_edge(0, 2).unwrap().with_edge(0, 4).unwrap();
        let out = shrink_to_induced_odd_cycle(&g, &(0..9).collect::<Vec<_>>());
        assert!(out.len() == 3 || out.len() == 5);
        assert!(out.iter().all(|&v| v < 9));
        // exhaustive chord check on the output
        for i in 0..out.len() {
            for j in i + 2..out.len() {
                if i == 0 && j == out.len() - 1 {
                    continue;
                }
                assert!(!g.has_edge(out[i], out[j]), "chord {}-{}", out[i], out[j]);
            }
        }
        assert!(is_chordless_odd_cycle(&g, &out));
    }

    #[test]
    fn shrink_keeps_outer_part_when_inner_is_even() {
        // chord 1-4 splits C7 into [1,2,3,4] (even) and [4,5,6,0,1] (odd)
        let g = cycle(7).with_edge(1, 4).unwrap();
        assert_eq!(shrink_to_induced_odd_cycle(&g, &(0..7).collect::<Vec<_>>()), [0, 1, 4, 5, 6]);
    }

    #[test]
    fn chordless_check() {
        assert!(is_chordless_odd_cycle(&cycle(5), &[0, 1, 2, 3, 4]));
        assert!(!is_chordless_odd_cycle(&cycle(6), &[0, 1, 2, 3, 4, 5]));
        assert!(!is_chordless_odd_cycle(&cycle(5), &[0, 2, 1, 3, 4]));
        let g = cycle(5).with_edge(0, 2).unwrap();
        assert!(!is_chordless_odd_cycle(&g, &[0, 1, 2, 3, 4]));
    }
}
