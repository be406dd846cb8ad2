//! How the command line picks budgets.
//!
//! Without `--colors`, each connected component gets its own budget:
//! `max(Δ, 2)` for components with `Δ ≥ 3`, and the optimum for the rest
//! (isolated vertices and paths need at most 2 colors, odd cycles 3).

use brooks_core::engine::two_color;
use brooks_core::{color_with, ColorOutcome, Coloring, EngineError, Graph, Obstruction};
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentSummary {
    /// Smallest vertex id, 0-based.
    pub first_vertex: usize,
    pub size: usize,
    pub max_degree: usize,
    pub budget: usize,
    /// `None` when the run ended in an obstruction before this component
    /// was colored.
    pub colors_used: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solved {
    pub outcome: ColorOutcome,
    /// Budget the outcome is checked against: the largest component budget
    /// for colorings, the certificate's own budget for obstructions.
    pub k: usize,
    /// Total number of connected components in the input.
    pub component_count: usize,
    /// Components in ascending order of smallest vertex, up to and including
    /// the one that produced an obstruction.
    pub components: Vec<ComponentSummary>,
}

/// Budget used to verify an obstruction.
pub fn obstruction_budget(obs: &Obstruction) -> usize {
    match obs {
        Obstruction::Clique(w) => w.len().saturating_sub(1),
        Obstruction::OddCycle(_) => 2,
    }
}

pub fn color_per_component(g: &Graph) -> Result<Solved, EngineError> {
    let mut colors = vec![0usize; g.vertex_count()];
    let mut components = Vec::new();
    let mut k = 2;
    let all = g.connected_components();
    let component_count = all.len();

    for comp in all {
        let (sub, mapping) = g.induced_subgraph(&comp);
        let max_degree = sub.max_degree();
        let (sub_colors, budget) = if max_degree <= 2 {
            match two_color(&sub) {
                ColorOutcome::Colored(c) => (c, 2),
                ColorOutcome::Obstructed(_) => (greedy_ascending(&sub), 3),
            }
        } else {
            match color_with(&sub, max_degree)? {
                ColorOutcome::Colored(c) => (c, max_degree),
                ColorOutcome::Obstructed(obs) => {
                    components.push(ComponentSummary {
                        first_vertex: comp[0],
                        size: comp.len(),
                        max_degree,
                        budget: max_degree,
                        colors_used: None,
                    });
                    let obs = obs.lift(&mapping);
                    return Ok(Solved {
                        k: obstruction_budget(&obs),
                        outcome: ColorOutcome::Obstructed(obs),
                        component_count,
                        components,
                    });
                }
            }
        };
        for (v, &c) in sub_colors.as_slice().iter().enumerate() {
            colors[mapping.to_parent(v)] = c;
        }
        k = k.max(budget);
        components.push(ComponentSummary {
            first_vertex: comp[0],
            size: comp.len(),
            max_degree,
            budget,
            colors_used: Some(sub_colors.colors_used()),
        });
    }

    Ok(Solved {
        outcome: ColorOutcome::Colored(Coloring::new(colors)),
        k,
        component_count,
        components,
    })
}

/// One global budget for the whole graph.
pub fn color_with_budget(g: &Graph, k: usize) -> Result<Solved, EngineError> {
    let outcome = color_with(g, k)?;
    let all = g.connected_components();
    let component_count = all.len();
    let components = all
        .into_iter()
        .map(|comp| ComponentSummary {
            first_vertex: comp[0],
            size: comp.len(),
            max_degree: comp.iter().map(|&v| g.degree(v)).max().unwrap_or(0),
            budget: k,
            colors_used: outcome.coloring().map(|c| {
                let mut used: Vec<usize> = comp.iter().map(|&v| c.color(v)).collect();
                used.sort_unstable();
                used.dedup();
                used.len()
            }),
        })
        .collect();
    let k = match &outcome {
        ColorOutcome::Colored(_) => k,
        ColorOutcome::Obstructed(obs) => obstruction_budget(obs),
    };
    Ok(Solved { outcome, k, component_count, components })
}

// First-fit in id order; at most Δ + 1 colors.
fn greedy_ascending(g: &Graph) -> Coloring {
    let mut colors: Vec<usize> = Vec::with_capacity(g.vertex_count());
    for v in g.vertices() {
        let taken: Vec<usize> = g.neighbors(v).iter().filter(|&&w| w < v).map(|&w| colors[w]).collect();
        colors.push((0..).find(|c| !taken.contains(c)).unwrap());
    }
    Coloring::new(colors)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::from_edge_list(n, edges.iter().copied()).unwrap()
    }

    #[test]
    fn odd_cycle_gets_three() {
        let c5 = graph(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        let s = color_per_component(&c5).unwrap();
        assert_eq!(s.k, 3);
        assert_eq!(s.outcome.coloring().unwrap().colors_used(), 3);
    }

    #[test]
    fn mixed_components() {
        // triangle, path on three, isolated vertex
        let g = graph(7, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5)]);
        let s = color_per_component(&g).unwrap();
        assert_eq!(s.k, 3);
        let budgets: Vec<_> = s.components.iter().map(|c| (c.budget, c.colors_used)).collect();
        assert_eq!(budgets, [(3, Some(3)), (2, Some(2)), (2, Some(1))]);
    }

    #[test]
    fn k4_component_is_an_obstruction() {
        let mut edges = vec![(0, 1)];
        for u in 2..6 {
            for v in u + 1..6 {
                edges.push((u, v));
            }
        }
        let g = graph(6, &edges);
        let s = color_per_component(&g).unwrap();
        assert_eq!(s.outcome, ColorOutcome::Obstructed(Obstruction::Clique(vec![2, 3, 4, 5])));
        assert_eq!(s.k, 3);
        assert_eq!(s.component_count, 2);
        assert_eq!(s.components.len(), 2);
    }

    #[test]
    fn explicit_budget() {
        let c6 = graph(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]);
        let s = color_with_budget(&c6, 2).unwrap();
        assert_eq!(s.outcome.coloring().unwrap().as_slice(), &[0, 1, 0, 1, 0, 1]);
        assert!(matches!(
            color_with_budget(&graph(4, &[(0, 1), (0, 2), (0, 3)]), 2),
            Err(EngineError::DegreeExceedsBudget { .. })
        ));
    }
}
