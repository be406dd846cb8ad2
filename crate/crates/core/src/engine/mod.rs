//! Recursive coloring engine.
//!
//! Given a graph `G` and a budget `k` with `Δ(G) ≤ k`, [`color_with`] returns
//! either a proper coloring with colors in `0..k` or a certificate that none
//! exists: a clique on `k + 1` vertices when `k ≥ 3`, a chordless odd cycle
//! when `k = 2`.
//!
//! The recursion:
//!
//! 1. Peel vertices of degree `< k`; they are colored greedily at the end,
//!    in reverse removal order, and always find a free color.
//! 2. Each component of the remaining `k`-regular core is handled by
//!    [`resolve_regular_component`]: take a maximal independent set `M`,
//!    color `C − M` with `k − 1` colors and give `M` the last color. If that
//!    fails the sub-call hands back an obstruction `T` (a `K_k`, or an odd
//!    cycle when `k = 3`).
//! 3. If all of `T` hangs off a single vertex `w`, `T + w` is a `K_{k+1}`.
//!    Otherwise pick two attachments `x < y`, color `C − T` (with `xy` forced
//!    to differ) and finish `T` by list coloring. If the forced edge creates a
//!    `K_{k+1}`, that clique minus `xy` is colored with `x` and `y` equal.
//!
//! Cliques are never searched for; they only surface as certificates bubbled
//! up from the recursion.

mod extend;
mod list_coloring;
mod mis;
mod peel;
mod two_color;

use thiserror::Error;

use crate::graph::{Graph, Vertex, VertexMapping};

pub use extend::{extend_over_d, extend_over_t};
pub use list_coloring::{list_color_connected, ListColoringError};
pub use mis::maximal_independent_set;
pub use peel::{peel_reducible, PeeledVertex, Peeling};
pub use two_color::{canonical_cycle, shrink_to_induced_odd_cycle, two_color};

/// Color assignment covering every vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coloring(Vec<usize>);

impl Coloring {
    pub fn new(colors: Vec<usize>) -> Self {
        Coloring(colors)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn color(&self, v: Vertex) -> usize {
        self.0[v]
    }

    /// Number of distinct colors that actually appear.
    pub fn colors_used(&self) -> usize {
        let mut seen: Vec<usize> = self.0.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }

    fn is_proper_within(&self, g: &Graph, k: usize) -> bool {
        self.0.len() == g.vertex_count()
            && self.0.iter().all(|&c| c < k)
            && g.edges().all(|(u, v)| self.0[u] != self.0[v])
    }
}

/// Coloring under construction; `None` marks an uncolored vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialColoring(Vec<Option<usize>>);

impl PartialColoring {
    pub fn uncolored(n: usize) -> Self {
        PartialColoring(vec![None; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, v: Vertex) -> Option<usize> {
        self.0[v]
    }

    pub fn set(&mut self, v: Vertex, color: usize) {
        self.0[v] = Some(color);
    }

    /// Copies a subgraph's coloring onto its parent ids.
    pub fn set_lifted(&mut self, sub: &Coloring, mapping: &VertexMapping) {
        for (v, &c) in sub.as_slice().iter().enumerate() {
            self.0[mapping.to_parent(v)] = Some(c);
        }
    }

    /// `Some` once every vertex is colored.
    pub fn complete(self) -> Option<Coloring> {
        self.0.into_iter().collect::<Option<Vec<_>>>().map(Coloring)
    }
}

/// Certificate that no coloring within the budget exists.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Obstruction {
    /// `k + 1` pairwise adjacent vertices, sorted ascending.
    Clique(Vec<Vertex>),
    /// Chordless odd cycle, starting at its smallest vertex and walked
    /// toward the smaller of that vertex's two cycle neighbors.
    OddCycle(Vec<Vertex>),
}

impl Obstruction {
    pub fn vertices(&self) -> &[Vertex] {
        match self {
            Obstruction::Clique(v) | Obstruction::OddCycle(v) => v,
        }
    }

    /// Renames vertices through `mapping`. Induced-subgraph mappings are
    /// monotone, so sortedness and cycle orientation are preserved.
    pub fn lift(&self, mapping: &VertexMapping) -> Obstruction {
        match self {
            Obstruction::Clique(v) => Obstruction::Clique(mapping.lift(v)),
            Obstruction::OddCycle(v) => Obstruction::OddCycle(mapping.lift(v)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ColorOutcome {
    Colored(Coloring),
    Obstructed(Obstruction),
}

impl ColorOutcome {
    pub fn is_colored(&self) -> bool {
        matches!(self, ColorOutcome::Colored(_))
    }

    pub fn coloring(&self) -> Option<&Coloring> {
        match self {
            ColorOutcome::Colored(c) => Some(c),
            ColorOutcome::Obstructed(_) => None,
        }
    }

    pub fn obstruction(&self) -> Option<&Obstruction> {
        match self {
            ColorOutcome::Colored(_) => None,
            ColorOutcome::Obstructed(o) => Some(o),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error("color budget {k} is below 2")]
    BudgetTooSmall { k: usize },
    #[error("maximum degree {max_degree} exceeds color budget {k}")]
    DegreeExceedsBudget { max_degree: usize, k: usize },
    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),
}

pub(crate) fn invariant(msg: impl Into<String>) -> EngineError {
    EngineError::InvariantViolation(msg.into())
}

/// Recursion counters for one top-level call.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct EngineStats {
    /// Number of `color_with` invocations, including the top-level one.
    pub calls: u64,
    /// Deepest nesting of `color_with` invocations (top level = 1).
    pub max_depth: usize,
    /// Regular components finished by list coloring over the obstruction.
    pub obstruction_extensions: u64,
    /// Regular components finished with `x` and `y` sharing a color.
    pub shared_color_patches: u64,
}

/// Colors `g` within `k` colors or returns a certificate that it cannot be.
pub fn color_with(g: &Graph, k: usize) -> Result<ColorOutcome, EngineError> {
    Engine::new().color_with(g, k)
}

/// Like [`color_with`], also reporting recursion counters.
pub fn color_with_stats(g: &Graph, k: usize) -> Result<(ColorOutcome, EngineStats), EngineError> {
    let mut engine = Engine::new();
    let outcome = engine.color_with(g, k)?;
    Ok((outcome, engine.stats()))
}

/// Handles one connected `k`-regular component (`k ≥ 3`).
pub fn resolve_regular_component(c: &Graph, k: usize) -> Result<ColorOutcome, EngineError> {
    if k < 3 {
        return Err(EngineError::BudgetTooSmall { k });
    }
    if !c.is_connected() || c.vertices().any(|v| c.degree(v) != k) {
        return Err(invariant(format!("component is not connected and {k}-regular")));
    }
    let mut engine = Engine::new();
    let outcome = engine.resolve_regular_component(c, k)?;
    engine.check_outcome(c, k, &outcome)?;
    Ok(outcome)
}

/// Reusable engine carrying recursion statistics.
#[derive(Debug, Default)]
pub struct Engine {
    depth: usize,
    stats: EngineStats,
}

// Stack headroom kept free before recursing, and the size of each fresh
// segment when it runs out. Recursion depth can be linear in `n`.
const STACK_RED_ZONE: usize = 256 * 1024;
const STACK_SEGMENT: usize = 16 * 1024 * 1024;

impl Engine {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn stats(&self) -> EngineStats {
        self.stats
    }

    /// Checked entry point; the returned outcome is re-verified before it is
    /// handed out.
    pub fn color_with(&mut self, g: &Graph, k: usize) -> Result<ColorOutcome, EngineError> {
        if k < 2 {
            return Err(EngineError::BudgetTooSmall { k });
        }
        let max_degree = g.max_degree();
        if max_degree > k {
            return Err(EngineError::DegreeExceedsBudget { max_degree, k });
        }
        let outcome = self.recurse(g, k)?;
        self.check_outcome(g, k, &outcome)?;
        Ok(outcome)
    }

    fn check_outcome(&self, g: &Graph, k: usize, outcome: &ColorOutcome) -> Result<(), EngineError> {
        let ok = match outcome {
            ColorOutcome::Colored(c) => c.is_proper_within(g, k),
            ColorOutcome::Obstructed(Obstruction::Clique(w)) => {
                k >= 3 && w.len() == k + 1 && g.is_clique(w)
            }
            ColorOutcome::Obstructed(Obstruction::OddCycle(cycle)) => {
                k == 2 && two_color::is_chordless_odd_cycle(g, cycle)
            }
        };
        if ok {
            Ok(())
        } else {
            Err(invariant(format!("engine produced an unverifiable outcome at k = {k}")))
        }
    }

    fn recurse(&mut self, g: &Graph, k: usize) -> Result<ColorOutcome, EngineError> {
        stacker::maybe_grow(STACK_RED_ZONE, STACK_SEGMENT, || {
            self.depth += 1;
            self.stats.calls += 1;
            self.stats.max_depth = self.stats.max_depth.max(self.depth);
            let result = self.color_step(g, k);
            self.depth -= 1;
            result
        })
    }

    fn color_step(&mut self, g: &Graph, k: usize) -> Result<ColorOutcome, EngineError> {
        if g.max_degree() > k || k < 2 {
            return Err(invariant(format!(
                "recursive call with Δ = {} and k = {k}",
                g.max_degree()
            )));
        }
        if g.is_empty() {
            return Ok(ColorOutcome::Colored(Coloring::new(Vec::new())));
        }
        if k == 2 {
            return Ok(match two_color(g) {
                ColorOutcome::Obstructed(Obstruction::OddCycle(cycle)) => {
                    ColorOutcome::Obstructed(Obstruction::OddCycle(shrink_to_induced_odd_cycle(g, &cycle)))
                }
                other => other,
            });
        }

        let Peeling { stack, core, mapping } = peel_reducible(g, k);
        let mut colors = PartialColoring::uncolored(g.vertex_count());

        for component in core.connected_components() {
            let (sub, sub_map) = core.induced_subgraph(&component);
            let to_g = sub_map.then(&mapping);
            match self.resolve_regular_component(&sub, k)? {
                ColorOutcome::Colored(c) => colors.set_lifted(&c, &to_g),
                ColorOutcome::Obstructed(obs) => return Ok(ColorOutcome::Obstructed(obs.lift(&to_g))),
            }
        }

        let mut taken = vec![false; k];
        for peeled in stack.iter().rev() {
            if peeled.neighbors.len() >= k {
                return Err(invariant(format!(
                    "peeled vertex {} has {} remaining neighbors at budget {k}",
                    peeled.vertex,
                    peeled.neighbors.len()
                )));
            }
            let neighbor_colors: Vec<usize> = peeled
                .neighbors
                .iter()
                .map(|&w| colors.get(w).ok_or_else(|| invariant("peeled neighbor left uncolored")))
                .collect::<Result<_, _>>()?;
            for &c in &neighbor_colors {
                taken[c] = true;
            }
            let free = taken.iter().position(|&t| !t).expect("fewer than k neighbors");
            for &c in &neighbor_colors {
                taken[c] = false;
            }
            colors.set(peeled.vertex, free);
        }

        colors
            .complete()
            .map(ColorOutcome::Colored)
            .ok_or_else(|| invariant("vertex left uncolored after peel extension"))
    }

    fn resolve_regular_component(&mut self, c: &Graph, k: usize) -> Result<ColorOutcome, EngineError> {
        // (a) M-step: C − M has max degree ≤ k − 1 because M is maximal.
        let m = maximal_independent_set(c);
        let (rest, rest_map) = c.without_vertices(&m);
        let t = match self.recurse(&rest, k - 1)? {
            ColorOutcome::Colored(sub) => {
                // (b) sub-coloring uses 0..k-1; M takes the last color
                let mut colors = PartialColoring::uncolored(c.vertex_count());
                colors.set_lifted(&sub, &rest_map);
                for &v in &m {
                    colors.set(v, k - 1);
                }
                return colors
                    .complete()
                    .map(ColorOutcome::Colored)
                    .ok_or_else(|| invariant("M-step left a vertex uncolored"));
            }
            // (c) obstruction T: a K_k, or a chordless odd cycle when k = 3
            ColorOutcome::Obstructed(obs) => obs.lift(&rest_map),
        };
        let t_set = t.vertices().to_vec();

        // (d) a single attachment closes T into a K_{k+1}
        let attachments = c.neighborhood_of_set(&t_set);
        match attachments.len() {
            0 => return Err(invariant("obstruction has no outside neighbor in a connected component")),
            1 => {
                let mut clique = t_set.clone();
                clique.push(attachments[0]);
                clique.sort_unstable();
                if clique.len() != k + 1 || !c.is_clique(&clique) {
                    return Err(invariant(format!(
                        "single-attachment closure of {t:?} is not a K_{}",
                        k + 1
                    )));
                }
                return Ok(ColorOutcome::Obstructed(Obstruction::Clique(clique)));
            }
            _ => {}
        }

        // (e) H = C − T, plus xy when absent
        let (x, y) = (attachments[0], attachments[1]);
        let (h_base, h_map) = c.without_vertices(&t_set);
        let local = |v: Vertex| h_map.as_slice().binary_search(&v).expect("attachment outside T");
        let xy_added = !c.has_edge(x, y);
        let h = if xy_added {
            h_base
                .with_edge(local(x), local(y))
                .map_err(|e| invariant(e.to_string()))?
        } else {
            h_base
        };

        // (f)
        match self.recurse(&h, k)? {
            ColorOutcome::Colored(sub) => {
                let mut partial = PartialColoring::uncolored(c.vertex_count());
                partial.set_lifted(&sub, &h_map);
                self.stats.obstruction_extensions += 1;
                extend_over_t(c, k, &t_set, &partial).map(ColorOutcome::Colored)
            }
            ColorOutcome::Obstructed(w) => {
                let w = w.lift(&h_map);
                let d = w.vertices().to_vec();
                if !(xy_added && d.contains(&x) && d.contains(&y)) {
                    // every edge of W is an edge of C
                    return Ok(ColorOutcome::Obstructed(w));
                }
                // D = W is K_{k+1} − xy inside C
                let (outside, outside_map) = c.without_vertices(&d);
                match self.recurse(&outside, k)? {
                    ColorOutcome::Obstructed(obs) => Ok(ColorOutcome::Obstructed(obs.lift(&outside_map))),
                    ColorOutcome::Colored(sub) => {
                        let mut partial = PartialColoring::uncolored(c.vertex_count());
                        partial.set_lifted(&sub, &outside_map);
                        self.stats.shared_color_patches += 1;
                        extend_over_d(c, k, &d, x, y, &partial).map(ColorOutcome::Colored)
                    }
                }
            }
        }
    }
}
