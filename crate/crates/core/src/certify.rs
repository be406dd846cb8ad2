//! Independent checks and reference tools: result verifiers, brute-force
//! oracles for small graphs, seeded generators and a DSATUR baseline.
//!
//! Nothing here calls into the engine. The verifiers are the trust anchor for
//! every outcome the engine produces.

use std::cmp::Reverse;
use std::collections::{BTreeSet, HashSet};

use rand::seq::SliceRandom;
use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::engine::{Coloring, Obstruction};
use crate::graph::{Graph, Vertex};

/// Largest graph the brute-force oracles accept.
pub const BRUTE_FORCE_LIMIT: usize = 16;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CertifyError {
    #[error("brute force refuses {n} vertices (limit {BRUTE_FORCE_LIMIT})")]
    TooLarge { n: usize },
    #[error("invalid generator spec: {0}")]
    InvalidSpec(String),
    #[error("no simple {d}-regular graph on {n} vertices after {attempts} attempts")]
    RegularGaveUp { n: usize, d: usize, attempts: u64 },
}

/// True iff `colors` covers every vertex, uses only `0..k` and leaves no edge
/// monochromatic.
pub fn verify_coloring(g: &Graph, colors: &[usize], k: usize) -> bool {
    colors.len() == g.vertex_count()
        && colors.iter().all(|&c| c < k)
        && g.edges().all(|(u, v)| colors[u] != colors[v])
}

/// Structural check of a certificate against budget `k`.
///
/// A clique must have exactly `k + 1` distinct, pairwise adjacent vertices.
/// An odd cycle is only a certificate at `k = 2` and must be chordless.
pub fn verify_obstruction(g: &Graph, obs: &Obstruction, k: usize) -> bool {
    let n = g.vertex_count();
    let vs = obs.vertices();
    if vs.iter().any(|&v| v >= n) {
        return false;
    }
    let mut distinct = vs.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    if distinct.len() != vs.len() {
        return false;
    }
    match obs {
        Obstruction::Clique(w) => {
            w.len() == k + 1
                && w.iter()
                    .enumerate()
                    .all(|(i, &a)| w[i + 1..].iter().all(|&b| g.has_edge(a, b)))
        }
        Obstruction::OddCycle(cycle) => {
            let len = cycle.len();
            if k != 2 || len < 3 || len % 2 == 0 {
                return false;
            }
            (0..len).all(|i| {
                (i + 1..len).all(|j| {
                    let consecutive = j == i + 1 || (i == 0 && j == len - 1);
                    g.has_edge(cycle[i], cycle[j]) == consecutive
                })
            })
        }
    }
}

/// Exhaustive backtracking over vertices in ascending order.
pub fn exists_k_coloring_bruteforce(g: &Graph, k: usize) -> Result<bool, CertifyError> {
    let n = g.vertex_count();
    if n > BRUTE_FORCE_LIMIT {
        return Err(CertifyError::TooLarge { n });
    }
    let mut colors = vec![usize::MAX; n];
    Ok(backtrack(g, k, 0, 0, &mut colors))
}

// `used` = number of colors opened so far; a new vertex may open at most one
// more, which skips permutations of color names.
fn backtrack(g: &Graph, k: usize, v: Vertex, used: usize, colors: &mut [usize]) -> bool {
    if v == colors.len() {
        return true;
    }
    for c in 0..k.min(used + 1) {
        if g.neighbors(v).iter().all(|&w| colors[w] != c) {
            colors[v] = c;
            if backtrack(g, k, v + 1, used.max(c + 1), colors) {
                return true;
            }
        }
    }
    colors[v] = usize::MAX;
    false
}

/// Smallest `k` with a proper `k`-coloring; 0 for the empty graph.
pub fn chromatic_number_bruteforce(g: &Graph) -> Result<usize, CertifyError> {
    if g.vertex_count() > BRUTE_FORCE_LIMIT {
        return Err(CertifyError::TooLarge { n: g.vertex_count() });
    }
    for k in 0..=g.vertex_count() {
        if exists_k_coloring_bruteforce(g, k)? {
            return Ok(k);
        }
    }
    unreachable!("n colors always suffice")
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Model {
    /// Each pair independently with probability `p`.
    Gnp { p: f64 },
    /// Uniform-ish `d`-regular graph via random pairing of `n·d` points.
    Regular { d: usize },
    Cycle,
    Complete,
    /// The Petersen graph; `n` must be 10.
    Petersen,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GenSpec {
    pub model: Model,
    pub n: usize,
    pub seed: u64,
}

impl GenSpec {
    pub fn new(model: Model, n: usize, seed: u64) -> Self {
        GenSpec { model, n, seed }
    }

    pub fn validate(&self) -> Result<(), CertifyError> {
        let n = self.n;
        let bad = |msg: String| Err(CertifyError::InvalidSpec(msg));
        match self.model {
            Model::Gnp { p } if !(0.0..=1.0).contains(&p) => bad(format!("p = {p} is outside [0, 1]")),
            Model::Regular { d } if d >= n => bad(format!("degree {d} needs more than {n} vertices")),
            Model::Regular { d } if (n * d) % 2 == 1 => bad(format!("n·d = {} is odd", n * d)),
            Model::Cycle if n < 3 => bad(format!("a cycle needs at least 3 vertices, got {n}")),
            Model::Petersen if n != 10 => bad(format!("the Petersen graph has 10 vertices, got {n}")),
            _ => Ok(()),
        }
    }
}

const REGULAR_ATTEMPTS: u64 = 1000;

/// Deterministic graph for `spec`.
///
/// Randomness comes from `ChaCha8Rng::seed_from_u64(seed)`. G(n, p) draws one
/// `u64` per pair `u < v` in lexicographic order and keeps the edge iff the
/// top 53 bits, read as a fraction of 2^53, are below `p`. The regular model
/// runs attempt `i` on ChaCha stream `i`.
pub fn generate(spec: &GenSpec) -> Result<Graph, CertifyError> {
    spec.validate()?;
    let n = spec.n;
    let graph = match spec.model {
        Model::Gnp { p } => {
            let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    let unit = (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64);
                    if unit < p {
                        edges.push((u, v));
                    }
                }
            }
            Graph::from_edge_list(n, edges)
        }
        Model::Regular { d } => return random_regular(n, d, spec.seed),
        Model::Cycle => Graph::from_edge_list(n, (0..n).map(|i| (i, (i + 1) % n))),
        Model::Complete => Graph::from_edge_list(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))),
        Model::Petersen => {
            let mut edges = Vec::with_capacity(15);
            for i in 0..5 {
                edges.push((i, (i + 1) % 5));
                edges.push((i, i + 5));
                edges.push((5 + i, 5 + (i + 2) % 5));
            }
            Graph::from_edge_list(10, edges)
        }
    };
    Ok(graph.expect("generated edges are in range and loop-free"))
}

fn random_regular(n: usize, d: usize, seed: u64) -> Result<Graph, CertifyError> {
    for attempt in 0..REGULAR_ATTEMPTS {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(attempt);
        if let Some(edges) = pair_points(n, d, &mut rng) {
            return Ok(Graph::from_edge_list(n, edges).expect("pairing yields a simple graph"));
        }
    }
    Err(CertifyError::RegularGaveUp { n, d, attempts: REGULAR_ATTEMPTS })
}

// Pairs up the n·d points one random pair at a time, rejecting pairs that
// would create a loop or a repeated edge. Gives up (None) when no acceptable
// pair remains.
fn pair_points(n: usize, d: usize, rng: &mut ChaCha8Rng) -> Option<Vec<(Vertex, Vertex)>> {
    const QUICK_TRIES: usize = 64;
    let mut free: Vec<usize> = (0..n * d).collect();
    free.shuffle(rng);
    let mut adjacent: Vec<HashSet<Vertex>> = vec![HashSet::new(); n];
    let mut edges = Vec::with_capacity(n * d / 2);
    let fits = |adjacent: &[HashSet<Vertex>], a: usize, b: usize| {
        let (u, v) = (a / d, b / d);
        u != v && !adjacent[u].contains(&v)
    };

    while !free.is_empty() {
        let len = free.len();
        let mut chosen = None;
        for _ in 0..QUICK_TRIES {
            let (i, j) = (rng.gen_range(0..len), rng.gen_range(0..len));
            if i != j && fits(&adjacent, free[i], free[j]) {
                chosen = Some((i, j));
                break;
            }
        }
        if chosen.is_none() {
            let options: Vec<(usize, usize)> = (0..len)
                .flat_map(|i| (i + 1..len).map(move |j| (i, j)))
                .filter(|&(i, j)| fits(&adjacent, free[i], free[j]))
                .collect();
            if options.is_empty() {
                return None;
            }
            chosen = Some(options[rng.gen_range(0..options.len())]);
        }
        let (i, j) = chosen.expect("pair chosen");
        let (u, v) = (free[i] / d, free[j] / d);
        adjacent[u].insert(v);
        adjacent[v].insert(u);
        edges.push((u, v));
        let (hi, lo) = if i > j { (i, j) } else { (j, i) };
        free.swap_remove(hi);
        free.swap_remove(lo);
    }
    Some(edges)
}

/// DSATUR: repeatedly color the uncolored vertex with the most distinct
/// neighbor colors (ties: higher degree, then lower id) with the smallest
/// free color.
pub fn dsatur_baseline(g: &Graph) -> Coloring {
    let n = g.vertex_count();
    let mut colors: Vec<Option<usize>> = vec![None; n];
    let mut seen: Vec<HashSet<usize>> = vec![HashSet::new(); n];
    let key = |v: Vertex, sat: usize| (Reverse(sat), Reverse(g.degree(v)), v);
    let mut queue: BTreeSet<(Reverse<usize>, Reverse<usize>, Vertex)> =
        g.vertices().map(|v| key(v, 0)).collect();

    while let Some((_, _, v)) = queue.pop_first() {
        let c = (0..).find(|c| !seen[v].contains(c)).expect("unbounded range");
        colors[v] = Some(c);
        for &w in g.neighbors(v) {
            if colors[w].is_none() && !seen[w].contains(&c) {
                queue.remove(&key(w, seen[w].len()));
                seen[w].insert(c);
                queue.insert(key(w, seen[w].len()));
            }
        }
    }
    Coloring::new(colors.into_iter().map(|c| c.expect("all colored")).collect())
}
