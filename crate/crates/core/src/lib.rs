//! Certified graph coloring.
//!
//! For a simple graph `G` and a budget `k ≥ Δ(G)`, the engine returns either a
//! proper `k`-coloring or a small certificate that none exists: a `K_{k+1}`
//! when `k ≥ 3`, a chordless odd cycle when `k = 2`. The [`certify`] module
//! checks both kinds of result without trusting the engine.

pub mod certify;
pub mod dimacs;
pub mod engine;
pub mod graph;

pub use dimacs::{parse_dimacs, serialize_dimacs, DimacsError};
pub use engine::{color_with, color_with_stats, ColorOutcome, Coloring, EngineError, Obstruction};
pub use graph::{Graph, GraphError, Vertex, VertexMapping};
