//! Command-line front end: `color`, `verify`, `gen` and `bench`.
//!
//! Exit codes: 0 for a coloring (or a successful `verify`, `gen`, `bench`),
//! 2 for an obstruction, 1 for usage, parse, contract or verification errors.

pub mod app;
pub mod report;
pub mod solve;

pub use app::{run, EXIT_COLORING, EXIT_ERROR, EXIT_OBSTRUCTION};
