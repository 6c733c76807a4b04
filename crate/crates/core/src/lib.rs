//! Linear forests, shifting and generalized Turán counts.
//!
//! Graphs are simple, labelled `1..=n` with `n <= 64`, and stored as one
//! adjacency bitmask per vertex.

pub mod constructions;
pub mod error;
pub mod forest;
pub mod formulas;
pub mod graph;
pub mod graph6;
pub mod oracle;
pub mod patterns;
pub mod report;
pub mod shifting;

pub use error::{Error, Result};
pub use graph::{BipartiteGraph, Graph};
pub use patterns::{Count, PatternKind, PatternSpec};
