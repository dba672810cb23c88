//! Exact graph invariants and long-cycle machinery for small tough graphs.

pub mod extension;
pub mod graph;
pub mod harness;
pub mod invariants;
pub mod rational;
pub mod structure;

pub use graph::{Cycle, Graph, Path, Vertex};
pub use invariants::InvariantReport;
pub use rational::ExactRational;
