//! Exact pursuit-game solvers and certificate checkers for directed width
//! measures: treewidth, DAG-width, Kelly-width, directed pathwidth,
//! entanglement and clique-width.

pub mod cliquewidth;
pub mod families;
pub mod graph;
pub mod pursuit;
pub mod report;

pub use graph::{Graph, GraphError, VertexSet};
pub use pursuit::{GameConfig, MoveSet, SolveError, SolveOutcome, Variant, Winner, Witness};
