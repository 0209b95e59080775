//! Exact solver, strategy laboratory and verification harness for online
//! list-coloring ("paintability") games, including the variant in which the
//! total number of rounds is fixed in advance.

pub mod classifiers;
pub mod game;
pub mod graph;
pub mod strategies;

pub use game::{CostValue, GameState, TokenAssignment, Variant, Verdict};
pub use graph::{Graph, GraphError, VertexSet};
