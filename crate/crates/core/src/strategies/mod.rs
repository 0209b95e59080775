//! Scripted players and a referee that plays them against each other or
//! against the exact solver.

mod kernel;
mod listers;
mod painters;
mod referee;

use thiserror::Error;

use crate::game::{GameState, SolveError, TokenAssignment, TokenError, Variant};
use crate::graph::{Graph, VertexSet};

pub use kernel::{greedy_independent, kernel_of, KernelPainter, KernelRecipe, Orientation};
pub use listers::{
    cycle_lister, dumbbell_lister, k24_lister, path_lister_bound, path_splitting_lister,
    tadpole_lister, tadpole_lister_bound, theta_lister, ListerKind, PlanLister,
};
pub use painters::{BipartitePainter, K2nPainter};
pub use referee::{
    outcome, referee, referee_with, Lister, Painter, RefereeError, Round, Side, Snapshot,
    Transcript, TranscriptError,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StrategyError {
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("no kernel exists for marked set {0:?}")]
    NoKernel(VertexSet),
    #[error("strategy used before begin()")]
    NotStarted,
    #[error("strategy cannot continue: {0}")]
    Stuck(String),
    #[error(transparent)]
    Tokens(#[from] TokenError),
    #[error(transparent)]
    Solve(#[from] SolveError),
}

/// Chooses an independent set of marked uncolored vertices each round.
pub trait PainterStrategy {
    fn name(&self) -> String;

    /// Checks that the instance is one the strategy handles and sets up
    /// any per-game data.
    fn begin(
        &mut self,
        g: &Graph,
        f: &TokenAssignment,
        variant: Variant,
    ) -> Result<(), StrategyError>;

    fn respond(
        &mut self,
        g: &Graph,
        state: &GameState,
        marked: VertexSet,
    ) -> Result<VertexSet, StrategyError>;
}

/// Chooses the marked set each round.
pub trait ListerStrategy {
    fn name(&self) -> String;

    fn begin(
        &mut self,
        g: &Graph,
        f: &TokenAssignment,
        variant: Variant,
    ) -> Result<(), StrategyError>;

    fn choose(&mut self, g: &Graph, state: &GameState) -> Result<VertexSet, StrategyError>;
}
