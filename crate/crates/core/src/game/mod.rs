//! Game rules and exact solvers.
//!
//! Three variants share one position type: the unbounded game (Painter
//! must color every vertex before any list runs out), the exact-rounds game
//! (the schedule has exactly `t` nonempty rounds and marks every vertex
//! exactly `f(v)` times), and the cost game used to compute `q(G, f)`.

mod rules;
mod solver;
mod tokens;

pub use rules::{
    independent_subsets, maximal_independent_subsets, painter_responses, schedule_feasible,
    CostValue, GameState, ResponseMode, RuleError, Variant, Verdict,
};
pub use solver::{compute_M, compute_m, compute_q, solve, SolveError, Solver, SolverConfig};
pub use tokens::{TokenAssignment, TokenError, Tokens, MAX_TOKENS};
