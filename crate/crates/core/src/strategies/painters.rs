//! Painter strategies for bipartite graphs in two rounds and for `K_{2,n}`
//! in three rounds.

use super::kernel::greedy_independent;
use super::{PainterStrategy, StrategyError};
use crate::game::{GameState, TokenAssignment, Variant};
use crate::graph::{Graph, VertexSet};

/// Two-round strategy for bipartite graphs with lists of size 2, or of
/// size 2 except one vertex `u` of size 1.
///
/// Let `A` be the side containing `u` (vertex 0's side if there is no
/// `u`). In the first round Painter colors the marked part of `A` if `u`
/// is marked or absent, and the marked part of the other side otherwise.
/// In the second round everything still uncolored is marked and
/// independent, so Painter colors all of it.
#[derive(Default)]
pub struct BipartitePainter {
    sides: Option<(VertexSet, VertexSet)>,
    special: Option<usize>,
}

impl BipartitePainter {
    pub fn new() -> BipartitePainter {
        BipartitePainter::default()
    }
}

impl PainterStrategy for BipartitePainter {
    fn name(&self) -> String {
        "bipartite-painter".into()
    }

    fn begin(
        &mut self,
        g: &Graph,
        f: &TokenAssignment,
        variant: Variant,
    ) -> Result<(), StrategyError> {
        f.check_against(g)?;
        let (mut a, mut b) = g
            .bipartition()
            .ok_or_else(|| StrategyError::Precondition("graph is not bipartite".into()))?;
        if variant != Variant::ExactRounds(2) {
            return Err(StrategyError::Precondition(
                "needs an exact game of 2 rounds".into(),
            ));
        }
        let ones: Vec<usize> = (0..g.n()).filter(|&v| f.get(v) == 1).collect();
        if ones.len() > 1 || (0..g.n()).any(|v| !matches!(f.get(v), 1 | 2)) {
            return Err(StrategyError::Precondition(
                "needs 2 tokens everywhere, except possibly one vertex with 1".into(),
            ));
        }
        self.special = ones.first().copied();
        if let Some(u) = self.special {
            if b.contains(u) {
                std::mem::swap(&mut a, &mut b);
            }
        }
        self.sides = Some((a, b));
        Ok(())
    }

    fn respond(
        &mut self,
        g: &Graph,
        state: &GameState,
        marked: VertexSet,
    ) -> Result<VertexSet, StrategyError> {
        let (a, b) = self.sides.ok_or(StrategyError::NotStarted)?;
        let pool = marked.intersection(state.uncolored());
        if state.rounds_left() == Some(2) {
            let side = match self.special {
                Some(u) if !marked.contains(u) => b,
                _ => a,
            };
            return Ok(pool.intersection(side));
        }
        Ok(greedy_independent(g, pool))
    }
}

/// Three-round strategy for `K_{2,n}` with lists of size 2: color both hubs
/// the first time they are marked together, and otherwise color the marked
/// uncolored non-hubs (or a lone marked hub when no non-hub is available).
#[derive(Default)]
pub struct K2nPainter {
    hubs: VertexSet,
}

impl K2nPainter {
    pub fn new() -> K2nPainter {
        K2nPainter::default()
    }
}

impl PainterStrategy for K2nPainter {
    fn name(&self) -> String {
        "k2n-painter".into()
    }

    fn begin(
        &mut self,
        g: &Graph,
        f: &TokenAssignment,
        variant: Variant,
    ) -> Result<(), StrategyError> {
        f.check_against(g)?;
        let (hubs, _) = g
            .as_k2n()
            .ok_or_else(|| StrategyError::Precondition("graph is not K_{2,n}".into()))?;
        if f.as_slice().iter().any(|&k| k != 2) {
            return Err(StrategyError::Precondition(
                "needs 2 tokens everywhere".into(),
            ));
        }
        if variant != Variant::ExactRounds(3) {
            return Err(StrategyError::Precondition(
                "needs an exact game of 3 rounds".into(),
            ));
        }
        self.hubs = hubs;
        Ok(())
    }

    fn respond(
        &mut self,
        _g: &Graph,
        state: &GameState,
        marked: VertexSet,
    ) -> Result<VertexSet, StrategyError> {
        if self.hubs.is_empty() {
            return Err(StrategyError::NotStarted);
        }
        let pool = marked.intersection(state.uncolored());
        if self.hubs.is_subset(pool) {
            return Ok(self.hubs);
        }
        let others = pool.difference(self.hubs);
        if !others.is_empty() {
            Ok(others)
        } else {
            Ok(pool.intersection(self.hubs))
        }
    }
}
