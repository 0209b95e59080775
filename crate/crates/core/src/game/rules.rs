//! Positions and the rules of the three game variants.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::tokens::{TokenAssignment, Tokens};
use crate::graph::{Graph, VertexSet};

/// Which game is being played.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Variant {
    /// Plain f-paintability: no limit on rounds.
    Unbounded,
    /// Exactly `t` nonempty rounds, every vertex marked exactly `f(v)` times.
    ExactRounds(u32),
    /// Lister pays `|V| - 1` per round and tries to force a dead vertex as
    /// cheaply as possible.
    CostGame,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Variant::Unbounded => f.write_str("unbounded"),
            Variant::ExactRounds(t) => write!(f, "exact:{t}"),
            Variant::CostGame => f.write_str("cost"),
        }
    }
}

impl std::str::FromStr for Variant {
    type Err = String;

    /// Accepts `unbounded`, `cost`, and `exact:<t>`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "unbounded" => Ok(Variant::Unbounded),
            "cost" => Ok(Variant::CostGame),
            other => other
                .strip_prefix("exact:")
                .and_then(|t| t.parse().ok())
                .map(Variant::ExactRounds)
                .ok_or_else(|| {
                    format!("unknown variant {other:?} (expected unbounded, cost or exact:<t>)")
                }),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Verdict {
    PainterWins,
    ListerWins,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::PainterWins => "PainterWins",
            Verdict::ListerWins => "ListerWins",
        })
    }
}

/// Value of the cost game: the cheapest total `sum(|V_i| - 1)` with which
/// Lister can force a dead vertex, or `Survives` if Painter colors
/// everything.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CostValue {
    Finite(u32),
    Survives,
}

impl CostValue {
    pub fn finite(self) -> Option<u32> {
        match self {
            CostValue::Finite(q) => Some(q),
            CostValue::Survives => None,
        }
    }
}

impl fmt::Display for CostValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CostValue::Finite(q) => write!(f, "{q}"),
            CostValue::Survives => f.write_str("Survives"),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RuleError {
    #[error("the game is already over")]
    GameOver,
    #[error("marked set is empty")]
    EmptyMove,
    #[error("vertex {0} does not exist")]
    NoSuchVertex(usize),
    #[error("vertex {0} has no tokens left")]
    NoTokens(usize),
    #[error("vertex {0} is already colored and may not be marked in this variant")]
    MarksColored(usize),
    #[error("the remaining tokens can no longer be spread over exactly {rounds} nonempty rounds")]
    ScheduleInfeasible { rounds: u32 },
    #[error("vertex {0} is not in the marked set")]
    NotMarked(usize),
    #[error("vertex {0} is already colored")]
    AlreadyColored(usize),
    #[error("response is not independent: {0} and {1} are adjacent")]
    NotIndependent(usize, usize),
}

/// True iff the token vector can be split into exactly `rounds` nonempty
/// rounds that mark each vertex at most once per round and exactly as many
/// times as its token count.
pub fn schedule_feasible(tokens: &[u8], rounds: u32) -> bool {
    let total: u32 = tokens.iter().map(|&k| k as u32).sum();
    let max = tokens.iter().copied().max().unwrap_or(0) as u32;
    total >= rounds && max <= rounds
}

#[inline]
pub(crate) fn packed_feasible(tokens: Tokens, rounds: u32) -> bool {
    tokens.total() >= rounds && tokens.max() as u32 <= rounds
}

/// A position: what has been colored, what budget is left, and (in the
/// exact-rounds variant) how many rounds remain.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct GameState {
    n: usize,
    colored: VertexSet,
    tokens: Tokens,
    rounds_left: Option<u32>,
}

impl GameState {
    /// Start of `variant` with budget `f`. Cost and unbounded games carry no
    /// round counter.
    pub fn initial(f: &TokenAssignment, variant: Variant) -> GameState {
        GameState {
            n: f.len(),
            colored: VertexSet::EMPTY,
            tokens: f.packed(),
            rounds_left: match variant {
                Variant::ExactRounds(t) => Some(t),
                _ => None,
            },
        }
    }

    /// An arbitrary position. Token counts above 3 are rejected.
    pub fn from_parts(
        colored: VertexSet,
        tokens: &[u8],
        rounds_left: Option<u32>,
    ) -> Result<GameState, super::TokenError> {
        let f = TokenAssignment::new(tokens.to_vec())?;
        Ok(GameState {
            n: tokens.len(),
            colored: colored.intersection(VertexSet::full(tokens.len())),
            tokens: f.packed(),
            rounds_left,
        })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn colored(&self) -> VertexSet {
        self.colored
    }

    #[inline]
    pub fn uncolored(&self) -> VertexSet {
        VertexSet::full(self.n).difference(self.colored)
    }

    #[inline]
    pub fn tokens(&self) -> Tokens {
        self.tokens
    }

    #[inline]
    pub fn token(&self, v: usize) -> u8 {
        self.tokens.get(v)
    }

    pub fn token_vec(&self) -> Vec<u8> {
        self.tokens.to_vec(self.n)
    }

    #[inline]
    pub fn rounds_left(&self) -> Option<u32> {
        self.rounds_left
    }

    #[inline]
    pub fn is_exact(&self) -> bool {
        self.rounds_left.is_some()
    }

    /// Uncolored vertices with no tokens left.
    #[inline]
    pub fn dead(&self) -> VertexSet {
        self.uncolored().difference(self.tokens.nonzero())
    }

    /// Win detection. A dead vertex is a Lister win even when rounds
    /// remain; coloring everything is a Painter win.
    pub fn terminal(&self) -> Option<Verdict> {
        if !self.dead().is_empty() {
            Some(Verdict::ListerWins)
        } else if self.uncolored().is_empty() {
            Some(Verdict::PainterWins)
        } else {
            None
        }
    }

    /// Vertices Lister may put in a marked set: anything holding a token in
    /// the exact-rounds variant, uncolored token holders otherwise.
    #[inline]
    pub fn markable(&self) -> VertexSet {
        let holders = self.tokens.nonzero();
        if self.is_exact() {
            holders
        } else {
            holders.intersection(self.uncolored())
        }
    }

    /// Every legal marked set, in increasing numeric order.
    pub fn lister_moves(&self) -> Vec<VertexSet> {
        if self.terminal().is_some() {
            return Vec::new();
        }
        self.markable()
            .subsets()
            .skip(1)
            .filter(|&v| self.marking_keeps_schedule(v))
            .collect()
    }

    #[inline]
    pub(crate) fn marking_keeps_schedule(&self, marked: VertexSet) -> bool {
        match self.rounds_left {
            Some(r) => r >= 1 && packed_feasible(self.tokens.decremented(marked), r - 1),
            None => true,
        }
    }

    pub fn check_lister_move(&self, marked: VertexSet) -> Result<(), RuleError> {
        if self.terminal().is_some() {
            return Err(RuleError::GameOver);
        }
        if marked.is_empty() {
            return Err(RuleError::EmptyMove);
        }
        for v in marked {
            if v >= self.n {
                return Err(RuleError::NoSuchVertex(v));
            }
            if self.tokens.get(v) == 0 {
                return Err(RuleError::NoTokens(v));
            }
            if !self.is_exact() && self.colored.contains(v) {
                return Err(RuleError::MarksColored(v));
            }
        }
        if !self.marking_keeps_schedule(marked) {
            return Err(RuleError::ScheduleInfeasible {
                rounds: self.rounds_left.unwrap_or(0).saturating_sub(1),
            });
        }
        Ok(())
    }

    pub fn check_painter_response(
        &self,
        g: &Graph,
        marked: VertexSet,
        response: VertexSet,
    ) -> Result<(), RuleError> {
        for v in response {
            if !marked.contains(v) {
                return Err(RuleError::NotMarked(v));
            }
            if self.colored.contains(v) {
                return Err(RuleError::AlreadyColored(v));
            }
        }
        for v in response {
            if let Some(w) = g.neighbors(v).intersection(response).first() {
                return Err(RuleError::NotIndependent(v.min(w), v.max(w)));
            }
        }
        Ok(())
    }

    /// Plays one validated round.
    pub fn apply_round(
        &self,
        g: &Graph,
        marked: VertexSet,
        response: VertexSet,
    ) -> Result<GameState, RuleError> {
        self.check_lister_move(marked)?;
        self.check_painter_response(g, marked, response)?;
        Ok(self.apply_unchecked(marked, response))
    }

    #[inline]
    pub(crate) fn apply_unchecked(&self, marked: VertexSet, response: VertexSet) -> GameState {
        GameState {
            n: self.n,
            colored: self.colored.union(response),
            tokens: self.tokens.decremented(marked),
            rounds_left: self.rounds_left.map(|r| r - 1),
        }
    }
}

impl fmt::Debug for GameState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GameState")
            .field("colored", &self.colored)
            .field("tokens", &self.token_vec())
            .field("rounds_left", &self.rounds_left)
            .finish()
    }
}

/// How much of Painter's move space the engine explores.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum ResponseMode {
    /// Only maximal independent subsets of the marked uncolored vertices.
    #[default]
    Maximal,
    /// Every independent subset, including the empty one.
    Exhaustive,
}

/// Painter's candidate responses to `marked`, in increasing numeric order.
pub fn painter_responses(
    g: &Graph,
    state: &GameState,
    marked: VertexSet,
    mode: ResponseMode,
) -> Vec<VertexSet> {
    let pool = marked.intersection(state.uncolored());
    match mode {
        ResponseMode::Maximal => maximal_independent_subsets(g, pool),
        ResponseMode::Exhaustive => independent_subsets(g, pool),
    }
}

/// All independent subsets of `pool` (including the empty set), sorted.
pub fn independent_subsets(g: &Graph, pool: VertexSet) -> Vec<VertexSet> {
    let mut out = Vec::new();
    let verts = pool.to_vec();
    fn rec(g: &Graph, verts: &[usize], chosen: VertexSet, out: &mut Vec<VertexSet>) {
        match verts.split_first() {
            None => out.push(chosen),
            Some((&v, rest)) => {
                rec(g, rest, chosen, out);
                if g.neighbors(v).is_disjoint(chosen) {
                    rec(g, rest, chosen.with(v), out);
                }
            }
        }
    }
    rec(g, &verts, VertexSet::EMPTY, &mut out);
    out.sort_unstable();
    out
}

/// Maximal independent subsets of `pool`, sorted. `{∅}` for an empty pool.
pub fn maximal_independent_subsets(g: &Graph, pool: VertexSet) -> Vec<VertexSet> {
    let mut out = Vec::new();
    let verts = pool.to_vec();
    fn rec(
        g: &Graph,
        pool: VertexSet,
        verts: &[usize],
        chosen: VertexSet,
        out: &mut Vec<VertexSet>,
    ) {
        match verts.split_first() {
            None => {
                // maximal: every left-out vertex has a chosen neighbor
                let ok = pool
                    .difference(chosen)
                    .iter()
                    .all(|w| !g.neighbors(w).is_disjoint(chosen));
                if ok {
                    out.push(chosen);
                }
            }
            Some((&v, rest)) => {
                let blocked = !g.neighbors(v).is_disjoint(chosen);
                if !blocked {
                    rec(g, pool, rest, chosen.with(v), out);
                }
                // leaving v out only pays off if some neighbor can cover it
                let coverable = blocked || rest.iter().any(|&w| g.has_edge(v, w));
                if coverable {
                    rec(g, pool, rest, chosen, out);
                }
            }
        }
    }
    rec(g, pool, &verts, VertexSet::EMPTY, &mut out);
    out.sort_unstable();
    out
}
