//! Memoized minimax search over game positions.

use rustc_hash::FxHashMap;
use thiserror::Error;

use super::rules::{
    independent_subsets, maximal_independent_subsets, packed_feasible, painter_responses,
    schedule_feasible, CostValue, GameState, ResponseMode, RuleError, Variant, Verdict,
};
use super::tokens::{TokenAssignment, TokenError};
use crate::graph::{Graph, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolverConfig {
    /// Largest graph the solver accepts.
    pub max_n: usize,
    /// Upper bound on stored positions per table before giving up.
    pub memo_capacity: usize,
    pub responses: ResponseMode,
    /// Lets Lister re-mark colored vertices in the unbounded and cost
    /// games. Off in the standard rules; exists to check that it never
    /// matters.
    pub unbounded_remarking: bool,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            max_n: 10,
            memo_capacity: 1 << 25,
            responses: ResponseMode::Maximal,
            unbounded_remarking: false,
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolveError {
    #[error("graph has {n} vertices; the solver is capped at {max}")]
    TooLarge { n: usize, max: usize },
    #[error("memo table reached its capacity of {0} positions")]
    MemoCapacity(usize),
    #[error(transparent)]
    Tokens(#[from] TokenError),
    #[error("position has {found} vertices but the graph has {expected}")]
    StateSize { expected: usize, found: usize },
    #[error("the position is already decided")]
    GameOver,
    #[error("Lister has no legal move")]
    NoLegalMove,
    #[error("cost values are only defined for positions without a round counter")]
    CostWithRounds,
    #[error(transparent)]
    Rule(#[from] RuleError),
}

/// Exact solver for one graph. Memo tables persist across calls, so
/// solving many budgets or round counts on the same graph reuses work.
pub struct Solver {
    g: Graph,
    config: SolverConfig,
    verdicts: FxHashMap<u128, bool>,
    costs: FxHashMap<u128, CostValue>,
    // Painter responses per pool, stored as ranges into one flat buffer.
    response_index: FxHashMap<u32, (u32, u32)>,
    response_data: Vec<VertexSet>,
}

impl Solver {
    pub fn new(g: &Graph) -> Result<Solver, SolveError> {
        Solver::with_config(g, SolverConfig::default())
    }

    pub fn with_config(g: &Graph, config: SolverConfig) -> Result<Solver, SolveError> {
        if g.n() > config.max_n {
            return Err(SolveError::TooLarge {
                n: g.n(),
                max: config.max_n,
            });
        }
        Ok(Solver {
            g: g.clone(),
            config,
            verdicts: FxHashMap::default(),
            costs: FxHashMap::default(),
            response_index: FxHashMap::default(),
            response_data: Vec::new(),
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.g
    }

    pub fn config(&self) -> &SolverConfig {
        &self.config
    }

    /// Number of stored positions across both tables.
    pub fn memo_len(&self) -> usize {
        self.verdicts.len() + self.costs.len()
    }

    fn check_budget(&self, f: &TokenAssignment) -> Result<(), SolveError> {
        f.check_against(&self.g)?;
        Ok(())
    }

    fn check_state(&self, s: &GameState) -> Result<(), SolveError> {
        if s.n() != self.g.n() {
            return Err(SolveError::StateSize {
                expected: self.g.n(),
                found: s.n(),
            });
        }
        Ok(())
    }

    /// Winner of `variant` from the start. An exact-rounds game with no
    /// legal schedule is a vacuous Painter win.
    pub fn solve(&mut self, f: &TokenAssignment, variant: Variant) -> Result<Verdict, SolveError> {
        self.check_budget(f)?;
        if let Variant::ExactRounds(t) = variant {
            if !schedule_feasible(f.as_slice(), t) {
                return Ok(Verdict::PainterWins);
            }
        }
        self.verdict(&GameState::initial(f, variant), variant)
    }

    /// Winner from an arbitrary position. For the cost game this is the
    /// winner of the underlying unbounded game.
    pub fn verdict(&mut self, s: &GameState, variant: Variant) -> Result<Verdict, SolveError> {
        self.check_state(s)?;
        let lister = if variant == Variant::CostGame {
            self.cost(s)?.finite().is_some()
        } else {
            self.lister_wins(*s)?
        };
        Ok(if lister {
            Verdict::ListerWins
        } else {
            Verdict::PainterWins
        })
    }

    /// Cost-game value of a position without a round counter.
    pub fn cost(&mut self, s: &GameState) -> Result<CostValue, SolveError> {
        self.check_state(s)?;
        if s.is_exact() {
            return Err(SolveError::CostWithRounds);
        }
        self.cost_of(*s)
    }

    /// Smallest `t >= max f` for which Painter loses the exact-rounds game.
    pub fn compute_m(&mut self, f: &TokenAssignment) -> Result<Option<u32>, SolveError> {
        self.check_budget(f)?;
        for t in (f.max() as u32).max(1)..=f.total() {
            if self.solve(f, Variant::ExactRounds(t))? == Verdict::ListerWins {
                return Ok(Some(t));
            }
        }
        Ok(None)
    }

    /// Largest `t <= sum f` for which Painter loses the exact-rounds game.
    #[allow(non_snake_case)]
    pub fn compute_M(&mut self, f: &TokenAssignment) -> Result<Option<u32>, SolveError> {
        self.check_budget(f)?;
        for t in ((f.max() as u32).max(1)..=f.total()).rev() {
            if self.solve(f, Variant::ExactRounds(t))? == Verdict::ListerWins {
                return Ok(Some(t));
            }
        }
        Ok(None)
    }

    pub fn compute_q(&mut self, f: &TokenAssignment) -> Result<CostValue, SolveError> {
        self.check_budget(f)?;
        self.cost_of(GameState::initial(f, Variant::CostGame))
    }

    /// An optimal marked set; the numerically smallest one among ties. In
    /// a lost position this is the smallest legal move.
    pub fn best_lister_move(
        &mut self,
        s: &GameState,
        variant: Variant,
    ) -> Result<VertexSet, SolveError> {
        self.check_state(s)?;
        if s.terminal().is_some() {
            return Err(SolveError::GameOver);
        }
        let moves = s.lister_moves();
        let first = *moves.first().ok_or(SolveError::NoLegalMove)?;
        if variant == Variant::CostGame {
            let mut best = (CostValue::Survives, first);
            for v in moves {
                let value = self.move_cost(*s, v, best.0)?;
                if value < best.0 {
                    best = (value, v);
                }
            }
            return Ok(best.1);
        }
        for v in moves {
            if self.forces_win(*s, v)? {
                return Ok(v);
            }
        }
        Ok(first)
    }

    /// An optimal answer to `marked`; the numerically smallest among ties.
    pub fn best_painter_response(
        &mut self,
        s: &GameState,
        marked: VertexSet,
        variant: Variant,
    ) -> Result<VertexSet, SolveError> {
        self.check_state(s)?;
        s.check_lister_move(marked)?;
        let responses = painter_responses(&self.g, s, marked, self.config.responses);
        let base = marked.len() as u32 - 1;
        if variant == Variant::CostGame {
            let mut best: Option<(CostValue, VertexSet)> = None;
            for x in responses {
                let value = plus(self.cost_of(s.apply_unchecked(marked, x))?, base);
                if best.is_none_or(|(b, _)| value > b) {
                    best = Some((value, x));
                }
            }
            return Ok(best.expect("at least one response").1);
        }
        for &x in &responses {
            if !self.lister_wins(s.apply_unchecked(marked, x))? {
                return Ok(x);
            }
        }
        Ok(responses[0])
    }

    fn key(&self, s: &GameState) -> u128 {
        let colored = s.colored();
        let tokens = s.tokens();
        let mut key = colored.bits() as u128;
        match s.rounds_left() {
            Some(r) => {
                // colored vertices only matter through how many tokens of
                // each size they still hold
                let mut counts = 0u128;
                for k in 1..=3u8 {
                    let c = tokens.exactly(k).intersection(colored).len() as u128;
                    counts |= c << (5 * (k - 1));
                }
                key |= (tokens.cleared(colored).bits() as u128) << 30;
                key |= (r as u128 + 1) << 90;
                key |= counts << 100;
            }
            None if self.config.unbounded_remarking => {
                key |= (tokens.bits() as u128) << 30;
            }
            None => {
                key |= (tokens.cleared(colored).bits() as u128) << 30;
            }
        }
        key
    }

    /// Lister moves explored by the search. In the exact-rounds game only
    /// the lowest-numbered colored vertices of each token count are used as
    /// padding, which loses nothing since colored vertices with equal
    /// counts are interchangeable.
    fn search_moves(&self, s: &GameState) -> Vec<VertexSet> {
        let tokens = s.tokens();
        let holders = tokens.nonzero();
        let free = holders.intersection(s.uncolored());
        let Some(r) = s.rounds_left() else {
            let pool = if self.config.unbounded_remarking {
                holders
            } else {
                free
            };
            return pool.subsets().skip(1).collect();
        };
        if r == 0 {
            return Vec::new();
        }
        let mut prefixes: [Vec<VertexSet>; 3] = Default::default();
        for (k, pre) in (1..=3u8).zip(prefixes.iter_mut()) {
            let mut acc = VertexSet::EMPTY;
            pre.push(acc);
            for v in tokens.exactly(k).intersection(s.colored()) {
                acc.insert(v);
                pre.push(acc);
            }
        }
        let mut out = Vec::new();
        for u in free.subsets() {
            for &p1 in &prefixes[0] {
                for &p2 in &prefixes[1] {
                    for &p3 in &prefixes[2] {
                        let v = u.union(p1).union(p2).union(p3);
                        if !v.is_empty() && packed_feasible(tokens.decremented(v), r - 1) {
                            out.push(v);
                        }
                    }
                }
            }
        }
        out
    }

    fn responses(&mut self, pool: VertexSet) -> (usize, usize) {
        if let Some(&(start, len)) = self.response_index.get(&pool.bits()) {
            return (start as usize, len as usize);
        }
        let list = match self.config.responses {
            ResponseMode::Maximal => maximal_independent_subsets(&self.g, pool),
            ResponseMode::Exhaustive => independent_subsets(&self.g, pool),
        };
        let start = self.response_data.len();
        self.response_data.extend_from_slice(&list);
        self.response_index
            .insert(pool.bits(), (start as u32, list.len() as u32));
        (start, list.len())
    }

    fn lister_wins(&mut self, s: GameState) -> Result<bool, SolveError> {
        if let Some(v) = s.terminal() {
            return Ok(v == Verdict::ListerWins);
        }
        let key = self.key(&s);
        if let Some(&w) = self.verdicts.get(&key) {
            return Ok(w);
        }
        let mut win = false;
        for v in self.search_moves(&s) {
            if self.forces_win(s, v)? {
                win = true;
                break;
            }
        }
        if self.verdicts.len() >= self.config.memo_capacity {
            return Err(SolveError::MemoCapacity(self.config.memo_capacity));
        }
        self.verdicts.insert(key, win);
        Ok(win)
    }

    /// Does marking `v` win for Lister against every response?
    fn forces_win(&mut self, s: GameState, v: VertexSet) -> Result<bool, SolveError> {
        let (start, len) = self.responses(v.intersection(s.uncolored()));
        for i in start..start + len {
            let x = self.response_data[i];
            if !self.lister_wins(s.apply_unchecked(v, x))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn cost_of(&mut self, s: GameState) -> Result<CostValue, SolveError> {
        match s.terminal() {
            Some(Verdict::ListerWins) => return Ok(CostValue::Finite(0)),
            Some(Verdict::PainterWins) => return Ok(CostValue::Survives),
            None => {}
        }
        let key = self.key(&s);
        if let Some(&c) = self.costs.get(&key) {
            return Ok(c);
        }
        let mut moves = self.search_moves(&s);
        moves.sort_by_key(|v| v.len());
        let mut best = CostValue::Survives;
        for v in moves {
            if let CostValue::Finite(b) = best {
                // moves are sorted by size, so nothing later can be cheaper
                if v.len() as u32 > b {
                    break;
                }
            }
            let value = self.move_cost(s, v, best)?;
            if value < best {
                best = value;
            }
        }
        if self.costs.len() >= self.config.memo_capacity {
            return Err(SolveError::MemoCapacity(self.config.memo_capacity));
        }
        self.costs.insert(key, best);
        Ok(best)
    }

    /// Cost of marking `v` under Painter's best reply, exact when it is
    /// below `cutoff` and otherwise some value at least `cutoff`.
    fn move_cost(
        &mut self,
        s: GameState,
        v: VertexSet,
        cutoff: CostValue,
    ) -> Result<CostValue, SolveError> {
        let base = v.len() as u32 - 1;
        let (start, len) = self.responses(v.intersection(s.uncolored()));
        let mut worst = CostValue::Finite(base);
        for i in start..start + len {
            let x = self.response_data[i];
            let value = plus(self.cost_of(s.apply_unchecked(v, x))?, base);
            if value > worst {
                worst = value;
                if worst >= cutoff {
                    break;
                }
            }
        }
        Ok(worst)
    }
}

fn plus(c: CostValue, base: u32) -> CostValue {
    match c {
        CostValue::Finite(q) => CostValue::Finite(q + base),
        CostValue::Survives => CostValue::Survives,
    }
}

/// [`Solver::solve`] with a fresh default solver.
pub fn solve(g: &Graph, f: &TokenAssignment, variant: Variant) -> Result<Verdict, SolveError> {
    Solver::new(g)?.solve(f, variant)
}

pub fn compute_m(g: &Graph, f: &TokenAssignment) -> Result<Option<u32>, SolveError> {
    Solver::new(g)?.compute_m(f)
}

#[allow(non_snake_case)]
pub fn compute_M(g: &Graph, f: &TokenAssignment) -> Result<Option<u32>, SolveError> {
    Solver::new(g)?.compute_M(f)
}

pub fn compute_q(g: &Graph, f: &TokenAssignment) -> Result<CostValue, SolveError> {
    Solver::new(g)?.compute_q(f)
}
