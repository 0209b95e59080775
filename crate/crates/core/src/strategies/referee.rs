//! Plays complete games, checks every move, and records transcripts.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{ListerStrategy, PainterStrategy, StrategyError};
use crate::game::{
    schedule_feasible, GameState, RuleError, SolveError, Solver, SolverConfig, TokenAssignment,
    TokenError, Variant, Verdict,
};
use crate::graph::{Graph, GraphError, VertexSet, MAX_VERTICES};

/// One side of a refereed game.
pub enum Lister<'a> {
    /// Plays [`Solver::best_lister_move`].
    Optimal,
    Scripted(&'a mut dyn ListerStrategy),
}

pub enum Painter<'a> {
    /// Plays [`Solver::best_painter_response`].
    Optimal,
    Scripted(&'a mut dyn PainterStrategy),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Side {
    Lister,
    Painter,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RefereeError {
    #[error("round {round}: {side:?} strategy failed: {source}")]
    Strategy {
        round: usize,
        side: Side,
        source: StrategyError,
    },
    #[error("round {round}: {side:?} played illegal set {{{attempted}}} at {state}: {rule}")]
    Illegal {
        round: usize,
        side: Side,
        attempted: VertexSet,
        state: String,
        rule: RuleError,
    },
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error(transparent)]
    Tokens(#[from] TokenError),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TranscriptError {
    #[error("line {line}: cannot parse {text:?}")]
    Parse { line: usize, text: String },
    #[error("transcript is missing {0}")]
    Missing(&'static str),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Tokens(#[from] TokenError),
    #[error("round {round}: {error}")]
    Illegal { round: usize, error: RuleError },
    #[error("round {0}: recorded state does not match the replay")]
    SnapshotMismatch(usize),
    #[error("game continues after the last recorded round")]
    Unfinished,
    #[error("recorded verdict {recorded} but replay gives {replayed}")]
    VerdictMismatch {
        recorded: Verdict,
        replayed: Verdict,
    },
    #[error("invalid JSON: {0}")]
    Json(String),
}

/// Position after a round.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Snapshot {
    #[serde(with = "id_list")]
    pub colored: VertexSet,
    pub tokens: Vec<u8>,
    pub rounds_left: Option<u32>,
}

impl Snapshot {
    pub fn of(s: &GameState) -> Snapshot {
        Snapshot {
            colored: s.colored(),
            tokens: s.token_vec(),
            rounds_left: s.rounds_left(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Round {
    #[serde(with = "id_list")]
    pub marked: VertexSet,
    #[serde(with = "id_list")]
    pub painted: VertexSet,
    pub after: Snapshot,
}

/// A complete game record.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Transcript {
    pub graph6: String,
    pub budget: TokenAssignment,
    pub variant: Variant,
    pub lister: String,
    pub painter: String,
    pub rounds: Vec<Round>,
    pub verdict: Verdict,
}

mod id_list {
    use serde::{Deserialize, Deserializer, Serializer};

    use crate::graph::{VertexSet, MAX_VERTICES};

    pub fn serialize<S: Serializer>(s: &VertexSet, ser: S) -> Result<S::Ok, S::Error> {
        ser.collect_seq(s.iter())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<VertexSet, D::Error> {
        let ids = Vec::<usize>::deserialize(de)?;
        if let Some(&bad) = ids.iter().find(|&&v| v >= MAX_VERTICES) {
            return Err(serde::de::Error::custom(format!(
                "vertex id {bad} out of range"
            )));
        }
        Ok(ids.into_iter().collect())
    }
}

/// Decided positions, including an exact-rounds game whose remaining
/// tokens admit no schedule (Painter wins, since Lister cannot move).
pub fn outcome(s: &GameState) -> Option<Verdict> {
    s.terminal().or_else(|| match s.rounds_left() {
        Some(r) if !schedule_feasible(&s.token_vec(), r) => Some(Verdict::PainterWins),
        _ => None,
    })
}

/// Plays one game with a fresh solver for any optimal side.
pub fn referee(
    g: &Graph,
    f: &TokenAssignment,
    variant: Variant,
    lister: Lister<'_>,
    painter: Painter<'_>,
) -> Result<Transcript, RefereeError> {
    let mut config = SolverConfig::default();
    if matches!(
        (&lister, &painter),
        (Lister::Scripted(_), Painter::Scripted(_))
    ) {
        // the solver is never consulted
        config.max_n = MAX_VERTICES;
    }
    let mut solver = Solver::with_config(g, config)?;
    referee_with(&mut solver, f, variant, lister, painter)
}

/// Plays one game on `solver`'s graph, reusing its memo tables.
pub fn referee_with(
    solver: &mut Solver,
    f: &TokenAssignment,
    variant: Variant,
    mut lister: Lister<'_>,
    mut painter: Painter<'_>,
) -> Result<Transcript, RefereeError> {
    let g = solver.graph().clone();
    f.check_against(&g)?;
    let strategy_err = |round, side| {
        move |source| RefereeError::Strategy {
            round,
            side,
            source,
        }
    };
    let lister_name = match &mut lister {
        Lister::Optimal => "optimal".to_string(),
        Lister::Scripted(l) => {
            l.begin(&g, f, variant)
                .map_err(strategy_err(0, Side::Lister))?;
            l.name()
        }
    };
    let painter_name = match &mut painter {
        Painter::Optimal => "optimal".to_string(),
        Painter::Scripted(p) => {
            p.begin(&g, f, variant)
                .map_err(strategy_err(0, Side::Painter))?;
            p.name()
        }
    };
    let mut s = GameState::initial(f, variant);
    let mut rounds = Vec::new();
    let verdict = loop {
        if let Some(v) = outcome(&s) {
            break v;
        }
        let round = rounds.len() + 1;
        let marked = match &mut lister {
            Lister::Optimal => solver.best_lister_move(&s, variant)?,
            Lister::Scripted(l) => l
                .choose(&g, &s)
                .map_err(strategy_err(round, Side::Lister))?,
        };
        s.check_lister_move(marked)
            .map_err(|rule| RefereeError::Illegal {
                round,
                side: Side::Lister,
                attempted: marked,
                state: format!("{s:?}"),
                rule,
            })?;
        let painted = match &mut painter {
            Painter::Optimal => solver.best_painter_response(&s, marked, variant)?,
            Painter::Scripted(p) => p
                .respond(&g, &s, marked)
                .map_err(strategy_err(round, Side::Painter))?,
        };
        s.check_painter_response(&g, marked, painted)
            .map_err(|rule| RefereeError::Illegal {
                round,
                side: Side::Painter,
                attempted: painted,
                state: format!("{s:?}"),
                rule,
            })?;
        s = s
            .apply_round(&g, marked, painted)
            .expect("both moves were checked");
        rounds.push(Round {
            marked,
            painted,
            after: Snapshot::of(&s),
        });
    };
    Ok(Transcript {
        graph6: g.to_graph6(),
        budget: f.clone(),
        variant,
        lister: lister_name,
        painter: painter_name,
        rounds,
        verdict,
    })
}

impl Transcript {
    /// `sum(|V_i| - 1)` over the rounds played.
    pub fn cost(&self) -> u32 {
        self.rounds.iter().map(|r| r.marked.len() as u32 - 1).sum()
    }

    /// Replays every round through the rule checks and compares the
    /// recorded states and verdict.
    pub fn replay(&self) -> Result<Verdict, TranscriptError> {
        let g = Graph::from_graph6(&self.graph6)?;
        self.budget.check_against(&g)?;
        let mut s = GameState::initial(&self.budget, self.variant);
        for (i, r) in self.rounds.iter().enumerate() {
            if outcome(&s).is_some() {
                return Err(TranscriptError::Illegal {
                    round: i + 1,
                    error: RuleError::GameOver,
                });
            }
            s = s.apply_round(&g, r.marked, r.painted).map_err(|error| {
                TranscriptError::Illegal {
                    round: i + 1,
                    error,
                }
            })?;
            if Snapshot::of(&s) != r.after {
                return Err(TranscriptError::SnapshotMismatch(i + 1));
            }
        }
        let replayed = outcome(&s).ok_or(TranscriptError::Unfinished)?;
        if replayed != self.verdict {
            return Err(TranscriptError::VerdictMismatch {
                recorded: self.verdict,
                replayed,
            });
        }
        Ok(replayed)
    }

    /// Line format: a `#` header naming the instance, one
    /// `i | V=<ids> | X=<ids>` line per round, and `verdict=<winner>`.
    pub fn to_text(&self) -> String {
        let f: Vec<String> = self.budget.as_slice().iter().map(u8::to_string).collect();
        let mut out = format!(
            "# graph6={} f={} variant={} lister={} painter={}\n",
            self.graph6,
            f.join(","),
            self.variant,
            self.lister,
            self.painter
        );
        for (i, r) in self.rounds.iter().enumerate() {
            let _ = writeln!(out, "{} | V={} | X={}", i + 1, r.marked, r.painted);
        }
        let _ = writeln!(out, "verdict={}", self.verdict);
        out
    }

    /// Parses [`Transcript::to_text`] output and replays it to rebuild the
    /// per-round states.
    pub fn from_text(text: &str) -> Result<Transcript, TranscriptError> {
        let parse_err = |line: usize, text: &str| TranscriptError::Parse {
            line,
            text: text.to_string(),
        };
        let mut header = None;
        let mut moves = Vec::new();
        let mut verdict = None;
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            let lineno = i + 1;
            if line.is_empty() {
                continue;
            }
            if let Some(h) = line.strip_prefix('#') {
                let mut fields = std::collections::HashMap::new();
                for kv in h.split_whitespace() {
                    let (k, v) = kv.split_once('=').ok_or_else(|| parse_err(lineno, raw))?;
                    fields.insert(k.to_string(), v.to_string());
                }
                header = Some(fields);
            } else if let Some(v) = line.strip_prefix("verdict=") {
                verdict = Some(match v {
                    "PainterWins" => Verdict::PainterWins,
                    "ListerWins" => Verdict::ListerWins,
                    _ => return Err(parse_err(lineno, raw)),
                });
            } else {
                let parts: Vec<&str> = line.split('|').map(str::trim).collect();
                let [_, v, x] = parts[..] else {
                    return Err(parse_err(lineno, raw));
                };
                let ids = |s: Option<&str>| -> Option<VertexSet> {
                    let s = s?;
                    if s.is_empty() {
                        return Some(VertexSet::EMPTY);
                    }
                    s.split(',')
                        .map(|t| t.trim().parse::<usize>().ok().filter(|&v| v < MAX_VERTICES))
                        .collect()
                };
                let v = ids(v.strip_prefix("V=")).ok_or_else(|| parse_err(lineno, raw))?;
                let x = ids(x.strip_prefix("X=")).ok_or_else(|| parse_err(lineno, raw))?;
                moves.push((v, x));
            }
        }
        let header = header.ok_or(TranscriptError::Missing("header"))?;
        let field = |k: &'static str| header.get(k).ok_or(TranscriptError::Missing(k));
        let graph6 = field("graph6")?.clone();
        let budget = field("f")?
            .split(',')
            .filter(|s| !s.is_empty())
            .map(|s| s.parse::<u8>())
            .collect::<Result<Vec<u8>, _>>()
            .map_err(|_| TranscriptError::Missing("valid f"))?;
        let budget = TokenAssignment::new(budget)?;
        let variant: Variant = field("variant")?
            .parse()
            .map_err(|_| TranscriptError::Missing("valid variant"))?;
        let g = Graph::from_graph6(&graph6)?;
        budget.check_against(&g)?;
        let mut s = GameState::initial(&budget, variant);
        let mut rounds = Vec::new();
        for (i, (marked, painted)) in moves.into_iter().enumerate() {
            s = s
                .apply_round(&g, marked, painted)
                .map_err(|error| TranscriptError::Illegal {
                    round: i + 1,
                    error,
                })?;
            rounds.push(Round {
                marked,
                painted,
                after: Snapshot::of(&s),
            });
        }
        let t = Transcript {
            graph6,
            budget,
            variant,
            lister: header.get("lister").cloned().unwrap_or_default(),
            painter: header.get("painter").cloned().unwrap_or_default(),
            rounds,
            verdict: verdict.ok_or(TranscriptError::Missing("verdict"))?,
        };
        t.replay()?;
        Ok(t)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("transcripts always serialize")
    }

    pub fn from_json(text: &str) -> Result<Transcript, TranscriptError> {
        serde_json::from_str(text).map_err(|e| TranscriptError::Json(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_cycle, make_path};
    use crate::strategies::{cycle_lister, KernelPainter};

    #[test]
    fn cycle_lister_on_triangle_takes_three_rounds() {
        let c3 = make_cycle(3).unwrap();
        let f = TokenAssignment::uniform(3, 2).unwrap();
        let mut l = cycle_lister();
        let t = referee(
            &c3,
            &f,
            Variant::ExactRounds(3),
            Lister::Scripted(&mut l),
            Painter::Optimal,
        )
        .unwrap();
        assert_eq!(t.verdict, Verdict::ListerWins);
        assert_eq!(t.rounds.len(), 3);
        assert_eq!(t.replay(), Ok(Verdict::ListerWins));
    }

    #[test]
    fn kernel_painter_on_path_with_one_short_list() {
        let p5 = make_path(5).unwrap();
        let f = TokenAssignment::f_prime(5, 2).unwrap();
        let mut p = KernelPainter::tree();
        let t = referee(
            &p5,
            &f,
            Variant::Unbounded,
            Lister::Optimal,
            Painter::Scripted(&mut p),
        )
        .unwrap();
        assert_eq!(t.verdict, Verdict::PainterWins);
    }

    #[test]
    fn text_and_json_round_trip() {
        let c5 = make_cycle(5).unwrap();
        let f = TokenAssignment::uniform(5, 2).unwrap();
        let t = referee(
            &c5,
            &f,
            Variant::ExactRounds(5),
            Lister::Optimal,
            Painter::Optimal,
        )
        .unwrap();
        let again = referee(
            &c5,
            &f,
            Variant::ExactRounds(5),
            Lister::Optimal,
            Painter::Optimal,
        )
        .unwrap();
        assert_eq!(t.to_text(), again.to_text());
        assert_eq!(Transcript::from_text(&t.to_text()), Ok(t.clone()));
        assert_eq!(Transcript::from_json(&t.to_json()), Ok(t.clone()));
        assert!(t.to_text().lines().nth(1).unwrap().starts_with("1 | V="));
        assert!(t.to_text().ends_with(&format!("verdict={}\n", t.verdict)));
    }

    #[test]
    fn tampered_transcripts_fail_replay() {
        let c3 = make_cycle(3).unwrap();
        let f = TokenAssignment::uniform(3, 2).unwrap();
        let t = referee(
            &c3,
            &f,
            Variant::Unbounded,
            Lister::Optimal,
            Painter::Optimal,
        )
        .unwrap();
        let mut bad = t.clone();
        bad.verdict = Verdict::PainterWins;
        assert!(matches!(
            bad.replay(),
            Err(TranscriptError::VerdictMismatch { .. })
        ));
        let mut bad = t.clone();
        bad.rounds[0].painted = VertexSet::full(3);
        assert!(matches!(
            bad.replay(),
            Err(TranscriptError::Illegal { round: 1, .. })
        ));
    }

    #[test]
    fn vacuous_exact_game_has_no_rounds() {
        let c3 = make_cycle(3).unwrap();
        let f = TokenAssignment::uniform(3, 2).unwrap();
        let t = referee(
            &c3,
            &f,
            Variant::ExactRounds(9),
            Lister::Optimal,
            Painter::Optimal,
        )
        .unwrap();
        assert!(t.rounds.is_empty());
        assert_eq!(t.verdict, Verdict::PainterWins);
        assert_eq!(t.replay(), Ok(Verdict::PainterWins));
    }
}
