use std::io::{BufRead, Write};
use std::path::PathBuf;

use clap::{Args, ValueEnum};
use paintability::game::{GameState, Solver, TokenAssignment, Variant};
use paintability::graph::{Graph, VertexSet};
use paintability::strategies::{outcome, Round, Snapshot, Transcript};

use crate::solve::load_budget;
use crate::{precondition, Caps, Failure, GraphArgs};

#[derive(Args, Debug)]
pub struct PlayArgs {
    #[command(flatten)]
    graph: GraphArgs,

    #[arg(long = "f", default_value = "uniform:2")]
    budget: String,

    #[arg(long, default_value = "unbounded")]
    variant: String,

    /// The side you play; the solver plays the other one optimally.
    #[arg(long, value_enum)]
    role: Role,

    /// Where to save the transcript (printed to stdout otherwise).
    #[arg(long)]
    transcript: Option<PathBuf>,

    #[command(flatten)]
    caps: Caps,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Role {
    Painter,
    Lister,
}

/// How a session ended.
pub enum Ending {
    Finished(Transcript),
    /// Input ran out; the transcript holds the rounds played so far.
    Aborted(Transcript),
}

fn parse_ids(line: &str) -> Result<VertexSet, String> {
    let mut set = VertexSet::EMPTY;
    for tok in line
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
    {
        let v: usize = tok
            .parse()
            .map_err(|_| format!("{tok:?} is not a vertex id"))?;
        if v >= paintability::graph::MAX_VERTICES {
            return Err(format!("vertex {v} does not exist"));
        }
        set.insert(v);
    }
    Ok(set)
}

fn show_state(out: &mut dyn Write, s: &GameState) -> std::io::Result<()> {
    let rounds = s
        .rounds_left()
        .map_or("unlimited".to_string(), |r| r.to_string());
    writeln!(
        out,
        "colored={{{}}} tokens={:?} rounds_left={rounds}",
        s.colored(),
        s.token_vec()
    )
}

/// Prompts until a line passes `check`. `None` means end of input.
fn ask(
    input: &mut dyn BufRead,
    out: &mut dyn Write,
    prompt: &str,
    check: &dyn Fn(VertexSet) -> Result<(), String>,
) -> std::io::Result<Option<VertexSet>> {
    loop {
        write!(out, "{prompt}")?;
        out.flush()?;
        let mut line = String::new();
        if input.read_line(&mut line)? == 0 {
            return Ok(None);
        }
        match parse_ids(&line).and_then(|set| check(set).map(|()| set)) {
            Ok(set) => return Ok(Some(set)),
            Err(why) => writeln!(out, "illegal: {why}")?,
        }
    }
}

/// Runs one interactive game. The human's moves come from `input`;
/// prompts and the engine's moves go to `out`.
pub fn session(
    solver: &mut Solver,
    f: &TokenAssignment,
    variant: Variant,
    role: Role,
    input: &mut dyn BufRead,
    out: &mut dyn Write,
) -> Result<Ending, Failure> {
    let g: Graph = solver.graph().clone();
    let io = |e: std::io::Error| Failure::Precondition(e.to_string());
    let mut s = GameState::initial(f, variant);
    let (lister, painter) = match role {
        Role::Lister => ("human", "optimal"),
        Role::Painter => ("optimal", "human"),
    };
    let mut transcript = Transcript {
        graph6: g.to_graph6(),
        budget: f.clone(),
        variant,
        lister: lister.into(),
        painter: painter.into(),
        rounds: Vec::new(),
        verdict: paintability::Verdict::PainterWins,
    };
    loop {
        if let Some(v) = outcome(&s) {
            transcript.verdict = v;
            writeln!(out, "game over: {v}").map_err(io)?;
            return Ok(Ending::Finished(transcript));
        }
        let round = transcript.rounds.len() + 1;
        writeln!(out, "round {round}").map_err(io)?;
        show_state(out, &s).map_err(io)?;
        let marked = match role {
            Role::Lister => {
                let check = |v: VertexSet| s.check_lister_move(v).map_err(|e| e.to_string());
                match ask(input, out, "mark> ", &check).map_err(io)? {
                    Some(v) => v,
                    None => return Ok(Ending::Aborted(transcript)),
                }
            }
            Role::Painter => {
                let v = solver.best_lister_move(&s, variant).map_err(precondition)?;
                writeln!(out, "marked={{{v}}}").map_err(io)?;
                v
            }
        };
        let painted = match role {
            Role::Painter => {
                let check = |x: VertexSet| {
                    s.check_painter_response(&g, marked, x)
                        .map_err(|e| e.to_string())
                };
                match ask(input, out, "color> ", &check).map_err(io)? {
                    Some(x) => x,
                    None => return Ok(Ending::Aborted(transcript)),
                }
            }
            Role::Lister => {
                let x = solver
                    .best_painter_response(&s, marked, variant)
                    .map_err(precondition)?;
                writeln!(out, "painter colors {{{x}}}").map_err(io)?;
                x
            }
        };
        s = s.apply_round(&g, marked, painted).map_err(precondition)?;
        transcript.rounds.push(Round {
            marked,
            painted,
            after: Snapshot::of(&s),
        });
    }
}

pub fn run(args: &PlayArgs) -> Result<u8, Failure> {
    let variant: Variant = args.variant.parse().map_err(Failure::Usage)?;
    if variant == Variant::CostGame {
        return Err(Failure::Usage(
            "play supports unbounded and exact:T games".into(),
        ));
    }
    let graphs = args.graph.load()?;
    let [g] = graphs.as_slice() else {
        return Err(Failure::Usage("play needs exactly one graph".into()));
    };
    let f = load_budget(&args.budget, g)?;
    f.check_against(g).map_err(precondition)?;
    let mut solver = Solver::with_config(g, args.caps.solver_config()?).map_err(precondition)?;
    let stdin = std::io::stdin();
    let mut input = stdin.lock();
    let mut stdout = std::io::stdout();
    let ending = session(&mut solver, &f, variant, args.role, &mut input, &mut stdout)?;
    let (text, code) = match ending {
        Ending::Finished(t) => (t.to_text(), 0),
        Ending::Aborted(t) => {
            println!();
            println!("input ended; session aborted");
            let text = t.to_text();
            let body = text
                .trim_end()
                .rsplit_once('\n')
                .map_or("", |(head, _)| head);
            (format!("{body}\nverdict=aborted\n"), 2)
        }
    };
    match &args.transcript {
        Some(path) => {
            std::fs::write(path, &text)
                .map_err(|e| Failure::Precondition(format!("{}: {e}", path.display())))?;
            println!("transcript saved to {}", path.display());
        }
        None => print!("{text}"),
    }
    Ok(code)
}

#[cfg(test)]
mod tests {
    use super::*;
    use paintability::graph::make_cycle;

    fn play(g: &Graph, variant: Variant, role: Role, moves: &str) -> (Ending, String) {
        let mut solver = Solver::new(g).unwrap();
        let f = TokenAssignment::uniform(g.n(), 2).unwrap();
        let mut out = Vec::new();
        let ending = session(
            &mut solver,
            &f,
            variant,
            role,
            &mut moves.as_bytes(),
            &mut out,
        )
        .unwrap();
        (ending, String::from_utf8(out).unwrap())
    }

    #[test]
    fn painter_wins_c4_with_partite_sets() {
        let (ending, text) = play(
            &make_cycle(4).unwrap(),
            Variant::ExactRounds(2),
            Role::Painter,
            "0 2\n1 3\n",
        );
        let Ending::Finished(t) = ending else {
            panic!("{text}")
        };
        assert_eq!(t.verdict, paintability::Verdict::PainterWins);
        assert!(text.contains("marked={0,1,2,3}"), "{text}");
        assert_eq!(t.replay().unwrap(), t.verdict);
    }

    #[test]
    fn adjacent_pair_is_reprompted() {
        let (_, text) = play(
            &make_cycle(4).unwrap(),
            Variant::ExactRounds(2),
            Role::Painter,
            "0 1\n0 2\n1 3\n",
        );
        assert!(
            text.contains("illegal: response is not independent"),
            "{text}"
        );
    }

    #[test]
    fn eof_aborts() {
        let (ending, _) = play(
            &make_cycle(5).unwrap(),
            Variant::ExactRounds(5),
            Role::Lister,
            "0 1 2 3 4\n",
        );
        let Ending::Aborted(t) = ending else {
            panic!("expected abort")
        };
        assert_eq!(t.rounds.len(), 1);
    }

    #[test]
    fn id_parsing() {
        assert_eq!(parse_ids(" 0, 2 4 ").unwrap().to_vec(), vec![0, 2, 4]);
        assert!(parse_ids("x").is_err());
        assert!(parse_ids("").unwrap().is_empty());
    }
}
