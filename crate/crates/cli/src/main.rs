mod play;
mod scan;
mod solve;
mod source;
mod verify;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::source::GraphArgs;

/// Exact solver and verification harness for online list-coloring games.
#[derive(Parser, Debug)]
#[command(name = "paintability", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Worker threads for verify and scan (default: all cores).
    #[arg(long, global = true)]
    workers: Option<usize>,

    #[arg(long, global = true, value_enum, default_value_t = Output::Json)]
    output: Output,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Solve one game or compute m, M or q.
    Solve(solve::SolveArgs),
    /// Run a verification suite ("all" runs every suite).
    Verify(verify::VerifyArgs),
    /// For every small graph, list the round counts Painter loses.
    Scan(scan::ScanArgs),
    /// Play interactively against the exact solver.
    Play(play::PlayArgs),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Output {
    Json,
    Text,
}

/// Size limits shared by every command that runs the solver.
#[derive(Args, Debug, Clone)]
struct Caps {
    /// Largest graph handed to the solver.
    #[arg(long, default_value_t = 10)]
    max_n: usize,

    /// Stored positions per memo table before giving up.
    #[arg(long, default_value_t = 1 << 25)]
    memo_capacity: usize,

    /// Lift the default size caps.
    #[arg(long)]
    i_know_this_is_big: bool,
}

impl Caps {
    fn solver_config(&self) -> Result<paintability::game::SolverConfig, Failure> {
        if self.max_n > 10 && !self.i_know_this_is_big {
            return Err(Failure::Precondition(format!(
                "--max-n {} exceeds the default cap of 10; add --i-know-this-is-big",
                self.max_n
            )));
        }
        if self.max_n == 0 || self.memo_capacity == 0 {
            return Err(Failure::Usage("caps must be positive".into()));
        }
        Ok(paintability::game::SolverConfig {
            max_n: self.max_n,
            memo_capacity: self.memo_capacity,
            ..Default::default()
        })
    }
}

/// Why a command stopped early, mapped to an exit code.
#[derive(Debug)]
enum Failure {
    /// Bad flags or arguments: exit 64.
    Usage(String),
    /// Valid request the instance does not satisfy: exit 2.
    Precondition(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 64,
            Failure::Precondition(_) => 2,
        }
    }
}

fn precondition(e: impl std::fmt::Display) -> Failure {
    Failure::Precondition(e.to_string())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 64 } else { 0 });
        }
    };
    if let Some(workers) = cli.workers {
        if workers == 0 {
            eprintln!("error: --workers must be positive");
            return ExitCode::from(64);
        }
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build_global();
    }
    let result = match &cli.command {
        Command::Solve(args) => solve::run(args, cli.output),
        Command::Verify(args) => verify::run(args, cli.output),
        Command::Scan(args) => scan::run(args, cli.output),
        Command::Play(args) => play::run(args),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            match &f {
                Failure::Usage(m) | Failure::Precondition(m) => eprintln!("error: {m}"),
            }
            ExitCode::from(f.code())
        }
    }
}
