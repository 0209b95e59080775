use clap::Args;
use paintability::classifiers::{cross_validate, Suite};

use crate::{precondition, Failure, Output};

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Suite name, or "all".
    suite: String,

    /// Size bound (the suite's default when omitted).
    #[arg(long)]
    nmax: Option<usize>,

    /// Lift the default size caps.
    #[arg(long)]
    i_know_this_is_big: bool,
}

fn cap(suite: Suite) -> usize {
    match suite {
        Suite::FeasibilityOracle => 5,
        Suite::IntervalScan => 6,
        Suite::Strategies => 9,
        _ => 7,
    }
}

pub fn run(args: &VerifyArgs, output: Output) -> Result<u8, Failure> {
    let suites: Vec<Suite> = if args.suite == "all" {
        Suite::ALL.to_vec()
    } else {
        vec![args
            .suite
            .parse()
            .map_err(|e: paintability::classifiers::SuiteError| {
                let names: Vec<&str> = Suite::ALL.iter().map(|s| s.name()).collect();
                Failure::Usage(format!("{e}; known suites: {}, all", names.join(", ")))
            })?]
    };
    let mut mismatches = 0;
    for suite in suites {
        if let Some(n) = args.nmax {
            if n > cap(suite) && !args.i_know_this_is_big {
                return Err(Failure::Precondition(format!(
                    "{suite}: --nmax {n} exceeds the cap of {}; add --i-know-this-is-big",
                    cap(suite)
                )));
            }
        }
        let report = cross_validate(suite, args.nmax).map_err(precondition)?;
        mismatches += report.mismatch_count();
        match output {
            Output::Json => {
                print!("{}", report.to_json_lines());
                eprint!("{}", report.summary());
            }
            Output::Text => print!("{}", report.summary()),
        }
    }
    Ok(if mismatches == 0 { 0 } else { 1 })
}
