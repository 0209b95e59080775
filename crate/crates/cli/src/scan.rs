use clap::{Args, ValueEnum};
use paintability::classifiers::{interval_scan, ScanBudget, ScanConfig};
use paintability::graph::Family;

use crate::{precondition, Failure, Output};

#[derive(Args, Debug)]
pub struct ScanArgs {
    /// Largest graph size to scan.
    #[arg(long, default_value_t = 5)]
    nmax: usize,

    /// Only scan members of this family (path, cycle, complete, theta, k2n,
    /// dumbbell, tadpole).
    #[arg(long)]
    family_only: Option<String>,

    #[arg(long, value_enum, default_value_t = Budget::Uniform2)]
    budget: Budget,

    /// Lift the default size caps.
    #[arg(long)]
    i_know_this_is_big: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Budget {
    /// Two tokens everywhere.
    Uniform2,
    /// Two tokens everywhere but one vertex, every choice of that vertex.
    Fprime,
}

pub fn run(args: &ScanArgs, output: Output) -> Result<u8, Failure> {
    let (budget, cap) = match args.budget {
        Budget::Uniform2 => (ScanBudget::Uniform2, 6),
        Budget::Fprime => (ScanBudget::FPrime, 5),
    };
    if args.nmax > cap && !args.i_know_this_is_big {
        return Err(Failure::Precondition(format!(
            "--nmax {} exceeds the cap of {cap} for this budget; add --i-know-this-is-big",
            args.nmax
        )));
    }
    let family = match &args.family_only {
        Some(name) => Some(
            name.parse::<Family>()
                .map_err(|e| Failure::Usage(e.to_string()))?,
        ),
        None => None,
    };
    let config = ScanConfig {
        n_max: args.nmax,
        budget,
        family,
    };
    let report = interval_scan(&config).map_err(precondition)?;
    match output {
        Output::Json => {
            print!("{}", report.to_json_lines());
            eprint!("{}", report.summary());
        }
        Output::Text => {
            for r in &report.rows {
                println!(
                    "{:<10} f={} lister_wins={:?} {}",
                    r.graph6,
                    r.f,
                    r.lister_wins,
                    if r.contiguous {
                        "contiguous"
                    } else {
                        "NOT contiguous"
                    }
                );
            }
            print!("{}", report.summary());
        }
    }
    Ok(0)
}
