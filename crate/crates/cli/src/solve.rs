use clap::Args;
use paintability::game::{CostValue, Solver, TokenAssignment, Variant};
use serde_json::{json, Map, Value};

use crate::{precondition, Caps, Failure, GraphArgs, Output};

#[derive(Args, Debug)]
pub struct SolveArgs {
    #[command(flatten)]
    graph: GraphArgs,

    /// Token budget: uniform:K, fprime:V, fstar, fdoubleprime, or a file of
    /// "v k" lines.
    #[arg(long = "f", default_value = "uniform:2")]
    budget: String,

    /// unbounded, cost, or exact:T.
    #[arg(long, default_value = "unbounded")]
    variant: String,

    /// What to report: verdict, m, M or q.
    #[arg(long, default_value = "verdict")]
    compute: String,

    #[command(flatten)]
    caps: Caps,
}

#[derive(Clone, Copy)]
enum Quantity {
    Verdict,
    SmallM,
    BigM,
    Q,
}

fn parse_quantity(s: &str) -> Result<Quantity, Failure> {
    match s {
        "verdict" => Ok(Quantity::Verdict),
        "m" => Ok(Quantity::SmallM),
        "M" => Ok(Quantity::BigM),
        "q" => Ok(Quantity::Q),
        other => Err(Failure::Usage(format!(
            "--compute {other:?}: expected verdict, m, M or q"
        ))),
    }
}

pub fn load_budget(spec: &str, g: &paintability::graph::Graph) -> Result<TokenAssignment, Failure> {
    match TokenAssignment::parse(spec, g) {
        Ok(f) => Ok(f),
        Err(e) => match std::fs::read_to_string(spec) {
            Ok(text) => TokenAssignment::parse(&text, g).map_err(precondition),
            Err(_) => Err(precondition(e)),
        },
    }
}

pub fn run(args: &SolveArgs, output: Output) -> Result<u8, Failure> {
    let quantity = parse_quantity(&args.compute)?;
    let variant: Variant = args.variant.parse().map_err(Failure::Usage)?;
    let config = args.caps.solver_config()?;
    let stream = args.graph.is_stream();
    for g in args.graph.load()? {
        let f = load_budget(&args.budget, &g)?;
        let mut solver = Solver::with_config(&g, config).map_err(precondition)?;
        let (key, value) = match quantity {
            Quantity::Verdict => {
                let v = match variant {
                    Variant::CostGame => match solver.compute_q(&f).map_err(precondition)? {
                        CostValue::Survives => paintability::Verdict::PainterWins,
                        CostValue::Finite(_) => paintability::Verdict::ListerWins,
                    },
                    _ => solver.solve(&f, variant).map_err(precondition)?,
                };
                ("verdict", json!(v.to_string()))
            }
            Quantity::SmallM => ("m", json!(solver.compute_m(&f).map_err(precondition)?)),
            Quantity::BigM => ("M", json!(solver.compute_M(&f).map_err(precondition)?)),
            Quantity::Q => {
                let q = match solver.compute_q(&f).map_err(precondition)? {
                    CostValue::Finite(q) => json!(q),
                    CostValue::Survives => json!("Survives"),
                };
                ("q", q)
            }
        };
        match output {
            Output::Json => {
                let mut obj = Map::new();
                if stream {
                    obj.insert("graph6".into(), json!(g.to_graph6()));
                }
                obj.insert(key.into(), value);
                println!("{}", Value::Object(obj));
            }
            Output::Text => {
                let shown = match &value {
                    Value::String(s) => s.clone(),
                    Value::Null => "undefined".into(),
                    other => other.to_string(),
                };
                if stream {
                    println!("{} {key} = {shown}", g.to_graph6());
                } else {
                    println!("{key} = {shown}");
                }
            }
        }
    }
    Ok(0)
}
