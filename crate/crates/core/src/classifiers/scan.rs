//! For each small graph, the set of round counts at which Painter loses,
//! and whether that set is an interval.

use std::fmt::Write;

use rayon::prelude::*;
use serde::Serialize;

use super::suites::SuiteError;
use crate::game::{Solver, SolverConfig, TokenAssignment, Variant, Verdict};
use crate::graph::{enumerate_connected_graphs, Family, Graph};

/// Which budgets to scan on each graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ScanBudget {
    /// Two tokens on every vertex.
    #[default]
    Uniform2,
    /// Two tokens everywhere except one vertex with one, for every choice
    /// of that vertex.
    FPrime,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScanConfig {
    pub n_max: usize,
    pub budget: ScanBudget,
    /// Restrict to graphs isomorphic to a member of this family.
    pub family: Option<Family>,
}

impl ScanConfig {
    pub fn new(n_max: usize) -> ScanConfig {
        ScanConfig {
            n_max,
            budget: ScanBudget::Uniform2,
            family: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanRow {
    pub graph6: String,
    pub n: usize,
    /// The budget, as a comma-separated token list.
    pub f: String,
    /// Every `t` in `1..=sum f` at which Lister wins the exact game.
    pub lister_wins: Vec<u32>,
    /// Whether `lister_wins` is a run of consecutive integers (vacuously
    /// true when empty).
    pub contiguous: bool,
    /// No `t` is lost: Painter wins at every feasible round count.
    pub paintable: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanReport {
    pub n_max: usize,
    pub rows: Vec<ScanRow>,
}

impl ScanReport {
    pub fn counterexamples(&self) -> impl Iterator<Item = &ScanRow> {
        self.rows.iter().filter(|r| !r.contiguous)
    }

    pub fn all_contiguous(&self) -> bool {
        self.counterexamples().next().is_none()
    }

    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for r in &self.rows {
            out.push_str(&serde_json::to_string(r).expect("rows serialize"));
            out.push('\n');
        }
        out
    }

    pub fn summary(&self) -> String {
        let lost = self.rows.iter().filter(|r| !r.paintable).count();
        let mut out = format!(
            "{} instances, {} with some losing t, {} non-contiguous\n",
            self.rows.len(),
            lost,
            self.counterexamples().count()
        );
        for r in self.counterexamples() {
            let _ = writeln!(
                out,
                "counterexample {} f={} lister wins at {:?}",
                r.graph6, r.f, r.lister_wins
            );
        }
        if self.all_contiguous() {
            let _ = writeln!(out, "all contiguous up to n = {}", self.n_max);
        }
        out
    }
}

fn is_run(ts: &[u32]) -> bool {
    ts.windows(2).all(|w| w[1] == w[0] + 1)
}

fn scan_one(g: &Graph, f: &TokenAssignment) -> Result<ScanRow, SuiteError> {
    let config = SolverConfig {
        max_n: g.n().max(SolverConfig::default().max_n),
        ..Default::default()
    };
    let mut s = Solver::with_config(g, config)?;
    let mut lister_wins = Vec::new();
    for t in 1..=f.total() {
        if s.solve(f, Variant::ExactRounds(t))? == Verdict::ListerWins {
            lister_wins.push(t);
        }
    }
    let f_text: Vec<String> = f.as_slice().iter().map(u8::to_string).collect();
    Ok(ScanRow {
        graph6: g.to_graph6(),
        n: g.n(),
        f: f_text.join(","),
        contiguous: is_run(&lister_wins),
        paintable: lister_wins.is_empty(),
        lister_wins,
    })
}

/// Scans every connected graph up to `config.n_max` vertices (optionally
/// restricted to one family) under the configured budgets.
pub fn interval_scan(config: &ScanConfig) -> Result<ScanReport, SuiteError> {
    let mut jobs = Vec::new();
    for n in 1..=config.n_max {
        for g in enumerate_connected_graphs(n)? {
            if config.family.is_some_and(|fam| !fam.contains(&g)) {
                continue;
            }
            match config.budget {
                ScanBudget::Uniform2 => jobs.push((g.clone(), TokenAssignment::uniform(n, 2)?)),
                ScanBudget::FPrime => {
                    for u in 0..n {
                        jobs.push((g.clone(), TokenAssignment::f_prime(n, u)?));
                    }
                }
            }
        }
    }
    let rows = jobs
        .par_iter()
        .map(|(g, f)| scan_one(g, f))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(ScanReport {
        n_max: config.n_max,
        rows,
    })
}
