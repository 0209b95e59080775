//! Verification suites: each one compares a prediction (a classifier, a
//! closed form, a scripted strategy, a restricted search) against the
//! exact solver on every instance of a small universe.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde_json::{json, Value};
use thiserror::Error;

use super::scan::{interval_scan, ScanConfig};
use super::{
    is_2_paintable_structural, m_classifier, m_extremes_classifier, ClassifyError, Record, Report,
};
use crate::game::{
    schedule_feasible, CostValue, ResponseMode, SolveError, Solver, SolverConfig, TokenAssignment,
    TokenError, Variant, Verdict,
};
use crate::graph::{
    enumerate_connected_graphs, enumerate_trees, make_cycle, make_k2n, make_path, Graph,
    GraphError, VertexSet,
};
use crate::strategies::{
    path_lister_bound, referee_with, tadpole_lister_bound, BipartitePainter, K2nPainter,
    KernelPainter, Lister, ListerKind, Painter, PlanLister,
};

#[derive(Debug, Error)]
pub enum SuiteError {
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error(transparent)]
    Classify(#[from] ClassifyError),
    #[error(transparent)]
    Tokens(#[from] TokenError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    /// `C_n` with 2 tokens each is lost by Painter exactly for `2 <= t <= n`.
    OddCycleRounds,
    /// `M = sum f - q` with `f = 2`.
    CostIdentity,
    /// Structural characterizations of `q = 1`, `q = 2` and (for `h = 2`)
    /// `q = 3` over all budgets `h` in `{1, 2}`.
    SmallCosts,
    /// `m_classifier` against `compute_m`.
    MinRounds,
    /// `n <= M <= 2n - 3`.
    MBounds,
    /// `m_extremes_classifier` fires exactly when `M` is `n`, `n + 1` or
    /// `2n - 3`, with the right value.
    MExtremes,
    /// Structural 2-paintability against the unbounded game.
    TwoPaintable,
    /// A disjoint union is 2-paintable iff both parts are.
    Union,
    /// Deleting an edge or a vertex of weight `w` lowers `M` by at most `w`.
    SubgraphMonotonicity,
    /// Scripted players beat the optimal opponent inside their envelopes.
    Strategies,
    /// `schedule_feasible` against an explicit search for a schedule.
    FeasibilityOracle,
    /// Restricting Painter to maximal responses changes no value.
    Dominance,
    /// Letting Lister re-mark colored vertices outside exact games changes
    /// no value.
    Remarking,
    /// The losing round counts of every graph, reported for audit; odd
    /// cycles must read `2..=n`.
    IntervalScan,
}

impl Suite {
    pub const ALL: [Suite; 14] = [
        Suite::OddCycleRounds,
        Suite::CostIdentity,
        Suite::SmallCosts,
        Suite::MinRounds,
        Suite::MBounds,
        Suite::MExtremes,
        Suite::TwoPaintable,
        Suite::Union,
        Suite::SubgraphMonotonicity,
        Suite::Strategies,
        Suite::FeasibilityOracle,
        Suite::Dominance,
        Suite::Remarking,
        Suite::IntervalScan,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::OddCycleRounds => "cycle-theorem",
            Suite::CostIdentity => "cost-identity",
            Suite::SmallCosts => "q-lemmas",
            Suite::MinRounds => "m-theorem",
            Suite::MBounds => "M-bounds",
            Suite::MExtremes => "M-extremes",
            Suite::TwoPaintable => "zhu",
            Suite::Union => "union",
            Suite::SubgraphMonotonicity => "subgraph-monotonicity",
            Suite::Strategies => "strategies",
            Suite::FeasibilityOracle => "feasibility-oracle",
            Suite::Dominance => "dominance",
            Suite::Remarking => "remarking",
            Suite::IntervalScan => "interval-scan",
        }
    }

    /// The size parameter used when none is given. Its meaning depends on
    /// the suite: the largest graph for most, the largest cycle for
    /// `cycle-theorem`, the combined size for `union`, the number of
    /// tokens in a vector for `feasibility-oracle`.
    pub fn default_n_max(self) -> usize {
        match self {
            Suite::OddCycleRounds | Suite::TwoPaintable | Suite::Union => 7,
            Suite::CostIdentity
            | Suite::MinRounds
            | Suite::MBounds
            | Suite::MExtremes
            | Suite::SubgraphMonotonicity => 6,
            Suite::SmallCosts | Suite::Dominance | Suite::IntervalScan => 5,
            Suite::FeasibilityOracle | Suite::Remarking => 4,
            Suite::Strategies => 8,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = SuiteError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| SuiteError::UnknownSuite(s.to_string()))
    }
}

/// Runs one suite over its universe, up to `n_max` (or the suite default).
/// Mismatches are report content, not errors.
pub fn cross_validate(suite: Suite, n_max: Option<usize>) -> Result<Report, SuiteError> {
    let n_max = n_max.unwrap_or(suite.default_n_max());
    let records = match suite {
        Suite::OddCycleRounds => odd_cycle_rounds(n_max)?,
        Suite::CostIdentity => per_graph(&nonpaintable(n_max)?, cost_identity)?,
        Suite::SmallCosts => small_costs(n_max)?,
        Suite::MinRounds => per_graph(&nonpaintable(n_max)?, min_rounds)?,
        Suite::MBounds => per_graph(&nonpaintable(n_max)?, m_bounds)?,
        Suite::MExtremes => per_graph(&nonpaintable(n_max)?, m_extremes)?,
        Suite::TwoPaintable => per_graph(&connected(n_max)?, two_paintable)?,
        Suite::Union => union(n_max)?,
        Suite::SubgraphMonotonicity => per_graph(&nonpaintable(n_max)?, subgraph_monotonicity)?,
        Suite::Strategies => strategies(n_max)?,
        Suite::FeasibilityOracle => feasibility(n_max),
        Suite::Dominance => per_graph(&connected(n_max)?, dominance)?,
        Suite::Remarking => per_graph(&connected(n_max)?, remarking)?,
        Suite::IntervalScan => scan_records(n_max)?,
    };
    Ok(Report {
        suite: suite.name().to_string(),
        records,
    })
}

/// Every connected graph on `1..=n_max` vertices, by increasing size.
fn connected(n_max: usize) -> Result<Vec<Graph>, GraphError> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        out.extend(enumerate_connected_graphs(n)?);
    }
    Ok(out)
}

fn nonpaintable(n_max: usize) -> Result<Vec<Graph>, SuiteError> {
    let mut out = Vec::new();
    for g in connected(n_max)? {
        if !is_2_paintable_structural(&g)? {
            out.push(g);
        }
    }
    Ok(out)
}

fn per_graph<F>(graphs: &[Graph], check: F) -> Result<Vec<Record>, SuiteError>
where
    F: Fn(&Graph) -> Result<Vec<Record>, SuiteError> + Sync + Send,
{
    let nested: Vec<Vec<Record>> = graphs.par_iter().map(check).collect::<Result<_, _>>()?;
    Ok(nested.into_iter().flatten().collect())
}

fn solver(g: &Graph) -> Result<Solver, SolveError> {
    Solver::with_config(
        g,
        SolverConfig {
            max_n: g.n().max(SolverConfig::default().max_n),
            ..Default::default()
        },
    )
}

fn twos(g: &Graph) -> TokenAssignment {
    TokenAssignment::uniform(g.n(), 2).expect("2 is a valid token count")
}

fn opt(v: Option<u32>) -> Value {
    v.map_or(Value::Null, Value::from)
}

fn cost_json(c: CostValue) -> Value {
    match c {
        CostValue::Finite(q) => json!(q),
        CostValue::Survives => json!("Survives"),
    }
}

fn odd_cycle_rounds(n_max: usize) -> Result<Vec<Record>, SuiteError> {
    let cycles: Vec<Graph> = (3..=n_max)
        .step_by(2)
        .map(make_cycle)
        .collect::<Result<_, _>>()?;
    per_graph(&cycles, |g| {
        let n = g.n() as u32;
        let f = twos(g);
        let mut s = solver(g)?;
        let mut out = Vec::new();
        for t in 2..=2 * n {
            let expected = if t <= n {
                Verdict::ListerWins
            } else {
                Verdict::PainterWins
            };
            let got = s.solve(&f, Variant::ExactRounds(t))?;
            out.push(
                Record::compare(
                    g.to_graph6(),
                    g.n(),
                    json!(expected.to_string()),
                    json!(got.to_string()),
                )
                .with_case(format!("t={t}")),
            );
        }
        Ok(out)
    })
}

fn cost_identity(g: &Graph) -> Result<Vec<Record>, SuiteError> {
    let f = twos(g);
    let mut s = solver(g)?;
    let predicted = match s.compute_q(&f)? {
        CostValue::Finite(q) => json!(f.total() - q),
        CostValue::Survives => Value::Null,
    };
    let got = opt(s.compute_M(&f)?);
    Ok(vec![Record::compare(g.to_graph6(), g.n(), predicted, got)])
}

fn min_rounds(g: &Graph) -> Result<Vec<Record>, SuiteError> {
    let predicted = m_classifier(g)?.value();
    let got = solver(g)?.compute_m(&twos(g))?;
    Ok(vec![Record::compare(
        g.to_graph6(),
        g.n(),
        json!(predicted),
        opt(got),
    )])
}

fn m_bounds(g: &Graph) -> Result<Vec<Record>, SuiteError> {
    let n = g.n() as u32;
    let got = solver(g)?.compute_M(&twos(g))?;
    let ok = got.is_some_and(|m| n <= m && m + 3 <= 2 * n);
    Ok(vec![Record::new(
        g.to_graph6(),
        g.n(),
        json!({"min": n, "max": (2 * n).saturating_sub(3)}),
        opt(got),
        ok,
    )])
}

fn m_extremes(g: &Graph) -> Result<Vec<Record>, SuiteError> {
    let n = g.n() as u32;
    let predicted = m_extremes_classifier(g)?;
    let got = solver(g)?.compute_M(&twos(g))?;
    let extreme = got.filter(|&m| m == n || m == n + 1 || m + 3 == 2 * n);
    let ok = predicted.value == extreme && got.is_some();
    let classifier = serde_json::to_value(&predicted).expect("serializable");
    Ok(vec![Record::new(
        g.to_graph6(),
        g.n(),
        classifier,
        opt(got),
        ok,
    )])
}

fn two_paintable(g: &Graph) -> Result<Vec<Record>, SuiteError> {
    let predicted = is_2_paintable_structural(g)?;
    let got = solver(g)?.solve(&twos(g), Variant::Unbounded)? == Verdict::PainterWins;
    Ok(vec![Record::compare(
        g.to_graph6(),
        g.n(),
        json!(predicted),
        json!(got),
    )])
}

/// Does `(g, h)` contain an edge whose ends both have budget 1?
fn has_p2(g: &Graph, ones: VertexSet) -> bool {
    g.edges().any(|(u, v)| ones.contains(u) && ones.contains(v))
}

/// The configurations that allow Lister to win at cost 2, assuming no
/// edge joins two budget-1 vertices: a path `1-2-1` on three vertices, a
/// path `1-2-2-1` on four, or a triangle with budgets `1, 2, 2`.
fn has_cost_two_config(g: &Graph, ones: VertexSet) -> bool {
    let twos = g.vertices().difference(ones);
    for b in twos {
        let nb = g.neighbors(b);
        if nb.intersection(ones).len() >= 2 {
            return true;
        }
        for c in nb.intersection(twos) {
            let a_side = nb.intersection(ones);
            let d_side = g.neighbors(c).intersection(ones);
            if !a_side.is_empty() && !d_side.is_empty() && a_side.union(d_side).len() >= 2 {
                return true;
            }
            if !a_side.intersection(g.neighbors(c)).is_empty() {
                return true;
            }
        }
    }
    false
}

fn q_label(q: CostValue, uniform_two: bool) -> String {
    match q {
        CostValue::Finite(k) if k <= 2 => k.to_string(),
        CostValue::Finite(3) if uniform_two => "3".into(),
        _ if uniform_two => ">=4".into(),
        _ => ">=3".into(),
    }
}

fn small_costs(n_max: usize) -> Result<Vec<Record>, SuiteError> {
    per_graph(&connected(n_max)?, |g| {
        let n = g.n();
        let mut s = solver(g)?;
        let mut out = Vec::new();
        for ones in VertexSet::full(n).subsets() {
            let h: Vec<u8> = (0..n)
                .map(|v| if ones.contains(v) { 1 } else { 2 })
                .collect();
            let uniform_two = ones.is_empty();
            let predicted = if has_p2(g, ones) {
                "1".to_string()
            } else if has_cost_two_config(g, ones) {
                "2".to_string()
            } else if uniform_two {
                if g.contains_triangle() { "3" } else { ">=4" }.to_string()
            } else {
                ">=3".to_string()
            };
            let q = s.compute_q(&TokenAssignment::new(h.clone())?)?;
            let case: String = h.iter().map(u8::to_string).collect();
            out.push(
                Record::compare(
                    g.to_graph6(),
                    n,
                    json!(predicted),
                    json!(q_label(q, uniform_two)),
                )
                .with_case(format!("h={case} q={q}")),
            );
        }
        Ok(out)
    })
}

fn union(n_max: usize) -> Result<Vec<Record>, SuiteError> {
    let graphs = connected(n_max.saturating_sub(1))?;
    let verdicts: Vec<Verdict> = graphs
        .par_iter()
        .map(|g| solver(g)?.solve(&twos(g), Variant::Unbounded))
        .collect::<Result<_, SolveError>>()?;
    let mut pairs = Vec::new();
    for i in 0..graphs.len() {
        for j in i..graphs.len() {
            if graphs[i].n() + graphs[j].n() <= n_max {
                pairs.push((i, j));
            }
        }
    }
    let nested: Vec<Record> = pairs
        .par_iter()
        .map(|&(i, j)| {
            let u = graphs[i].disjoint_union(&graphs[j])?;
            let both = verdicts[i] == Verdict::PainterWins && verdicts[j] == Verdict::PainterWins;
            let got = solver(&u)?.solve(&twos(&u), Variant::Unbounded)? == Verdict::PainterWins;
            Ok(
                Record::compare(u.to_graph6(), u.n(), json!(both), json!(got)).with_case(format!(
                    "{}+{}",
                    graphs[i].to_graph6(),
                    graphs[j].to_graph6()
                )),
            )
        })
        .collect::<Result<_, SuiteError>>()?;
    Ok(nested)
}

fn subgraph_monotonicity(g: &Graph) -> Result<Vec<Record>, SuiteError> {
    let f = twos(g);
    let big = solver(g)?.compute_M(&f)?;
    let mut subs: Vec<(String, Graph)> = Vec::new();
    for (u, v) in g.edges() {
        let mut h = g.clone();
        h.remove_edge(u, v);
        subs.push((format!("minus edge {u}-{v}"), h));
    }
    if g.n() > 1 {
        for v in 0..g.n() {
            let keep = g.vertices().difference(VertexSet::singleton(v));
            subs.push((format!("minus vertex {v}"), g.induced(keep)?.0));
        }
    }
    let mut out = Vec::new();
    for (case, h) in subs {
        let Some(small) = solver(&h)?.compute_M(&twos(&h))? else {
            continue;
        };
        let bound = small + 2 * (g.n() - h.n()) as u32;
        let ok = big.is_some_and(|m| m >= bound);
        out.push(
            Record::new(
                g.to_graph6(),
                g.n(),
                json!({"at_least": bound}),
                opt(big),
                ok,
            )
            .with_case(case),
        );
    }
    Ok(out)
}

/// Searches for an explicit schedule: each vertex picks `tokens[v]`
/// distinct rounds out of `rounds`, and every round is picked by someone.
fn schedule_exists(tokens: &[u8], rounds: u32) -> bool {
    fn go(tokens: &[u8], rounds: u32, covered: u32) -> bool {
        let all = (1u32 << rounds) - 1;
        let Some((&k, rest)) = tokens.split_first() else {
            return covered == all;
        };
        (0..=all)
            .filter(|m| m.count_ones() == k as u32)
            .any(|m| go(rest, rounds, covered | m))
    }
    (1..32).contains(&rounds) && go(tokens, rounds, 0)
}

fn feasibility(n_max: usize) -> Vec<Record> {
    let mut vectors: Vec<Vec<u8>> = vec![vec![]];
    for _ in 0..n_max {
        vectors = vectors
            .into_iter()
            .flat_map(|v| {
                (0..=3u8).map(move |k| {
                    let mut w = v.clone();
                    w.push(k);
                    w
                })
            })
            .collect();
    }
    let mut out = Vec::new();
    for tokens in vectors {
        for rounds in 1..=8 {
            let predicted = schedule_feasible(&tokens, rounds);
            let got = schedule_exists(&tokens, rounds);
            let case: Vec<String> = tokens.iter().map(u8::to_string).collect();
            out.push(
                Record::compare(String::new(), tokens.len(), json!(predicted), json!(got))
                    .with_case(format!("tokens={} rounds={rounds}", case.join(","))),
            );
        }
    }
    out
}

fn dominance(g: &Graph) -> Result<Vec<Record>, SuiteError> {
    let f = twos(g);
    let mut maximal = solver(g)?;
    let mut exhaustive = Solver::with_config(
        g,
        SolverConfig {
            responses: ResponseMode::Exhaustive,
            ..*maximal.config()
        },
    )?;
    let mut out = Vec::new();
    let variants = [Variant::Unbounded]
        .into_iter()
        .chain((1..=f.total()).map(Variant::ExactRounds));
    for variant in variants {
        if let Variant::ExactRounds(t) = variant {
            if !schedule_feasible(f.as_slice(), t) {
                continue;
            }
        }
        let a = maximal.solve(&f, variant)?;
        let b = exhaustive.solve(&f, variant)?;
        out.push(
            Record::compare(
                g.to_graph6(),
                g.n(),
                json!(a.to_string()),
                json!(b.to_string()),
            )
            .with_case(variant.to_string()),
        );
    }
    let a = maximal.compute_q(&f)?;
    let b = exhaustive.compute_q(&f)?;
    out.push(Record::compare(g.to_graph6(), g.n(), cost_json(a), cost_json(b)).with_case("cost"));
    Ok(out)
}

fn remarking(g: &Graph) -> Result<Vec<Record>, SuiteError> {
    let n = g.n();
    let mut plain = solver(g)?;
    let mut loose = Solver::with_config(
        g,
        SolverConfig {
            unbounded_remarking: true,
            ..*plain.config()
        },
    )?;
    let mut out = Vec::new();
    for ones in VertexSet::full(n).subsets() {
        let h: Vec<u8> = (0..n)
            .map(|v| if ones.contains(v) { 1 } else { 2 })
            .collect();
        let f = TokenAssignment::new(h.clone())?;
        let case: String = h.iter().map(u8::to_string).collect();
        let a = plain.solve(&f, Variant::Unbounded)?;
        let b = loose.solve(&f, Variant::Unbounded)?;
        out.push(
            Record::compare(g.to_graph6(), n, json!(a.to_string()), json!(b.to_string()))
                .with_case(format!("h={case} unbounded")),
        );
        let a = plain.compute_q(&f)?;
        let b = loose.compute_q(&f)?;
        out.push(
            Record::compare(g.to_graph6(), n, cost_json(a), cost_json(b))
                .with_case(format!("h={case} cost")),
        );
    }
    Ok(out)
}

fn scan_records(n_max: usize) -> Result<Vec<Record>, SuiteError> {
    let report = interval_scan(&ScanConfig::new(n_max))?;
    let mut out = Vec::new();
    for row in report.rows {
        let g = Graph::from_graph6(&row.graph6)?;
        let got = json!({"lister_wins": row.lister_wins, "contiguous": row.contiguous});
        let record = if g.is_odd_cycle() {
            let expected: Vec<u32> = (2..=g.n() as u32).collect();
            let ok = row.lister_wins == expected;
            Record::new(row.graph6, row.n, json!({"lister_wins": expected}), got, ok)
        } else {
            Record::new(row.graph6, row.n, Value::Null, got, true)
        };
        out.push(record);
    }
    Ok(out)
}

#[derive(Clone, Copy)]
enum Scripted {
    Lister(ListerKind),
    TreePainter,
    CyclePainter,
    BipartitePainter,
    K2nPainter,
}

struct StrategyCase {
    g: Graph,
    f: TokenAssignment,
    variant: Variant,
    who: Scripted,
}

fn lister_cases(
    out: &mut Vec<StrategyCase>,
    kind: ListerKind,
    g: Graph,
    f: TokenAssignment,
    lo: u32,
    hi: u32,
) {
    for t in lo..=hi {
        out.push(StrategyCase {
            g: g.clone(),
            f: f.clone(),
            variant: Variant::ExactRounds(t),
            who: Scripted::Lister(kind),
        });
    }
}

/// Envelope instances for every scripted strategy. Listers and the tree
/// and cycle painters run on graphs with at most `n_max` vertices; the
/// `K_{2,n}` painter runs for `n <= n_max + 1`.
fn strategy_cases(n_max: usize) -> Result<Vec<StrategyCase>, SuiteError> {
    use crate::graph::{make_dumbbell, make_tadpole, make_theta};
    let mut out = Vec::new();
    for n in 2..=n_max {
        let g = make_path(n)?;
        let f = TokenAssignment::f_double_prime(&g)?;
        lister_cases(
            &mut out,
            ListerKind::PathSplitting,
            g,
            f,
            2,
            path_lister_bound(n),
        );
    }
    for n in (3..=n_max).step_by(2) {
        let g = make_cycle(n)?;
        lister_cases(
            &mut out,
            ListerKind::Cycle,
            g.clone(),
            twos(&g),
            2,
            n as u32,
        );
    }
    for m in 2..n_max {
        for c in 3..=n_max + 1 - m {
            let g = make_tadpole(m, c)?;
            let f = TokenAssignment::f_star(&g);
            let lo = if c % 2 == 1 { 2 } else { 3 };
            lister_cases(
                &mut out,
                ListerKind::Tadpole,
                g,
                f,
                lo,
                tadpole_lister_bound(m, c),
            );
        }
    }
    for a in 3..=n_max {
        for k in 1..=n_max {
            for b in a..=n_max {
                if a + k + b - 2 > n_max {
                    continue;
                }
                let g = make_dumbbell(a, k, b)?;
                let f = twos(&g);
                let (lo, hi) =
                    PlanLister::range(ListerKind::Dumbbell, &g, &f).expect("dumbbell labeling");
                lister_cases(&mut out, ListerKind::Dumbbell, g, f, lo, hi);
            }
        }
    }
    for p in 1..=n_max {
        for q in p.max(2)..=n_max {
            for r in q.max(3)..=n_max {
                if p + q + r - 1 > n_max || p + q < 4 {
                    continue;
                }
                let g = make_theta(p, q, r)?;
                let f = twos(&g);
                let (lo, hi) =
                    PlanLister::range(ListerKind::Theta, &g, &f).expect("theta labeling");
                lister_cases(&mut out, ListerKind::Theta, g, f, lo, hi);
            }
        }
    }
    for n in 4..=n_max.saturating_sub(2) {
        let g = make_k2n(n)?;
        lister_cases(
            &mut out,
            ListerKind::K24,
            g.clone(),
            twos(&g),
            4,
            4 + 2 * (n as u32 - 4),
        );
    }
    for n in 1..=n_max {
        for g in enumerate_trees(n)? {
            for root in 0..n {
                out.push(StrategyCase {
                    f: TokenAssignment::f_prime(n, root)?,
                    g: g.clone(),
                    variant: Variant::Unbounded,
                    who: Scripted::TreePainter,
                });
            }
        }
    }
    for n in 3..=n_max {
        let g = make_cycle(n)?;
        for t in n as u32 + 1..=2 * n as u32 {
            out.push(StrategyCase {
                f: twos(&g),
                g: g.clone(),
                variant: Variant::ExactRounds(t),
                who: Scripted::CyclePainter,
            });
        }
    }
    for n in 2..=n_max.min(6) {
        for g in enumerate_connected_graphs(n)? {
            if !g.is_bipartite() {
                continue;
            }
            let mut budgets = vec![twos(&g)];
            for u in 0..n {
                budgets.push(TokenAssignment::f_prime(n, u)?);
            }
            for f in budgets {
                out.push(StrategyCase {
                    g: g.clone(),
                    f,
                    variant: Variant::ExactRounds(2),
                    who: Scripted::BipartitePainter,
                });
            }
        }
    }
    for n in 2..=n_max + 1 {
        let g = make_k2n(n)?;
        out.push(StrategyCase {
            f: twos(&g),
            g,
            variant: Variant::ExactRounds(3),
            who: Scripted::K2nPainter,
        });
    }
    Ok(out)
}

fn play(case: &StrategyCase) -> Result<Record, SuiteError> {
    let mut s = solver(&case.g)?;
    let (expected, result) = match case.who {
        Scripted::Lister(kind) => {
            let mut l = PlanLister::new(kind);
            let r = referee_with(
                &mut s,
                &case.f,
                case.variant,
                Lister::Scripted(&mut l),
                Painter::Optimal,
            );
            (Verdict::ListerWins, r)
        }
        painter => {
            let mut tree = KernelPainter::tree();
            let mut cycle = KernelPainter::cycle();
            let mut bip = BipartitePainter::new();
            let mut k2n = K2nPainter::new();
            let p: &mut dyn crate::strategies::PainterStrategy = match painter {
                Scripted::TreePainter => &mut tree,
                Scripted::CyclePainter => &mut cycle,
                Scripted::BipartitePainter => &mut bip,
                _ => &mut k2n,
            };
            let r = referee_with(
                &mut s,
                &case.f,
                case.variant,
                Lister::Optimal,
                Painter::Scripted(p),
            );
            (Verdict::PainterWins, r)
        }
    };
    let got = match result {
        Ok(tr) => match tr.replay() {
            Ok(v) => v.to_string(),
            Err(e) => format!("replay failed: {e}"),
        },
        Err(e) => format!("error: {e}"),
    };
    let name = match case.who {
        Scripted::Lister(kind) => format!("{kind:?}"),
        Scripted::TreePainter => "KernelTree".into(),
        Scripted::CyclePainter => "KernelCycle".into(),
        Scripted::BipartitePainter => "Bipartite".into(),
        Scripted::K2nPainter => "K2n".into(),
    };
    let budget: Vec<String> = case.f.as_slice().iter().map(u8::to_string).collect();
    Ok(Record::compare(
        case.g.to_graph6(),
        case.g.n(),
        json!(expected.to_string()),
        json!(got),
    )
    .with_case(format!("{name} f={} {}", budget.join(","), case.variant)))
}

fn strategies(n_max: usize) -> Result<Vec<Record>, SuiteError> {
    let cases = strategy_cases(n_max)?;
    cases.par_iter().map(play).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::make_complete;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn schedule_search_small_cases() {
        assert!(schedule_exists(&[2, 2], 3));
        assert!(!schedule_exists(&[2, 2], 5));
        assert!(!schedule_exists(&[3], 2));
        assert!(schedule_exists(&[1, 0, 1], 2));
    }

    #[test]
    fn cost_two_configurations() {
        let p3 = make_path(3).unwrap();
        assert!(has_cost_two_config(&p3, VertexSet::from_iter([0, 2])));
        assert!(!has_cost_two_config(&p3, VertexSet::from_iter([0])));
        let p4 = make_path(4).unwrap();
        assert!(has_cost_two_config(&p4, VertexSet::from_iter([0, 3])));
        let k3 = make_complete(3).unwrap();
        assert!(has_cost_two_config(&k3, VertexSet::from_iter([1])));
        assert!(!has_cost_two_config(&k3, VertexSet::EMPTY));
    }

    #[test]
    fn small_suites_pass() {
        for (suite, n) in [
            (Suite::OddCycleRounds, 5),
            (Suite::CostIdentity, 4),
            (Suite::MinRounds, 4),
            (Suite::MExtremes, 4),
            (Suite::TwoPaintable, 5),
            (Suite::SmallCosts, 4),
            (Suite::FeasibilityOracle, 2),
        ] {
            let report = cross_validate(suite, Some(n)).unwrap();
            assert!(!report.records.is_empty(), "{suite}");
            assert!(report.passed(), "{}", report.summary());
        }
    }
}
