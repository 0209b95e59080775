//! End-to-end acceptance checks. Prints one PASS/FAIL line per criterion
//! and exits non-zero if any fails.

use std::process::ExitCode;
use std::time::Instant;

use paintability::classifiers::{
    cross_validate, interval_scan, is_2_paintable_structural, m_classifier, m_extremes_classifier,
    ScanConfig, Suite,
};
use paintability::game::{CostValue, Solver, SolverConfig, TokenAssignment, Variant, Verdict};
use paintability::graph::{
    enumerate_connected_graphs, enumerate_trees, is_isomorphic, make_cycle, make_k2n, make_path,
    Graph, VertexSet,
};
use paintability::strategies::{
    k24_lister, path_lister_bound, path_splitting_lister, referee_with, K2nPainter, KernelPainter,
    Lister, Painter, Transcript,
};

type Check = Result<String, String>;

fn twos(n: usize) -> TokenAssignment {
    TokenAssignment::uniform(n, 2).unwrap()
}

fn solver(g: &Graph) -> Solver {
    Solver::with_config(
        g,
        SolverConfig {
            max_n: 12,
            ..Default::default()
        },
    )
    .unwrap()
}

fn connected_up_to(n_max: usize) -> Vec<Graph> {
    (1..=n_max)
        .flat_map(|n| enumerate_connected_graphs(n).unwrap())
        .collect()
}

fn nonpaintable_up_to(n_max: usize) -> Vec<Graph> {
    connected_up_to(n_max)
        .into_iter()
        .filter(|g| !is_2_paintable_structural(g).unwrap())
        .collect()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn odd_cycle_rounds() -> Check {
    for n in [3usize, 5, 7] {
        let g = make_cycle(n).unwrap();
        let mut s = solver(&g);
        for t in 2..=2 * n as u32 {
            let want = if t <= n as u32 {
                Verdict::ListerWins
            } else {
                Verdict::PainterWins
            };
            let got = s.solve(&twos(n), Variant::ExactRounds(t)).unwrap();
            ensure(got == want, || {
                format!("C{n} t={t}: {got}, expected {want}")
            })?;
        }
    }
    Ok("C3, C5, C7 over 2 <= t <= 2n".into())
}

fn k24_landmark() -> Check {
    let g = make_k2n(4).unwrap();
    let mut s = solver(&g);
    let m = s.compute_m(&twos(6)).unwrap();
    let big_m = s.compute_M(&twos(6)).unwrap();
    ensure(m == Some(4) && big_m == Some(7), || {
        format!("m={m:?} M={big_m:?}")
    })?;
    Ok("m = 4, M = 7".into())
}

fn cost_identity() -> Check {
    let graphs = nonpaintable_up_to(6);
    for g in &graphs {
        let n = g.n() as u32;
        let mut s = solver(g);
        let q = s.compute_q(&twos(g.n())).unwrap();
        let big_m = s.compute_M(&twos(g.n())).unwrap();
        let want = q.finite().map(|q| 2 * n - q);
        ensure(big_m.is_some() && big_m == want, || {
            format!("{}: M={big_m:?} q={q}", g.to_graph6())
        })?;
    }
    Ok(format!("{} graphs", graphs.len()))
}

/// Ordered tuples of distinct vertices of length `k`.
fn tuples(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..k {
        let mut next = Vec::new();
        for t in &out {
            for v in (0..n).filter(|v| !t.contains(v)) {
                let mut u = t.clone();
                u.push(v);
                next.push(u);
            }
        }
        out = next;
    }
    out
}

/// `(g, h)` contains the path `P_k` with budgets `1, 2, .., 2, 1` (or the
/// pair `1, 1` when `k = 2`) as a subgraph.
fn contains_path_config(g: &Graph, h: &[u8], k: usize) -> bool {
    tuples(g.n(), k).into_iter().any(|p| {
        p.windows(2).all(|w| g.has_edge(w[0], w[1]))
            && p.iter()
                .enumerate()
                .all(|(i, &v)| h[v] == if i == 0 || i == k - 1 { 1 } else { 2 })
    })
}

fn contains_triangle_config(g: &Graph, h: &[u8]) -> bool {
    tuples(g.n(), 3).into_iter().any(|p| {
        g.has_edge(p[0], p[1])
            && g.has_edge(p[1], p[2])
            && g.has_edge(p[0], p[2])
            && h[p[0]] == 1
            && h[p[1]] == 2
            && h[p[2]] == 2
    })
}

fn small_costs() -> Check {
    let mut count = 0;
    for g in connected_up_to(5) {
        let n = g.n();
        let mut s = solver(&g);
        for ones in VertexSet::full(n).subsets() {
            let h: Vec<u8> = (0..n)
                .map(|v| if ones.contains(v) { 1 } else { 2 })
                .collect();
            let q = s
                .compute_q(&TokenAssignment::new(h.clone()).unwrap())
                .unwrap();
            let tag = || format!("{} h={h:?} q={q}", g.to_graph6());
            count += 1;
            ensure(q >= CostValue::Finite(1), tag)?;
            let p2 = contains_path_config(&g, &h, 2);
            ensure((q == CostValue::Finite(1)) == p2, tag)?;
            let two = !p2
                && (contains_path_config(&g, &h, 3)
                    || contains_path_config(&g, &h, 4)
                    || contains_triangle_config(&g, &h));
            ensure((q == CostValue::Finite(2)) == two, tag)?;
            if ones.is_empty() {
                ensure((q == CostValue::Finite(3)) == g.contains_triangle(), tag)?;
            }
        }
    }
    Ok(format!("{count} budgeted graphs"))
}

fn m_trichotomy() -> Check {
    let graphs = nonpaintable_up_to(6);
    for g in &graphs {
        let predicted = m_classifier(g).unwrap().value();
        let got = solver(g).compute_m(&twos(g.n())).unwrap();
        ensure(got == Some(predicted), || {
            format!("{}: classifier {predicted}, solver {got:?}", g.to_graph6())
        })?;
    }
    Ok(format!("{} graphs", graphs.len()))
}

fn m_bounds_and_extremes() -> Check {
    let graphs = nonpaintable_up_to(6);
    let mut fired = 0;
    for g in &graphs {
        let n = g.n() as u32;
        let big_m = solver(g)
            .compute_M(&twos(g.n()))
            .unwrap()
            .ok_or("M undefined")?;
        let tag = || format!("{}: M={big_m}", g.to_graph6());
        ensure(n <= big_m && big_m + 3 <= 2 * n, tag)?;
        ensure((big_m + 3 == 2 * n) == g.contains_triangle(), tag)?;
        ensure((big_m == n) == g.is_odd_cycle(), tag)?;
        let e = m_extremes_classifier(g).unwrap();
        if let Some(v) = e.value {
            fired += 1;
            ensure(v == big_m, tag)?;
        }
        ensure((big_m == n + 1) == (e.value == Some(n + 1)), tag)?;
    }
    let mut tadpole = Graph::from_edges(6, make_cycle(5).unwrap().edges()).unwrap();
    tadpole.add_edge(0, 5).unwrap();
    let m = solver(&tadpole).compute_M(&twos(6)).unwrap();
    ensure(m == Some(7), || format!("C5 plus pendant: M={m:?}"))?;
    Ok(format!(
        "{} graphs, {fired} with a firing clause",
        graphs.len()
    ))
}

fn two_paintable() -> Check {
    let sevens = enumerate_connected_graphs(7).unwrap().count();
    ensure(sevens == 853, || {
        format!("{sevens} connected graphs on 7 vertices")
    })?;
    let graphs = connected_up_to(7);
    for g in &graphs {
        let predicted = is_2_paintable_structural(g).unwrap();
        let got =
            solver(g).solve(&twos(g.n()), Variant::Unbounded).unwrap() == Verdict::PainterWins;
        ensure(predicted == got, || {
            format!("{}: structural {predicted}, solver {got}", g.to_graph6())
        })?;
    }
    Ok(format!("{} graphs", graphs.len()))
}

fn checked(tr: Transcript, want: Verdict, what: &str) -> Result<(), String> {
    let replayed = tr
        .replay()
        .map_err(|e| format!("{what}: replay failed: {e}"))?;
    ensure(replayed == want, || {
        format!("{what}: {replayed}\n{}", tr.to_text())
    })
}

fn strategies() -> Check {
    let mut games = 0;
    for n in 1..=8 {
        for g in enumerate_trees(n).unwrap() {
            let mut s = solver(&g);
            for root in 0..n {
                let f = TokenAssignment::f_prime(n, root).unwrap();
                let mut p = KernelPainter::tree();
                let tr = referee_with(
                    &mut s,
                    &f,
                    Variant::Unbounded,
                    Lister::Optimal,
                    Painter::Scripted(&mut p),
                )
                .map_err(|e| e.to_string())?;
                checked(
                    tr,
                    Verdict::PainterWins,
                    &format!("tree {} root {root}", g.to_graph6()),
                )?;
                games += 1;
            }
        }
    }
    for n in 2..=8 {
        let g = make_path(n).unwrap();
        let f = TokenAssignment::f_double_prime(&g).unwrap();
        let mut s = solver(&g);
        for t in 2..=path_lister_bound(n) {
            let mut l = path_splitting_lister();
            let tr = referee_with(
                &mut s,
                &f,
                Variant::ExactRounds(t),
                Lister::Scripted(&mut l),
                Painter::Optimal,
            )
            .map_err(|e| e.to_string())?;
            checked(tr, Verdict::ListerWins, &format!("P{n} t={t}"))?;
            games += 1;
        }
    }
    for n in 4..=9 {
        let g = make_k2n(n).unwrap();
        let mut p = K2nPainter::new();
        let tr = referee_with(
            &mut solver(&g),
            &twos(n + 2),
            Variant::ExactRounds(3),
            Lister::Optimal,
            Painter::Scripted(&mut p),
        )
        .map_err(|e| e.to_string())?;
        checked(tr, Verdict::PainterWins, &format!("K2,{n} t=3"))?;
        games += 1;
    }
    let g = make_k2n(4).unwrap();
    let mut l = k24_lister();
    let tr = referee_with(
        &mut solver(&g),
        &twos(6),
        Variant::ExactRounds(4),
        Lister::Scripted(&mut l),
        Painter::Optimal,
    )
    .map_err(|e| e.to_string())?;
    checked(tr, Verdict::ListerWins, "K2,4 t=4")?;
    games += 1;
    Ok(format!("{games} refereed games"))
}

fn dominance() -> Check {
    let report = cross_validate(Suite::Dominance, Some(5)).map_err(|e| e.to_string())?;
    let bad = report.mismatch_count();
    ensure(bad == 0, || report.summary())?;
    Ok(format!("{} instances", report.records.len()))
}

fn interval_scan_rows() -> Check {
    let report = interval_scan(&ScanConfig::new(5)).map_err(|e| e.to_string())?;
    let total: usize = (1..=5)
        .map(|n| enumerate_connected_graphs(n).unwrap().count())
        .sum();
    ensure(report.rows.len() == total, || {
        format!("{} rows for {total} graphs", report.rows.len())
    })?;
    let c5 = make_cycle(5).unwrap();
    let row = report
        .rows
        .iter()
        .find(|r| is_isomorphic(&Graph::from_graph6(&r.graph6).unwrap(), &c5))
        .ok_or("no C5 row")?;
    ensure(row.lister_wins == [2, 3, 4, 5], || {
        format!("C5 row {:?}", row.lister_wins)
    })?;
    let bad = report.counterexamples().count();
    Ok(format!(
        "{} instances, {bad} non-contiguous",
        report.rows.len()
    ))
}

type Criterion = (&'static str, fn() -> Check);

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("odd cycles lose exactly for 2 <= t <= n", odd_cycle_rounds),
        ("K_{2,4} landmark", k24_landmark),
        (
            "M = 2n - q on non-2-paintable graphs, n <= 6",
            cost_identity,
        ),
        ("q characterizations, n <= 5", small_costs),
        ("m trichotomy, n <= 6", m_trichotomy),
        ("M bounds and extremes, n <= 6", m_bounds_and_extremes),
        ("structural 2-paintability, n <= 7", two_paintable),
        ("scripted strategies vs optimal play", strategies),
        ("maximal-response dominance, n <= 5", dominance),
        ("round-count interval scan, n <= 5", interval_scan_rows),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} ({secs:.2}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why} ({secs:.2}s)", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
