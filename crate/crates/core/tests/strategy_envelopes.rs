//! Scripted strategies against the exact solver across the ranges where
//! they are supposed to win.

use paintability::game::{Solver, SolverConfig, TokenAssignment, Variant, Verdict};
use paintability::graph::*;
use paintability::strategies::*;

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

fn lister_wins(name: &str, g: &Graph, f: &TokenAssignment, t: u32, mut l: PlanLister) {
    let mut s = solver(g);
    let tr = referee_with(
        &mut s,
        f,
        Variant::ExactRounds(t),
        Lister::Scripted(&mut l),
        Painter::Optimal,
    )
    .unwrap_or_else(|e| panic!("{name} t={t}: {e}"));
    assert_eq!(
        tr.verdict,
        Verdict::ListerWins,
        "{name} t={t}\n{}",
        tr.to_text()
    );
}

fn painter_wins(
    name: &str,
    g: &Graph,
    f: &TokenAssignment,
    v: Variant,
    p: &mut dyn PainterStrategy,
) {
    let mut s = solver(g);
    let tr = referee_with(&mut s, f, v, Lister::Optimal, Painter::Scripted(p))
        .unwrap_or_else(|e| panic!("{name} {v}: {e}"));
    assert_eq!(
        tr.verdict,
        Verdict::PainterWins,
        "{name} {v}\n{}",
        tr.to_text()
    );
}

#[test]
fn path_splitting_wins_up_to_its_bound() {
    for n in 2..=8 {
        let g = make_path(n).unwrap();
        let f = TokenAssignment::f_double_prime(&g).unwrap();
        for t in 2..=path_lister_bound(n) {
            lister_wins(&format!("P{n}"), &g, &f, t, path_splitting_lister());
        }
    }
}

#[test]
fn cycle_lister_wins_on_odd_cycles() {
    for n in [3, 5, 7, 9] {
        let g = make_cycle(n).unwrap();
        let f = TokenAssignment::uniform(n, 2).unwrap();
        for t in 2..=n as u32 {
            lister_wins(&format!("C{n}"), &g, &f, t, cycle_lister());
        }
    }
}

#[test]
fn tadpole_lister_wins_up_to_its_bound() {
    for m in 1..=5 {
        for c in 3..=8 {
            if m + c - 1 > 9 {
                continue;
            }
            let g = make_tadpole(m, c).unwrap();
            let f = TokenAssignment::f_star(&g);
            let lo = if c % 2 == 1 { 2 } else { 3 };
            for t in lo..=tadpole_lister_bound(m, c) {
                lister_wins(&format!("tadpole({m},{c})"), &g, &f, t, tadpole_lister());
            }
        }
    }
}

#[test]
fn dumbbell_lister_wins_in_range() {
    for r in 3..=5 {
        for k in 1..=3 {
            for s in r..=5 {
                let n = r + k + s - 2;
                if n > 8 {
                    continue;
                }
                let g = make_dumbbell(r, k, s).unwrap();
                let f = TokenAssignment::uniform(n, 2).unwrap();
                let (lo, hi) = PlanLister::range(ListerKind::Dumbbell, &g, &f).unwrap();
                for t in lo..=hi {
                    lister_wins(
                        &format!("dumbbell({r},{k},{s})"),
                        &g,
                        &f,
                        t,
                        dumbbell_lister(),
                    );
                }
            }
        }
    }
}

#[test]
fn theta_lister_wins_in_range() {
    for p in 1..=6 {
        for q in p.max(2)..=6 {
            for r in q.max(3)..=6 {
                let n = p + q + r - 1;
                if n > 8 || p + q < 4 {
                    continue;
                }
                let g = make_theta(p, q, r).unwrap();
                let f = TokenAssignment::uniform(n, 2).unwrap();
                let (lo, hi) = PlanLister::range(ListerKind::Theta, &g, &f).unwrap();
                for t in lo..=hi {
                    lister_wins(&format!("theta({p},{q},{r})"), &g, &f, t, theta_lister());
                }
            }
        }
    }
}

#[test]
fn k24_lister_wins_on_k2n() {
    for n in 4..=7 {
        let g = make_k2n(n).unwrap();
        let f = TokenAssignment::uniform(n + 2, 2).unwrap();
        for t in 4..=(4 + 2 * (n as u32 - 4)) {
            lister_wins(&format!("K2,{n}"), &g, &f, t, k24_lister());
        }
    }
}

#[test]
fn tree_kernel_painter_survives_on_all_small_trees() {
    for n in 1..=8 {
        for g in enumerate_trees(n).unwrap() {
            for root in 0..n {
                let f = TokenAssignment::f_prime(n, root).unwrap();
                painter_wins(
                    &g.to_graph6(),
                    &g,
                    &f,
                    Variant::Unbounded,
                    &mut KernelPainter::tree(),
                );
            }
        }
    }
}

#[test]
fn cycle_kernel_painter_survives_long_schedules() {
    for n in 3..=8 {
        let g = make_cycle(n).unwrap();
        let f = TokenAssignment::uniform(n, 2).unwrap();
        for t in n as u32 + 1..=2 * n as u32 {
            painter_wins(
                &format!("C{n}"),
                &g,
                &f,
                Variant::ExactRounds(t),
                &mut KernelPainter::cycle(),
            );
        }
    }
}

#[test]
fn bipartite_painter_survives_two_rounds() {
    for n in 2..=6 {
        for g in enumerate_connected_graphs(n).unwrap() {
            if !g.is_bipartite() {
                continue;
            }
            let name = g.to_graph6();
            let f = TokenAssignment::uniform(n, 2).unwrap();
            painter_wins(
                &name,
                &g,
                &f,
                Variant::ExactRounds(2),
                &mut BipartitePainter::new(),
            );
            for u in 0..n {
                let f = TokenAssignment::f_prime(n, u).unwrap();
                painter_wins(
                    &name,
                    &g,
                    &f,
                    Variant::ExactRounds(2),
                    &mut BipartitePainter::new(),
                );
            }
        }
    }
}

#[test]
fn k2n_painter_survives_three_rounds() {
    for n in 2..=9 {
        let g = make_k2n(n).unwrap();
        let f = TokenAssignment::uniform(n + 2, 2).unwrap();
        painter_wins(
            &format!("K2,{n}"),
            &g,
            &f,
            Variant::ExactRounds(3),
            &mut K2nPainter::new(),
        );
    }
}

#[test]
fn k2n_with_four_rounds_is_lost_by_painter() {
    for n in 4..=6 {
        let g = make_k2n(n).unwrap();
        let f = TokenAssignment::uniform(n + 2, 2).unwrap();
        assert_eq!(
            solver(&g).solve(&f, Variant::ExactRounds(4)).unwrap(),
            Verdict::ListerWins
        );
    }
}
