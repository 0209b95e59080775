//! Every verification suite passes at its default size.

use paintability::classifiers::{cross_validate, Suite};

fn run(suite: Suite) -> usize {
    let report = cross_validate(suite, None).unwrap();
    assert!(report.passed(), "{}", report.summary());
    report.records.len()
}

#[test]
fn odd_cycle_rounds() {
    // 3 + 5 + 7 cycles, t from 2 to 2n
    assert_eq!(run(Suite::OddCycleRounds), 5 + 9 + 13);
}

#[test]
fn closed_forms_over_non_2_paintable_graphs() {
    for suite in [
        Suite::CostIdentity,
        Suite::MinRounds,
        Suite::MBounds,
        Suite::MExtremes,
    ] {
        assert_eq!(run(suite), 119, "{suite}");
    }
}

#[test]
fn small_costs() {
    // sum over connected graphs n <= 5 of 2^n budgets
    assert_eq!(run(Suite::SmallCosts), 2 + 4 + 2 * 8 + 6 * 16 + 21 * 32);
}

#[test]
fn two_paintable() {
    assert_eq!(run(Suite::TwoPaintable), 1 + 1 + 2 + 6 + 21 + 112 + 853);
}

#[test]
fn union_and_subgraphs() {
    assert!(run(Suite::Union) > 0);
    assert!(run(Suite::SubgraphMonotonicity) > 0);
}

#[test]
fn strategies() {
    assert!(run(Suite::Strategies) > 0);
}

#[test]
fn feasibility_oracle() {
    assert_eq!(run(Suite::FeasibilityOracle), 4usize.pow(4) * 8);
}

#[test]
fn dominance_and_remarking() {
    assert!(run(Suite::Dominance) > 0);
    assert!(run(Suite::Remarking) > 0);
}

#[test]
fn interval_scan() {
    assert_eq!(run(Suite::IntervalScan), 1 + 1 + 2 + 6 + 21);
}
