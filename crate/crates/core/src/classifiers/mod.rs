//! Closed-form structural classifiers for 2-paintability and for the
//! extreme values of `m(G)` and `M(G)`, plus drivers that check them (and
//! the other game-level identities) against the exact solver.

mod report;
mod scan;
mod suites;

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{core, is_isomorphic, make_k2n, Graph};

pub use report::{Record, Report};
pub use scan::{interval_scan, ScanBudget, ScanConfig, ScanReport, ScanRow};
pub use suites::{cross_validate, Suite, SuiteError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClassifyError {
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is 2-paintable, so m and M are undefined")]
    TwoPaintable,
    #[error("clauses disagree: {0}")]
    Inconsistent(String),
}

fn require_connected(g: &Graph) -> Result<(), ClassifyError> {
    if g.is_connected() {
        Ok(())
    } else {
        Err(ClassifyError::Disconnected)
    }
}

/// True iff the core is `K_1`, an even cycle, or `K_{2,3}`.
pub fn is_2_paintable_structural(g: &Graph) -> Result<bool, ClassifyError> {
    require_connected(g)?;
    let c = core(g).core_graph;
    Ok(c.n() == 1
        || (c.is_cycle() && c.n().is_multiple_of(2))
        || c.as_k2n().is_some_and(|(_, m)| m == 3))
}

fn require_not_paintable(g: &Graph) -> Result<(), ClassifyError> {
    if is_2_paintable_structural(g)? {
        Err(ClassifyError::TwoPaintable)
    } else {
        Ok(())
    }
}

/// Predicted `m(G)` for a connected graph that is not 2-paintable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct MClass(u32);

impl MClass {
    pub fn value(self) -> u32 {
        self.0
    }
}

impl fmt::Display for MClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// 2 for non-bipartite graphs, 4 when the core is `K_{2,n}` with `n >= 4`,
/// and 3 otherwise.
pub fn m_classifier(g: &Graph) -> Result<MClass, ClassifyError> {
    require_not_paintable(g)?;
    if !g.is_bipartite() {
        return Ok(MClass(2));
    }
    if g.core_is_k2n().is_some_and(|m| m >= 4) {
        return Ok(MClass(4));
    }
    Ok(MClass(3))
}

/// A structural condition that pins `M(G)` to a closed form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum MClause {
    /// `G` is an odd cycle: `M = n`.
    OddCycle,
    /// `G` contains a triangle: `M = 2n - 3`.
    Triangle,
    /// `G` is `K_{2,4}`: `M = n + 1`.
    K24,
    /// `G` has 4 vertices and a triangle: `M = n + 1`.
    FourVertexTriangle,
    /// The core is an odd cycle on `n - 1` vertices: `M = n + 1`.
    OddCycleCoreWithPendant,
}

impl MClause {
    pub fn value(self, n: u32) -> u32 {
        match self {
            MClause::OddCycle => n,
            MClause::Triangle => 2 * n - 3,
            MClause::K24 | MClause::FourVertexTriangle | MClause::OddCycleCoreWithPendant => n + 1,
        }
    }
}

/// The value of `M(G)` when one of the closed-form clauses applies,
/// together with every clause that fired.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MExtreme {
    pub value: Option<u32>,
    pub clauses: Vec<MClause>,
}

/// Fires every applicable clause and checks that they agree. Returns an
/// empty result when no clause covers the graph.
pub fn m_extremes_classifier(g: &Graph) -> Result<MExtreme, ClassifyError> {
    require_not_paintable(g)?;
    let n = g.n();
    let triangle = g.contains_triangle();
    let mut clauses = Vec::new();
    if g.is_odd_cycle() {
        clauses.push(MClause::OddCycle);
    }
    if triangle {
        clauses.push(MClause::Triangle);
    }
    if n == 6 && is_isomorphic(g, &make_k2n(4).expect("K_{2,4}")) {
        clauses.push(MClause::K24);
    }
    if n == 4 && triangle {
        clauses.push(MClause::FourVertexTriangle);
    }
    if n >= 4 && g.core_is_odd_cycle() == Some(n - 1) {
        clauses.push(MClause::OddCycleCoreWithPendant);
    }
    let n = n as u32;
    let value = clauses.first().map(|c| c.value(n));
    if let Some(bad) = clauses.iter().find(|c| Some(c.value(n)) != value) {
        return Err(ClassifyError::Inconsistent(format!(
            "{:?} gives {} but {:?} gives {}",
            clauses[0],
            value.unwrap_or_default(),
            bad,
            bad.value(n)
        )));
    }
    Ok(MExtreme { value, clauses })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::*;

    fn pendant(g: Graph, at: usize) -> Graph {
        let mut h = Graph::from_edges(g.n() + 1, g.edges()).unwrap();
        h.add_edge(at, g.n()).unwrap();
        h
    }

    #[test]
    fn structural_two_paintability_examples() {
        assert!(is_2_paintable_structural(&make_path(5).unwrap()).unwrap());
        assert!(is_2_paintable_structural(&pendant(make_cycle(6).unwrap(), 2)).unwrap());
        assert!(is_2_paintable_structural(&make_k2n(3).unwrap()).unwrap());
        assert!(!is_2_paintable_structural(&make_cycle(5).unwrap()).unwrap());
        assert!(!is_2_paintable_structural(&make_k2n(4).unwrap()).unwrap());
        let two = Graph::empty(2).unwrap();
        assert_eq!(
            is_2_paintable_structural(&two),
            Err(ClassifyError::Disconnected)
        );
    }

    #[test]
    fn m_examples() {
        assert_eq!(m_classifier(&make_cycle(9).unwrap()).unwrap().value(), 2);
        assert_eq!(
            m_classifier(&make_theta(2, 2, 4).unwrap()).unwrap().value(),
            3
        );
        assert_eq!(
            m_classifier(&pendant(make_k2n(5).unwrap(), 3))
                .unwrap()
                .value(),
            4
        );
        assert_eq!(
            m_classifier(&make_cycle(4).unwrap()),
            Err(ClassifyError::TwoPaintable)
        );
    }

    #[test]
    fn extreme_examples() {
        let c7 = m_extremes_classifier(&make_cycle(7).unwrap()).unwrap();
        assert_eq!((c7.value, c7.clauses), (Some(7), vec![MClause::OddCycle]));
        assert_eq!(
            m_extremes_classifier(&make_complete(4).unwrap())
                .unwrap()
                .value,
            Some(5)
        );
        let tadpole = m_extremes_classifier(&pendant(make_cycle(5).unwrap(), 0)).unwrap();
        assert_eq!(tadpole.value, Some(7));
        assert_eq!(tadpole.clauses, vec![MClause::OddCycleCoreWithPendant]);
        assert_eq!(
            m_extremes_classifier(&make_k2n(4).unwrap()).unwrap().value,
            Some(7)
        );
        assert_eq!(
            m_extremes_classifier(&make_theta(2, 2, 4).unwrap())
                .unwrap()
                .value,
            None
        );
    }

    #[test]
    fn overlapping_clauses_agree() {
        let paw = pendant(make_cycle(3).unwrap(), 0);
        let e = m_extremes_classifier(&paw).unwrap();
        assert_eq!(e.value, Some(5));
        assert_eq!(
            e.clauses,
            vec![
                MClause::Triangle,
                MClause::FourVertexTriangle,
                MClause::OddCycleCoreWithPendant
            ]
        );
        let c3 = m_extremes_classifier(&make_cycle(3).unwrap()).unwrap();
        assert_eq!((c3.value, c3.clauses.len()), (Some(3), 2));
    }
}
