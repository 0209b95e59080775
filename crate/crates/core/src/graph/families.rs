//! Named graph families with fixed labelings.
//!
//! Labelings (all deterministic):
//!
//! * `make_path(n)`: `0 - 1 - .. - (n-1)`.
//! * `make_cycle(n)`: `i ~ i+1 (mod n)`.
//! * `make_theta(p, q, r)`: hubs `0` and `1`; the internal vertices of the
//!   `p`-edge path come next in order from hub `0`, then those of the
//!   `q`-edge path, then the `r`-edge path. A 1-edge path is the edge `0-1`.
//! * `make_k2n(n)`: the 2-side is `{0, 1}`, the `n`-side is `2..n+2`.
//! * `make_dumbbell(m, k, n)`: the first cycle is `0..m` in cyclic order;
//!   the connecting path has `k` vertices and starts at `m-1`; its
//!   remaining `k-1` vertices follow in order, the last of them lying on the
//!   second cycle, whose other `n-1` vertices come last in cyclic order.
//!   With `k = 1` the two cycles share vertex `m-1`.
//! * `make_tadpole(m, n)`: the pendant path `x_m .. x_1` is `0..m` (so the
//!   free end is `0` and the attachment vertex is `m-1`); the rest of the
//!   cycle is `m..m+n-1` in cyclic order, closing back at `m-1`. With
//!   `m = 1` this is the cycle `0..n`.
//!
//! In `make_dumbbell` the path length `k` counts vertices, not edges.

use std::fmt;
use std::str::FromStr;

use super::{is_isomorphic, Graph, GraphError, MAX_VERTICES};

fn bad(family: &'static str, reason: impl Into<String>) -> GraphError {
    GraphError::BadParameters {
        family,
        reason: reason.into(),
    }
}

fn check_size(family: &'static str, n: usize) -> Result<(), GraphError> {
    if n > MAX_VERTICES {
        Err(bad(family, format!("{n} vertices exceeds {MAX_VERTICES}")))
    } else {
        Ok(())
    }
}

pub fn make_path(n: usize) -> Result<Graph, GraphError> {
    if n == 0 {
        return Err(bad("path", "n >= 1 required"));
    }
    check_size("path", n)?;
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

pub fn make_cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(bad("cycle", "n >= 3 required"));
    }
    check_size("cycle", n)?;
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn make_complete(n: usize) -> Result<Graph, GraphError> {
    check_size("complete", n)?;
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// Two hubs joined by three internally disjoint paths of `p <= q <= r`
/// edges.
pub fn make_theta(p: usize, q: usize, r: usize) -> Result<Graph, GraphError> {
    if !(p <= q && q <= r) {
        return Err(bad("theta", "p <= q <= r required"));
    }
    if p < 1 || q < 2 {
        return Err(bad("theta", "p >= 1 and q >= 2 required"));
    }
    let n = p + q + r - 1;
    check_size("theta", n)?;
    let mut g = Graph::empty(n)?;
    let mut next = 2;
    for len in [p, q, r] {
        let mut prev = 0;
        for _ in 1..len {
            g.add_edge(prev, next)?;
            prev = next;
            next += 1;
        }
        g.add_edge(prev, 1)?;
    }
    Ok(g)
}

pub fn make_k2n(n: usize) -> Result<Graph, GraphError> {
    if n == 0 {
        return Err(bad("k2n", "n >= 1 required"));
    }
    check_size("k2n", n + 2)?;
    Graph::from_edges(n + 2, (2..n + 2).flat_map(|x| [(0, x), (1, x)]))
}

/// `C_m . P_k . C_n`: two cycles joined by a path on `k` vertices.
pub fn make_dumbbell(m: usize, k: usize, n: usize) -> Result<Graph, GraphError> {
    if m < 3 || n < 3 || k < 1 {
        return Err(bad("dumbbell", "m, n >= 3 and k >= 1 required"));
    }
    let total = m + n + k - 2;
    check_size("dumbbell", total)?;
    let mut g = Graph::empty(total)?;
    for i in 0..m {
        g.add_edge(i, (i + 1) % m)?;
    }
    let mut attach = m - 1;
    for next in m..m + k - 1 {
        g.add_edge(attach, next)?;
        attach = next;
    }
    let mut prev = attach;
    for next in m + k - 1..total {
        g.add_edge(prev, next)?;
        prev = next;
    }
    g.add_edge(prev, attach)?;
    Ok(g)
}

/// `P_m . C_n`: a cycle of length `n` with a pendant path on `m`
/// vertices, one of which is the attachment vertex.
pub fn make_tadpole(m: usize, n: usize) -> Result<Graph, GraphError> {
    if m < 1 || n < 3 {
        return Err(bad("tadpole", "m >= 1 and n >= 3 required"));
    }
    let total = m + n - 1;
    check_size("tadpole", total)?;
    let mut g = Graph::empty(total)?;
    for i in 1..m {
        g.add_edge(i - 1, i)?;
    }
    let attach = m - 1;
    let mut prev = attach;
    for next in m..total {
        g.add_edge(prev, next)?;
        prev = next;
    }
    g.add_edge(prev, attach)?;
    Ok(g)
}

/// The named families accepted in specs such as `cycle:7` or
/// `theta:2,2,4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Path,
    Cycle,
    Complete,
    Theta,
    K2n,
    Dumbbell,
    Tadpole,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::Path,
        Family::Cycle,
        Family::Complete,
        Family::Theta,
        Family::K2n,
        Family::Dumbbell,
        Family::Tadpole,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Complete => "complete",
            Family::Theta => "theta",
            Family::K2n => "k2n",
            Family::Dumbbell => "dumbbell",
            Family::Tadpole => "tadpole",
        }
    }

    fn arity(self) -> usize {
        match self {
            Family::Theta | Family::Dumbbell => 3,
            Family::Tadpole => 2,
            _ => 1,
        }
    }

    /// Builds the member with the given parameters.
    pub fn build(self, params: &[usize]) -> Result<Graph, GraphError> {
        if params.len() != self.arity() {
            return Err(bad(
                self.name(),
                format!(
                    "expected {} parameter(s), got {}",
                    self.arity(),
                    params.len()
                ),
            ));
        }
        match self {
            Family::Path => make_path(params[0]),
            Family::Cycle => make_cycle(params[0]),
            Family::Complete => make_complete(params[0]),
            Family::Theta => make_theta(params[0], params[1], params[2]),
            Family::K2n => make_k2n(params[0]),
            Family::Dumbbell => make_dumbbell(params[0], params[1], params[2]),
            Family::Tadpole => make_tadpole(params[0], params[1]),
        }
    }

    /// Every member on exactly `n` vertices, one per parameter choice
    /// (isomorphic duplicates are possible, e.g. symmetric dumbbells).
    pub fn members(self, n: usize) -> Vec<Graph> {
        let mut out = Vec::new();
        let mut push = |r: Result<Graph, GraphError>| {
            if let Ok(g) = r {
                if g.n() == n {
                    out.push(g);
                }
            }
        };
        match self {
            Family::Path => push(make_path(n)),
            Family::Cycle => push(make_cycle(n)),
            Family::Complete => push(make_complete(n)),
            Family::K2n => push(make_k2n(n.saturating_sub(2))),
            Family::Theta => {
                for p in 1..=n {
                    for q in p.max(2)..=n {
                        for r in q..=n {
                            if p + q + r == n + 1 {
                                push(make_theta(p, q, r));
                            }
                        }
                    }
                }
            }
            Family::Dumbbell => {
                for m in 3..=n {
                    for k in 1..=n {
                        for c in m..=n {
                            if m + k + c == n + 2 {
                                push(make_dumbbell(m, k, c));
                            }
                        }
                    }
                }
            }
            Family::Tadpole => {
                for m in 2..=n {
                    if n + 1 >= m + 3 {
                        push(make_tadpole(m, n + 1 - m));
                    }
                }
            }
        }
        out
    }

    /// Whether `g` is isomorphic to some member of the family.
    pub fn contains(self, g: &Graph) -> bool {
        self.members(g.n()).iter().any(|h| is_isomorphic(g, h))
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s.trim())
            .ok_or_else(|| GraphError::UnknownFamily(s.to_string()))
    }
}

/// Parses and builds a family spec like `cycle:7`, `theta:2,2,4` or
/// `dumbbell:4,1,4`.
pub fn make_family(spec: &str) -> Result<Graph, GraphError> {
    let (name, args) = spec
        .split_once(':')
        .ok_or_else(|| GraphError::UnknownFamily(spec.to_string()))?;
    let family: Family = name.parse()?;
    let params = args
        .split(',')
        .map(|a| a.trim().parse::<usize>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| bad(family.name(), format!("non-numeric parameters {args:?}")))?;
    family.build(&params)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_isomorphic;
    use proptest::prelude::*;

    #[test]
    fn theta_222_is_k23() {
        let t = make_theta(2, 2, 2).unwrap();
        assert_eq!((t.n(), t.edge_count()), (5, 6));
        assert!(is_isomorphic(&t, &make_k2n(3).unwrap()));
    }

    #[test]
    fn dumbbell_shared_vertex() {
        let g = make_dumbbell(4, 1, 4).unwrap();
        assert_eq!((g.n(), g.edge_count()), (7, 8));
        assert_eq!(g.degree(3), 4);
    }

    #[test]
    fn tadpole_with_trivial_path_is_cycle() {
        assert_eq!(make_tadpole(1, 5).unwrap(), make_cycle(5).unwrap());
        let t = make_tadpole(3, 4).unwrap();
        assert_eq!(t.degree(0), 1);
        assert_eq!(t.degree(2), 3);
    }

    #[test]
    fn family_specs() {
        assert_eq!(make_family("cycle:7").unwrap(), make_cycle(7).unwrap());
        assert_eq!(
            make_family("theta:2,2,4").unwrap(),
            make_theta(2, 2, 4).unwrap()
        );
        assert_eq!(
            make_family("dumbbell:4,1,4").unwrap(),
            make_dumbbell(4, 1, 4).unwrap()
        );
        assert_eq!(make_family("tadpole:3,5").unwrap().n(), 7);
        assert!(make_family("cycle").is_err());
        assert!(make_family("star:4").is_err());
        assert!(make_family("theta:2,2").is_err());
        assert!(make_family("path:x").is_err());
    }

    #[test]
    fn family_membership() {
        assert!(Family::Theta.contains(&make_k2n(3).unwrap()));
        let mut diamond = make_complete(4).unwrap();
        diamond.remove_edge(0, 1);
        assert!(Family::Theta.contains(&diamond));
        assert!(!Family::Theta.contains(&make_cycle(4).unwrap()));
        assert!(Family::Tadpole.contains(&make_tadpole(2, 3).unwrap().permuted(&[3, 2, 1, 0])));
        assert!(!Family::Tadpole.contains(&make_cycle(4).unwrap()));
        assert_eq!(Family::Theta.members(4).len(), 1);
    }

    #[test]
    fn parameter_errors() {
        assert!(make_cycle(2).is_err());
        assert!(make_path(0).is_err());
        assert!(make_theta(1, 1, 3).is_err());
        assert!(make_theta(3, 2, 2).is_err());
        assert!(make_dumbbell(2, 1, 3).is_err());
        assert!(make_tadpole(0, 3).is_err());
        assert!(make_path(31).is_err());
        assert!(make_theta(10, 10, 12).is_err());
    }

    proptest! {
        #[test]
        fn family_sizes_match_closed_forms(a in 1usize..9, b in 1usize..9, c in 1usize..9) {
            let (mut p, mut q, mut r) = (a, b, c);
            if p > q { std::mem::swap(&mut p, &mut q); }
            if q > r { std::mem::swap(&mut q, &mut r); }
            if p > q { std::mem::swap(&mut p, &mut q); }
            if q >= 2 {
                let t = make_theta(p, q, r).unwrap();
                prop_assert_eq!(t.n(), p + q + r - 1);
                prop_assert_eq!(t.edge_count(), p + q + r);
                prop_assert_eq!(t.degree(0), 3);
                prop_assert_eq!(t.degree(1), 3);
            }
            let (m, k, n) = (a + 2, b, c + 2);
            let d = make_dumbbell(m, k, n).unwrap();
            prop_assert_eq!(d.n(), m + n + k - 2);
            prop_assert_eq!(d.edge_count(), m + n + k - 1);
            prop_assert!(d.is_connected());
            let t = make_tadpole(a, c + 2).unwrap();
            prop_assert_eq!(t.n(), a + c + 1);
            prop_assert_eq!(t.edge_count(), a + c + 1);
            let k2 = make_k2n(a).unwrap();
            prop_assert_eq!(k2.edge_count(), 2 * a);
            prop_assert_eq!(make_path(a).unwrap().edge_count(), a - 1);
            prop_assert_eq!(make_cycle(c + 2).unwrap().edge_count(), c + 2);
        }
    }
}
