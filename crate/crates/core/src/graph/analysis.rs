use super::{Graph, VertexSet};

/// The result of eroding a graph down to its core.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoreResult {
    /// Surviving vertices, in the ids of the original graph.
    pub core_vertices: VertexSet,
    /// The induced core, relabeled to `0..|core|` in increasing id order.
    pub core_graph: Graph,
}

/// Iteratively deletes degree-1 vertices.
///
/// Trees erode to a single vertex rather than the empty graph: when an
/// isolated edge remains, only its higher endpoint is removed.
pub fn core(g: &Graph) -> CoreResult {
    let mut alive = g.vertices();
    loop {
        let deg = |v: usize| g.neighbors(v).intersection(alive).len();
        let mut leaves = VertexSet::EMPTY;
        for v in alive {
            if deg(v) == 1 {
                leaves.insert(v);
            }
        }
        if leaves.is_empty() {
            break;
        }
        let mut removed = leaves;
        for v in leaves {
            let w = g
                .neighbors(v)
                .intersection(alive)
                .first()
                .expect("leaf has a neighbor");
            // isolated edge: the lower endpoint survives
            if leaves.contains(w) && v < w {
                removed.remove(v);
            }
        }
        alive = alive.difference(removed);
    }
    let (core_graph, _) = g.induced(alive).expect("core is nonempty");
    CoreResult {
        core_vertices: alive,
        core_graph,
    }
}

impl Graph {
    /// A proper 2-coloring `(A, B)` with vertex 0's side first, or `None`
    /// for non-bipartite graphs. Every component's lowest vertex goes to `A`.
    pub fn bipartition(&self) -> Option<(VertexSet, VertexSet)> {
        let mut side_a = VertexSet::EMPTY;
        let mut side_b = VertexSet::EMPTY;
        let mut unseen = self.vertices();
        while let Some(start) = unseen.first() {
            side_a.insert(start);
            unseen.remove(start);
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                let v_in_a = side_a.contains(v);
                for w in self.neighbors(v) {
                    let same = if v_in_a { side_a } else { side_b };
                    if same.contains(w) {
                        return None;
                    }
                    if unseen.contains(w) {
                        unseen.remove(w);
                        if v_in_a {
                            side_b.insert(w);
                        } else {
                            side_a.insert(w);
                        }
                        stack.push(w);
                    }
                }
            }
        }
        Some((side_a, side_b))
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    pub fn contains_triangle(&self) -> bool {
        self.edges()
            .any(|(u, v)| !self.neighbors(u).is_disjoint(self.neighbors(v)))
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.edge_count() + 1 == self.n()
    }

    /// Connected and 2-regular.
    pub fn is_cycle(&self) -> bool {
        self.n() >= 3 && self.is_connected() && (0..self.n()).all(|v| self.degree(v) == 2)
    }

    pub fn is_odd_cycle(&self) -> bool {
        self.is_cycle() && self.n() % 2 == 1
    }

    /// If the graph is `K_{2,m}` (with the 2-side having exactly two
    /// vertices), returns `(hubs, m)`. For `K_{2,2}` the hubs are the pair
    /// containing vertex 0.
    pub fn as_k2n(&self) -> Option<(VertexSet, usize)> {
        let n = self.n();
        if n < 3 || !self.is_connected() {
            return None;
        }
        let m = n - 2;
        if self.edge_count() != 2 * m {
            return None;
        }
        let (a, b) = self.bipartition()?;
        let (hubs, rest) = if a.len() == 2 && (b.len() != 2 || a.contains(0)) {
            (a, b)
        } else if b.len() == 2 {
            (b, a)
        } else {
            return None;
        };
        // complete bipartite check: every hub sees every other-side vertex
        hubs.iter()
            .all(|h| self.neighbors(h) == rest)
            .then_some((hubs, m))
    }

    /// `Some(m)` when the core is `K_{2,m}`.
    pub fn core_is_k2n(&self) -> Option<usize> {
        core(self).core_graph.as_k2n().map(|(_, m)| m)
    }

    /// `Some(len)` when the core is an odd cycle.
    pub fn core_is_odd_cycle(&self) -> Option<usize> {
        let c = core(self).core_graph;
        c.is_odd_cycle().then_some(c.n())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_cycle, make_k2n, make_path, make_tadpole, make_theta, Graph};
    use proptest::prelude::*;

    fn with_pendant(g: &Graph, at: usize) -> Graph {
        let mut edges: Vec<_> = g.edges().collect();
        edges.push((at, g.n()));
        Graph::from_edges(g.n() + 1, edges).unwrap()
    }

    #[test]
    fn core_examples() {
        let c = core(&make_path(5).unwrap());
        assert_eq!(c.core_graph.n(), 1);
        assert_eq!(c.core_vertices, VertexSet::singleton(2));

        let c = core(&make_path(4).unwrap());
        assert_eq!(c.core_vertices, VertexSet::singleton(1));

        let c = core(&make_path(2).unwrap());
        assert_eq!(c.core_vertices, VertexSet::singleton(0));

        let c = core(&make_tadpole(4, 5).unwrap());
        assert_eq!(c.core_graph, make_cycle(5).unwrap());

        let k23 = make_k2n(3).unwrap();
        assert_eq!(core(&k23).core_graph, k23);
    }

    #[test]
    fn predicates() {
        assert!(make_cycle(6).unwrap().is_bipartite());
        assert!(!make_cycle(7).unwrap().is_bipartite());
        assert!(make_theta(1, 2, 2).unwrap().contains_triangle());
        assert!(!make_theta(2, 2, 2).unwrap().contains_triangle());
        assert!(make_cycle(5).unwrap().is_odd_cycle());
        assert!(!make_tadpole(2, 5).unwrap().is_odd_cycle());
        assert_eq!(make_tadpole(2, 5).unwrap().core_is_odd_cycle(), Some(5));
        let k25p = with_pendant(&make_k2n(5).unwrap(), 2);
        assert_eq!(k25p.core_is_k2n(), Some(5));
        assert_eq!(make_theta(2, 2, 4).unwrap().core_is_k2n(), None);
        assert_eq!(make_cycle(4).unwrap().as_k2n().map(|x| x.1), Some(2));
    }

    #[test]
    fn bipartition_sides() {
        let (a, b) = make_cycle(4).unwrap().bipartition().unwrap();
        assert_eq!(a, VertexSet::from_iter([0, 2]));
        assert_eq!(b, VertexSet::from_iter([1, 3]));
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (1usize..10).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                let mut g = Graph::empty(n).unwrap();
                let mut k = 0;
                for v in 1..n {
                    for u in 0..v {
                        if bits[k] {
                            g.add_edge(u, v).unwrap();
                        }
                        k += 1;
                    }
                }
                g
            })
        })
    }

    proptest! {
        #[test]
        fn core_is_idempotent_fixed_point(g in arb_graph()) {
            let c = core(&g);
            let cc = core(&c.core_graph);
            prop_assert_eq!(&cc.core_graph, &c.core_graph);
            let cg = &c.core_graph;
            prop_assert!(cg.n() == 1 || (0..cg.n()).all(|v| cg.degree(v) != 1));
            if g.is_connected() {
                prop_assert!(cg.n() == 1 || (0..cg.n()).all(|v| cg.degree(v) >= 2));
            }
        }
    }
}
