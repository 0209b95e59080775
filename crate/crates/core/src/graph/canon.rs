//! Canonical labeling by exhaustive permutation minimization, and
//! isomorph-free enumeration of small connected graphs built on it.

use std::collections::BTreeMap;

use super::{Graph, GraphError, VertexSet};

/// Largest `n` accepted by [`enumerate_connected_graphs`].
pub const MAX_ENUMERATION_N: usize = 7;

/// Largest `n` accepted by [`enumerate_trees`].
pub const MAX_TREE_ENUMERATION_N: usize = 10;

/// Relabeling whose upper-triangle adjacency bit string (graph6 column
/// order) is lexicographically smallest over all `n!` vertex orders.
///
/// The search is a branch and bound over partial orders: once the first
/// `j` positions are fixed, columns `1..j` of the bit string are fixed, so
/// any prefix that already compares greater than the best known string is
/// cut. Exponential in the worst case; intended for `n <= 8`.
pub fn canonical_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut search = Search {
        g,
        order: Vec::with_capacity(n),
        columns: Vec::with_capacity(n),
        best_columns: Vec::new(),
        best_order: Vec::new(),
    };
    search.run(VertexSet::full(n));
    search.best_order
}

struct Search<'a> {
    g: &'a Graph,
    order: Vec<usize>,
    columns: Vec<u32>,
    best_columns: Vec<u32>,
    best_order: Vec<usize>,
}

impl Search<'_> {
    fn run(&mut self, unplaced: VertexSet) {
        if unplaced.is_empty() {
            if self.best_order.is_empty() || self.columns < self.best_columns {
                self.best_columns.clone_from(&self.columns);
                self.best_order.clone_from(&self.order);
            }
            return;
        }
        let j = self.order.len();
        for v in unplaced {
            let nb = self.g.neighbors(v);
            let mut col = 0u32;
            for &u in &self.order {
                col = col << 1 | nb.contains(u) as u32;
            }
            self.columns.push(col);
            let keep = self.best_order.is_empty() || self.columns[..=j] <= self.best_columns[..=j];
            if keep {
                self.order.push(v);
                self.run(unplaced.without(v));
                self.order.pop();
            }
            self.columns.pop();
        }
    }
}

/// The canonical relabeling of `g`.
pub fn canonical_graph(g: &Graph) -> Graph {
    let order = canonical_order(g);
    let mut perm = vec![0; g.n()];
    for (pos, &v) in order.iter().enumerate() {
        perm[v] = pos;
    }
    g.permuted(&perm)
}

/// A byte string equal for two graphs exactly when they are isomorphic:
/// the graph6 encoding of [`canonical_graph`].
pub fn canonical_form(g: &Graph) -> Vec<u8> {
    canonical_graph(g).to_graph6().into_bytes()
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n() && a.edge_count() == b.edge_count() && canonical_form(a) == canonical_form(b)
}

/// One canonical representative of every connected graph on `n`
/// vertices, ordered by canonical form.
///
/// Every connected graph on `n >= 2` vertices has a non-cut vertex, so the
/// classes on `n` vertices are exactly the extensions of classes on `n - 1`
/// vertices by a vertex with a nonempty neighborhood.
pub fn enumerate_connected_graphs(n: usize) -> Result<impl Iterator<Item = Graph>, GraphError> {
    if n > MAX_ENUMERATION_N {
        return Err(GraphError::EnumerationTooLarge(n));
    }
    Ok(grow(n, |_| true).into_values())
}

/// One canonical representative of every tree on `n` vertices.
pub fn enumerate_trees(n: usize) -> Result<impl Iterator<Item = Graph>, GraphError> {
    if n > MAX_TREE_ENUMERATION_N {
        return Err(GraphError::EnumerationTooLarge(n));
    }
    Ok(grow(n, |nb| nb.len() == 1).into_values())
}

fn grow(n: usize, allow: impl Fn(VertexSet) -> bool) -> BTreeMap<Vec<u8>, Graph> {
    let mut level = BTreeMap::new();
    if n == 0 {
        return level;
    }
    let k1 = Graph::empty(1).expect("n = 1 is valid");
    level.insert(canonical_form(&k1), k1);
    for size in 2..=n {
        let mut next = BTreeMap::new();
        for g in level.values() {
            for nb in VertexSet::full(size - 1).subsets().skip(1) {
                if !allow(nb) {
                    continue;
                }
                let mut adj: Vec<VertexSet> = (0..size - 1).map(|v| g.neighbors(v)).collect();
                for v in nb {
                    adj[v].insert(size - 1);
                }
                adj.push(nb);
                let h = canonical_graph(&Graph::from_raw_adjacency(adj));
                next.entry(h.to_graph6().into_bytes()).or_insert(h);
            }
        }
        level = next;
    }
    level
}
