//! Simple undirected graphs on at most 30 vertices, stored as one
//! bit-packed neighbor set per vertex.

mod analysis;
mod canon;
mod families;
mod io;
mod vertex_set;

use std::fmt;

use thiserror::Error;

pub use analysis::{core, CoreResult};
pub use canon::{
    canonical_form, canonical_graph, canonical_order, enumerate_connected_graphs, enumerate_trees,
    is_isomorphic, MAX_ENUMERATION_N, MAX_TREE_ENUMERATION_N,
};
pub use families::{
    make_complete, make_cycle, make_dumbbell, make_family, make_k2n, make_path, make_tadpole,
    make_theta, Family,
};
pub use vertex_set::{Iter, Subsets, VertexSet, MAX_VERTICES};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("line {line}: malformed edge-list entry {text:?}")]
    MalformedLine { line: usize, text: String },
    #[error("vertex id {0} out of range (ids must be below {MAX_VERTICES})")]
    VertexOutOfRange(usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("empty graph")]
    Empty,
    #[error("invalid graph6 character {0:?}")]
    InvalidGraph6Char(char),
    #[error("graph6 length mismatch: {n} vertices need {expected} data bytes, found {found}")]
    Graph6Length {
        n: usize,
        expected: usize,
        found: usize,
    },
    #[error("{family}: parameters out of range ({reason})")]
    BadParameters {
        family: &'static str,
        reason: String,
    },
    #[error("unknown family spec {0:?}")]
    UnknownFamily(String),
    #[error("enumeration is limited to n <= {MAX_ENUMERATION_N}, got {0}")]
    EnumerationTooLarge(usize),
}

/// An undirected simple graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        if n > MAX_VERTICES {
            return Err(GraphError::VertexOutOfRange(n - 1));
        }
        Ok(Graph {
            n,
            adj: vec![VertexSet::EMPTY; n],
        })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        for w in [u, v] {
            if w >= self.n {
                return Err(GraphError::VertexOutOfRange(w));
            }
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u].remove(v);
        self.adj[v].remove(u);
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.adj[u]
                .iter()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// True when no two members of `s` are adjacent.
    #[inline]
    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| self.adj[v].is_disjoint(s))
    }

    /// Vertices of the component containing `start`, restricted to `within`.
    pub fn component_within(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next = next.union(self.adj[v]);
            }
            frontier = next.intersection(within).difference(seen);
            seen = seen.union(frontier);
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.component_within(0, self.vertices()) == self.vertices()
    }

    /// Subgraph induced by `keep`, relabeled to `0..|keep|` in increasing
    /// id order. Returns the graph and the old id of each new vertex.
    pub fn induced(&self, keep: VertexSet) -> Result<(Graph, Vec<usize>), GraphError> {
        let ids = keep.to_vec();
        let mut g = Graph::empty(ids.len())?;
        for (i, &u) in ids.iter().enumerate() {
            for (j, &v) in ids.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j)?;
                }
            }
        }
        Ok((g, ids))
    }

    /// Relabel so that old vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        let mut adj = vec![VertexSet::EMPTY; self.n];
        for (u, v) in self.edges() {
            adj[perm[u]].insert(perm[v]);
            adj[perm[v]].insert(perm[u]);
        }
        Graph { n: self.n, adj }
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let shift = self.n;
        let mut g = Graph::empty(self.n + other.n)?;
        for (u, v) in self.edges() {
            g.add_edge(u, v)?;
        }
        for (u, v) in other.edges() {
            g.add_edge(u + shift, v + shift)?;
        }
        Ok(g)
    }

    /// Parses the edge-list text format: one `u v` pair per line, with an
    /// optional leading line holding just the vertex count.
    pub fn from_edge_list(text: &str) -> Result<Self, GraphError> {
        io::parse_edge_list(text)
    }

    pub fn to_edge_list(&self) -> String {
        io::write_edge_list(self)
    }

    pub fn from_graph6(s: &str) -> Result<Self, GraphError> {
        io::parse_graph6(s)
    }

    pub fn to_graph6(&self) -> String {
        io::write_graph6(self)
    }

    pub(crate) fn from_raw_adjacency(adj: Vec<VertexSet>) -> Graph {
        Graph { n: adj.len(), adj }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        f.write_str("])")
    }
}
