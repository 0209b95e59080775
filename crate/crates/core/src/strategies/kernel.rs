//! Kernels of marked sets under orientations where every vertex has at
//! most one in-neighbor, and the Painter strategy that plays them.

use super::{PainterStrategy, StrategyError};
use crate::game::{GameState, TokenAssignment, Variant};
use crate::graph::{Graph, VertexSet};

/// A partial orientation of a graph in which every vertex has at most one
/// in-neighbor. Out-trees, directed paths and a directed cycle with
/// out-trees hanging off it are all of this form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orientation {
    parent: Vec<Option<usize>>,
}

impl Orientation {
    /// Builds an orientation from arcs `(from, to)`. Every arc must be an
    /// edge of `g` and no vertex may receive two arcs.
    pub fn from_arcs<I>(g: &Graph, arcs: I) -> Result<Orientation, StrategyError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut parent = vec![None; g.n()];
        for (u, v) in arcs {
            if u >= g.n() || v >= g.n() || !g.has_edge(u, v) {
                return Err(StrategyError::Precondition(format!(
                    "arc {u}->{v} is not an edge"
                )));
            }
            if parent[v].replace(u).is_some() {
                return Err(StrategyError::Precondition(format!(
                    "vertex {v} has two in-neighbors"
                )));
            }
        }
        Ok(Orientation { parent })
    }

    /// Orients a tree away from `root`.
    pub fn out_tree(g: &Graph, root: usize) -> Result<Orientation, StrategyError> {
        if !g.is_tree() {
            return Err(StrategyError::Precondition("graph is not a tree".into()));
        }
        let mut arcs = Vec::new();
        let mut seen = VertexSet::singleton(root);
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for v in g.neighbors(u).difference(seen) {
                seen.insert(v);
                arcs.push((u, v));
                queue.push_back(v);
            }
        }
        Orientation::from_arcs(g, arcs)
    }

    /// Orients a cycle graph as a directed cycle, starting `0 -> w` where
    /// `w` is the smaller neighbor of `0`.
    pub fn directed_cycle(g: &Graph) -> Result<Orientation, StrategyError> {
        if !g.is_cycle() {
            return Err(StrategyError::Precondition("graph is not a cycle".into()));
        }
        let mut arcs = Vec::with_capacity(g.n());
        let mut prev = 0;
        let mut cur = g.neighbors(0).first().expect("cycle vertex has neighbors");
        arcs.push((prev, cur));
        while cur != 0 {
            let next = g.neighbors(cur).without(prev).first().expect("degree two");
            arcs.push((cur, next));
            prev = cur;
            cur = next;
        }
        Orientation::from_arcs(g, arcs)
    }

    pub fn in_neighbor(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    pub fn arcs(&self) -> Vec<(usize, usize)> {
        (0..self.parent.len())
            .filter_map(|v| self.parent[v].map(|u| (u, v)))
            .collect()
    }
}

/// An independent set `U` of the marked vertices such that every marked
/// vertex outside `U` has an in-neighbor in `U`.
///
/// A marked vertex whose in-neighbor is unmarked must be in `U`; every
/// other vertex is in `U` exactly when its in-neighbor is not. This fixes
/// `U` along every chain. A fully marked directed cycle is resolved by
/// trying both choices for its lowest vertex; an odd one has no kernel.
pub fn kernel_of(o: &Orientation, marked: VertexSet) -> Result<VertexSet, StrategyError> {
    #[derive(Clone, Copy, PartialEq)]
    enum Mark {
        Unknown,
        In,
        Out,
    }
    let n = o.parent.len();
    let mut mark = vec![Mark::Unknown; n];
    let flip = |m: Mark| if m == Mark::In { Mark::Out } else { Mark::In };
    for start in marked {
        if mark[start] != Mark::Unknown {
            continue;
        }
        // follow in-neighbors until something decided, unmarked, or repeated
        let mut chain = vec![start];
        let mut on_chain = VertexSet::singleton(start);
        let anchor = loop {
            let last = *chain.last().expect("nonempty");
            match o.parent[last] {
                Some(p) if marked.contains(p) && mark[p] != Mark::Unknown => break Some(mark[p]),
                Some(p) if marked.contains(p) && on_chain.contains(p) => break None,
                Some(p) if marked.contains(p) => {
                    chain.push(p);
                    on_chain.insert(p);
                }
                _ => break Some(Mark::Out),
            }
        };
        let cycle_at = match anchor {
            Some(above) => {
                let mut m = above;
                for &v in chain.iter().rev() {
                    m = flip(m);
                    mark[v] = m;
                }
                continue;
            }
            None => {
                let top = *chain.last().expect("nonempty");
                let p = o.parent[top].expect("cycle");
                chain.iter().position(|&v| v == p).expect("on chain")
            }
        };
        // chain[cycle_at..] is a directed cycle (each entry's in-neighbor is
        // the next one, the last one's is chain[cycle_at])
        let cycle = &chain[cycle_at..];
        let low = (0..cycle.len())
            .min_by_key(|&i| cycle[i])
            .expect("nonempty");
        let mut solved = false;
        for first in [Mark::In, Mark::Out] {
            // walk backwards from the lowest vertex: the predecessor of
            // cycle[i] in chain order is cycle[i - 1], whose in-neighbor is
            // cycle[i]
            let len = cycle.len();
            let mut m = first;
            mark[cycle[low]] = m;
            for k in 1..len {
                let v = cycle[(low + len - k) % len];
                m = flip(m);
                mark[v] = m;
            }
            // consistency at the lowest vertex: its in-neighbor is
            // cycle[low + 1]
            let p = cycle[(low + 1) % len];
            if mark[cycle[low]] == flip(mark[p]) {
                solved = true;
                break;
            }
        }
        if !solved {
            return Err(StrategyError::NoKernel(marked));
        }
        let mut m = mark[chain[cycle_at]];
        for &v in chain[..cycle_at].iter().rev() {
            m = flip(m);
            mark[v] = m;
        }
    }
    Ok(marked.iter().filter(|&v| mark[v] == Mark::In).collect())
}

/// Which orientation a [`KernelPainter`] builds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KernelRecipe {
    /// A tree with every list of size 2 except one vertex of size 1; the
    /// tree is oriented away from that vertex.
    Tree,
    /// A cycle with lists of size 2 in a game of at least `n + 1` rounds,
    /// oriented as a directed cycle.
    Cycle,
}

/// Colors the kernel of the marked uncolored vertices each round.
pub struct KernelPainter {
    recipe: KernelRecipe,
    orientation: Option<Orientation>,
}

impl KernelPainter {
    pub fn new(recipe: KernelRecipe) -> KernelPainter {
        KernelPainter {
            recipe,
            orientation: None,
        }
    }

    pub fn tree() -> KernelPainter {
        KernelPainter::new(KernelRecipe::Tree)
    }

    pub fn cycle() -> KernelPainter {
        KernelPainter::new(KernelRecipe::Cycle)
    }

    pub fn orientation(&self) -> Option<&Orientation> {
        self.orientation.as_ref()
    }
}

impl PainterStrategy for KernelPainter {
    fn name(&self) -> String {
        match self.recipe {
            KernelRecipe::Tree => "kernel-painter(tree)".into(),
            KernelRecipe::Cycle => "kernel-painter(cycle)".into(),
        }
    }

    fn begin(
        &mut self,
        g: &Graph,
        f: &TokenAssignment,
        variant: Variant,
    ) -> Result<(), StrategyError> {
        f.check_against(g)?;
        let o = match self.recipe {
            KernelRecipe::Tree => {
                let ones: Vec<usize> = (0..g.n()).filter(|&v| f.get(v) == 1).collect();
                let others_two = (0..g.n()).all(|v| f.get(v) == 2 || ones.contains(&v));
                if ones.len() != 1 || !others_two {
                    return Err(StrategyError::Precondition(
                        "tree recipe needs one vertex with 1 token and 2 everywhere else".into(),
                    ));
                }
                Orientation::out_tree(g, ones[0])?
            }
            KernelRecipe::Cycle => {
                if f.as_slice().iter().any(|&k| k != 2) {
                    return Err(StrategyError::Precondition(
                        "cycle recipe needs 2 tokens everywhere".into(),
                    ));
                }
                match variant {
                    Variant::ExactRounds(t) if t as usize > g.n() => {}
                    _ => {
                        return Err(StrategyError::Precondition(
                            "cycle recipe needs an exact game of at least n + 1 rounds".into(),
                        ))
                    }
                }
                Orientation::directed_cycle(g)?
            }
        };
        self.orientation = Some(o);
        Ok(())
    }

    fn respond(
        &mut self,
        g: &Graph,
        state: &GameState,
        marked: VertexSet,
    ) -> Result<VertexSet, StrategyError> {
        let o = self.orientation.as_ref().ok_or(StrategyError::NotStarted)?;
        let pool = marked.intersection(state.uncolored());
        match kernel_of(o, pool) {
            Ok(u) => Ok(u),
            // only a fully marked odd cycle lacks a kernel; any maximal
            // independent set does there, since every later round is a
            // singleton
            Err(StrategyError::NoKernel(_)) if self.recipe == KernelRecipe::Cycle => {
                Ok(greedy_independent(g, pool))
            }
            Err(e) => Err(e),
        }
    }
}

/// Maximal independent subset of `pool`, taking the lowest ids first.
pub fn greedy_independent(g: &Graph, pool: VertexSet) -> VertexSet {
    let mut out = VertexSet::EMPTY;
    for v in pool {
        if g.neighbors(v).is_disjoint(out) {
            out.insert(v);
        }
    }
    out
}
