//! Scripted Lister strategies for the exact-rounds game.
//!
//! Every strategy is an attack plan on some region `H` of the graph. A plan
//! is given a number of rounds `t_H` of its own; the remaining rounds are
//! filled with padding from tokens outside `H`. Padding comes first and
//! the plan's rounds last, and every round also marks whatever vertices
//! must be marked in all remaining rounds to keep the schedule feasible. A plan that splits
//! the graph hands over to a sub-plan on whatever Painter left behind; the
//! sub-plan gets as many rounds as it can use, and tokens outside its
//! region must cover the rest.

use super::{ListerStrategy, StrategyError};
use crate::game::{GameState, TokenAssignment, Variant};
use crate::graph::{make_dumbbell, make_tadpole, make_theta, Graph, VertexSet};

fn ceil_lg(x: usize) -> u32 {
    x.max(1).next_power_of_two().trailing_zeros()
}

/// `floor(2n - 2 - lg n)`: the largest round count for which the path
/// attack on `(P_n, f'')` is guaranteed to win.
pub fn path_lister_bound(n: usize) -> u32 {
    (2 * n as i64 - 2 - ceil_lg(n) as i64).max(0) as u32
}

/// `floor(2m + 2n - 4 - lg(m + floor(n/2)))` for a cycle `C_n` with a
/// pendant path on `m` vertices.
pub fn tadpole_lister_bound(m: usize, n: usize) -> u32 {
    (2 * (m + n) as i64 - 4 - ceil_lg(m + n / 2) as i64).max(0) as u32
}

fn dumbbell_bound(total: usize, r: usize, k: usize, s: usize) -> u32 {
    (2 * total as i64 - 2 - ceil_lg(k + r / 2 + s / 2) as i64).max(0) as u32
}

fn theta_bound(total: usize, long: usize, cycle: usize) -> u32 {
    (2 * total as i64 - 2 - ceil_lg(long / 2 + 1 + cycle / 2) as i64).max(0) as u32
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Plan {
    /// Two adjacent vertices with one token each: mark both at once.
    Pair(usize, usize),
    /// A path in order, one token at each end and two inside.
    Path(Vec<usize>),
    /// A pendant path listed from its free end (one token) to the
    /// attachment vertex, and the rest of the cycle in cyclic order.
    Tadpole { tail: Vec<usize>, cycle: Vec<usize> },
    /// An odd cycle in cyclic order, two tokens everywhere.
    OddCycle(Vec<usize>),
    /// Two cycles joined by a path. `first` runs around the first cycle
    /// and ends at its attachment vertex; `bridge` continues from there to
    /// the second cycle's attachment vertex; `second` is the rest of the
    /// second cycle in cyclic order.
    Dumbbell {
        first: Vec<usize>,
        bridge: Vec<usize>,
        second: Vec<usize>,
    },
    /// A theta graph. `long` is the longest hub-to-hub path including both
    /// hubs; `others` are the internal vertices of the other two paths,
    /// each listed from `long[0]`'s side.
    Theta {
        long: Vec<usize>,
        others: [Vec<usize>; 2],
    },
    /// Hubs `u`, `v` and four common neighbors.
    K24 { u: usize, v: usize, x: [usize; 4] },
}

enum Action {
    Mark(VertexSet),
    Delegate(Vec<Plan>),
}

fn path_or_pair(verts: Vec<usize>) -> Option<Plan> {
    match verts.len() {
        0 | 1 => None,
        2 => Some(Plan::Pair(verts[0], verts[1])),
        _ => Some(Plan::Path(verts)),
    }
}

impl Plan {
    fn region(&self) -> VertexSet {
        match self {
            Plan::Pair(a, b) => VertexSet::from_iter([*a, *b]),
            Plan::Path(p) | Plan::OddCycle(p) => p.iter().collect(),
            Plan::Tadpole { tail, cycle } => tail.iter().chain(cycle).collect(),
            Plan::Dumbbell {
                first,
                bridge,
                second,
            } => first.iter().chain(bridge).chain(second).collect(),
            Plan::Theta { long, others } => {
                long.iter().chain(&others[0]).chain(&others[1]).collect()
            }
            Plan::K24 { u, v, x } => [*u, *v].iter().chain(x).collect(),
        }
    }

    /// Round counts the plan can fill with its own tokens.
    fn range(&self) -> (u32, u32) {
        match self {
            Plan::Pair(..) => (1, 1),
            Plan::Path(p) => (2, path_lister_bound(p.len())),
            Plan::Tadpole { tail, cycle } => {
                let n = cycle.len() + 1;
                let lo = if n % 2 == 1 { 2 } else { 3 };
                (lo, tadpole_lister_bound(tail.len(), n))
            }
            Plan::OddCycle(c) => (2, c.len() as u32),
            Plan::Dumbbell {
                first,
                bridge,
                second,
            } => {
                let total = first.len() + bridge.len() + second.len();
                (
                    4,
                    dumbbell_bound(total, first.len(), bridge.len() + 1, second.len() + 1),
                )
            }
            Plan::Theta { long, others } => {
                let total = long.len() + others[0].len() + others[1].len();
                let cycle = others[0].len() + others[1].len() + 2;
                (4, theta_bound(total, long.len() - 1, cycle))
            }
            Plan::K24 { .. } => (4, 4),
        }
    }

    fn step(&self, step: u32, rounds: u32, s: &GameState) -> Result<Action, StrategyError> {
        let holders = s.tokens().nonzero().intersection(self.region());
        if rounds == 1 && !matches!(self, Plan::K24 { .. }) {
            return Ok(Action::Mark(holders));
        }
        let set = |v: &[usize]| -> VertexSet { v.iter().collect() };
        match self {
            Plan::Pair(..) => Ok(Action::Mark(holders)),
            Plan::Path(p) => {
                let n = p.len();
                let a = n / 2;
                match (step, rounds) {
                    // two-round finish: whatever Painter does, two
                    // adjacent vertices are left for the last round
                    (0, 2) if n % 2 == 0 => Ok(Action::Mark(set(&p[1..n - 1]))),
                    (0, 2) => Ok(Action::Mark(set(&p[..n - 1]))),
                    (0, _) => Ok(Action::Mark(set(&p[a - 1..=a]))),
                    _ => {
                        let (x, y) = (p[a - 1], p[a]);
                        let left = path_or_pair(p[..a].to_vec());
                        let right = path_or_pair(p[a..].to_vec());
                        Ok(Action::Delegate(split_candidates(s, x, y, left, right)))
                    }
                }
            }
            Plan::OddCycle(c) => match step {
                0 => Ok(Action::Mark(holders)),
                _ => {
                    let n = c.len();
                    let pairs = (0..n)
                        .map(|i| (c[i], c[(i + 1) % n]))
                        .filter(|&(a, b)| !s.colored().contains(a) && !s.colored().contains(b))
                        .map(|(a, b)| Plan::Pair(a.min(b), a.max(b)))
                        .collect();
                    Ok(Action::Delegate(pairs))
                }
            },
            Plan::Tadpole { tail, cycle } => {
                let n = cycle.len() + 1;
                let a = n / 2;
                let attach = *tail.last().expect("tail holds the attachment vertex");
                match (step, rounds) {
                    (0, 2) => Ok(Action::Mark(holders)),
                    (0, _) => Ok(Action::Mark(set(&cycle[a - 1..=a]))),
                    _ => {
                        // v_a = cycle[a-1], v_{a+1} = cycle[a]
                        let (x, y) = (cycle[a - 1], cycle[a]);
                        let back: Vec<usize> =
                            tail[..tail.len() - 1].iter().rev().copied().collect();
                        let mut right: Vec<usize> = cycle[a..].to_vec();
                        right.push(attach);
                        right.extend(&back);
                        let mut left: Vec<usize> = cycle[..a].iter().rev().copied().collect();
                        left.push(attach);
                        left.extend(&back);
                        Ok(Action::Delegate(split_candidates(
                            s,
                            x,
                            y,
                            path_or_pair(left),
                            path_or_pair(right),
                        )))
                    }
                }
            }
            Plan::Dumbbell {
                first,
                bridge,
                second,
            } => {
                let r = first.len();
                let a = r / 2;
                match step {
                    0 => Ok(Action::Mark(set(&first[a - 1..=a]))),
                    _ => {
                        let (x, y) = (first[a - 1], first[a]);
                        let mut right: Vec<usize> = first[a..].to_vec();
                        right.extend(bridge);
                        let mut left: Vec<usize> = first[..a].iter().rev().copied().collect();
                        left.push(first[r - 1]);
                        left.extend(bridge);
                        let tadpole = |tail: Vec<usize>| Plan::Tadpole {
                            tail,
                            cycle: second.clone(),
                        };
                        Ok(Action::Delegate(split_candidates(
                            s,
                            x,
                            y,
                            Some(tadpole(left)),
                            Some(tadpole(right)),
                        )))
                    }
                }
            }
            Plan::Theta { long, others } => {
                let len = long.len() - 1;
                let a = len / 2;
                match step {
                    0 => Ok(Action::Mark(set(&long[a..=a + 1]))),
                    _ => {
                        let (x, y) = (long[a], long[a + 1]);
                        let (h0, h1) = (long[0], long[len]);
                        // x colored: the tail runs from long[a+1] to h1
                        let right_tail = long[a + 1..].to_vec();
                        let mut right_cycle: Vec<usize> = others[0].iter().rev().copied().collect();
                        right_cycle.push(h0);
                        right_cycle.extend(&others[1]);
                        // y colored: the tail runs from long[a] down to h0
                        let left_tail: Vec<usize> = long[..=a].iter().rev().copied().collect();
                        let mut left_cycle = others[0].clone();
                        left_cycle.push(h1);
                        left_cycle.extend(others[1].iter().rev());
                        Ok(Action::Delegate(split_candidates(
                            s,
                            x,
                            y,
                            Some(Plan::Tadpole {
                                tail: left_tail,
                                cycle: left_cycle,
                            }),
                            Some(Plan::Tadpole {
                                tail: right_tail,
                                cycle: right_cycle,
                            }),
                        )))
                    }
                }
            }
            Plan::K24 { u, v, x } => {
                let schedule = [
                    [*u, x[0], x[1]],
                    [*u, x[2], x[3]],
                    [*v, x[0], x[2]],
                    [*v, x[1], x[3]],
                ];
                match schedule.get(step as usize) {
                    Some(r) => Ok(Action::Mark(set(r))),
                    None => Err(StrategyError::Stuck("K_{2,4} schedule exhausted".into())),
                }
            }
        }
    }
}

/// Sub-plans after marking the adjacent pair `x`, `y`. `left` continues
/// from `x` (used when `y` was colored), `right` from `y`.
fn split_candidates(
    s: &GameState,
    x: usize,
    y: usize,
    left: Option<Plan>,
    right: Option<Plan>,
) -> Vec<Plan> {
    let cx = s.colored().contains(x);
    let cy = s.colored().contains(y);
    let mut out = Vec::new();
    if !cx && !cy {
        out.push(Plan::Pair(x.min(y), x.max(y)));
    }
    if !cx {
        out.extend(left);
    }
    if !cy {
        out.extend(right);
    }
    out
}

/// Rounds a plan would take from position `s` with `r` rounds left, if it
/// can be fit in at all.
fn fit(plan: &Plan, s: &GameState, r: u32) -> Option<u32> {
    let (lo, hi) = plan.range();
    let region = plan.region();
    let outside: u32 = s
        .tokens()
        .nonzero()
        .difference(region)
        .iter()
        .map(|v| s.token(v) as u32)
        .sum();
    let own = r.min(hi);
    (own >= lo && own + outside >= r).then_some(own)
}

/// Which family a [`PlanLister`] attacks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ListerKind {
    /// `(P_n, f'')` with `2 <= t <= path_lister_bound(n)`.
    PathSplitting,
    /// Odd `C_n` with 2 tokens everywhere and `2 <= t <= n`.
    Cycle,
    /// `P_m . C_n` with one token at the free end of the path and 2
    /// elsewhere (a cycle with one 1-token vertex when `m = 1`).
    Tadpole,
    /// `C_r . P_k . C_s` with 2 tokens everywhere.
    Dumbbell,
    /// `theta_{p,q,r}` with a hub path of at least 3 edges, the other two
    /// forming a cycle of length at least 4, and 2 tokens everywhere.
    Theta,
    /// `K_{2,n}`, `n >= 4`, 2 tokens everywhere, the fixed four-round
    /// schedule on two hubs and four other vertices with the remaining
    /// vertices as padding.
    K24,
}

/// A Lister that plays a scripted attack plan.
pub struct PlanLister {
    kind: ListerKind,
    active: Option<Active>,
    last_region: VertexSet,
}

struct Active {
    plan: Plan,
    step: u32,
    rounds: u32,
}

impl PlanLister {
    pub fn new(kind: ListerKind) -> PlanLister {
        PlanLister {
            kind,
            active: None,
            last_region: VertexSet::EMPTY,
        }
    }

    /// The plan's own round range `(lo, hi)` on `g`, before padding.
    pub fn range(
        kind: ListerKind,
        g: &Graph,
        f: &TokenAssignment,
    ) -> Result<(u32, u32), StrategyError> {
        Ok(build_plan(kind, g, f)?.range())
    }
}

pub fn path_splitting_lister() -> PlanLister {
    PlanLister::new(ListerKind::PathSplitting)
}

pub fn cycle_lister() -> PlanLister {
    PlanLister::new(ListerKind::Cycle)
}

pub fn tadpole_lister() -> PlanLister {
    PlanLister::new(ListerKind::Tadpole)
}

pub fn dumbbell_lister() -> PlanLister {
    PlanLister::new(ListerKind::Dumbbell)
}

pub fn theta_lister() -> PlanLister {
    PlanLister::new(ListerKind::Theta)
}

pub fn k24_lister() -> PlanLister {
    PlanLister::new(ListerKind::K24)
}

fn precondition(msg: impl Into<String>) -> StrategyError {
    StrategyError::Precondition(msg.into())
}

/// Vertices of a path graph in order, starting from the lower end.
fn path_order(g: &Graph) -> Option<Vec<usize>> {
    if !g.is_tree() || (0..g.n()).any(|v| g.degree(v) > 2) {
        return None;
    }
    let start = (0..g.n()).find(|&v| g.degree(v) <= 1)?;
    let mut order = vec![start];
    let mut seen = VertexSet::singleton(start);
    while let Some(next) = g.neighbors(*order.last()?).difference(seen).first() {
        seen.insert(next);
        order.push(next);
    }
    Some(order)
}

fn cycle_order(g: &Graph) -> Option<Vec<usize>> {
    if !g.is_cycle() {
        return None;
    }
    let mut order = vec![0];
    let mut prev = 0;
    let mut cur = g.neighbors(0).first()?;
    while cur != 0 {
        order.push(cur);
        let next = g.neighbors(cur).without(prev).first()?;
        prev = cur;
        cur = next;
    }
    Some(order)
}

fn require_tokens(
    f: &TokenAssignment,
    want: impl Fn(usize) -> u8,
    what: &str,
) -> Result<(), StrategyError> {
    if (0..f.len()).all(|v| f.get(v) == want(v)) {
        Ok(())
    } else {
        Err(precondition(format!("token assignment must be {what}")))
    }
}

fn build_plan(kind: ListerKind, g: &Graph, f: &TokenAssignment) -> Result<Plan, StrategyError> {
    f.check_against(g)?;
    let n = g.n();
    match kind {
        ListerKind::PathSplitting => {
            let p = path_order(g)
                .filter(|p| p.len() >= 2)
                .ok_or_else(|| precondition("graph is not a path on at least 2 vertices"))?;
            let ends = [p[0], p[n - 1]];
            require_tokens(
                f,
                |v| if ends.contains(&v) { 1 } else { 2 },
                "1 at the ends of the path and 2 inside",
            )?;
            Ok(path_or_pair(p).expect("at least two vertices"))
        }
        ListerKind::Cycle => {
            let c = cycle_order(g)
                .filter(|c| c.len() % 2 == 1)
                .ok_or_else(|| precondition("graph is not an odd cycle"))?;
            require_tokens(f, |_| 2, "2 everywhere")?;
            Ok(Plan::OddCycle(c))
        }
        ListerKind::Tadpole => {
            let (m, c) = (1..n)
                .find(|&m| make_tadpole(m, n + 1 - m).is_ok_and(|h| &h == g))
                .map(|m| (m, n + 1 - m))
                .ok_or_else(|| precondition("graph is not a tadpole in the standard labeling"))?;
            require_tokens(
                f,
                |v| if v == 0 { 1 } else { 2 },
                "1 at the free end and 2 elsewhere",
            )?;
            Ok(Plan::Tadpole {
                tail: (0..m).collect(),
                cycle: (m..m + c - 1).collect(),
            })
        }
        ListerKind::Dumbbell => {
            let (r, k, s) = (3..n)
                .flat_map(|r| (1..n).map(move |k| (r, k)))
                .filter_map(|(r, k)| (n + 2).checked_sub(r + k).map(|s| (r, k, s)))
                .find(|&(r, k, s)| s >= 3 && make_dumbbell(r, k, s).is_ok_and(|h| &h == g))
                .ok_or_else(|| precondition("graph is not a dumbbell in the standard labeling"))?;
            require_tokens(f, |_| 2, "2 everywhere")?;
            let _ = s;
            Ok(Plan::Dumbbell {
                first: (0..r).collect(),
                bridge: (r..r + k - 1).collect(),
                second: (r + k - 1..n).collect(),
            })
        }
        ListerKind::Theta => {
            let lens = (1..n)
                .flat_map(|p| (p..n).map(move |q| (p, q)))
                .filter_map(|(p, q)| (n + 1).checked_sub(p + q).map(|r| (p, q, r)))
                .find(|&(p, q, r)| q <= r && make_theta(p, q, r).is_ok_and(|h| &h == g))
                .ok_or_else(|| {
                    precondition("graph is not a theta graph in the standard labeling")
                })?;
            require_tokens(f, |_| 2, "2 everywhere")?;
            let (p, q, r) = lens;
            if r < 3 || p + q < 4 {
                return Err(precondition(
                    "needs a hub path of at least 3 edges and the others summing to at least 4",
                ));
            }
            // internals: p-path at 2.., then q-path, then r-path
            let internals =
                |start: usize, len: usize| -> Vec<usize> { (start..start + len - 1).collect() };
            let ip = internals(2, p);
            let iq = internals(2 + p - 1, q);
            let ir = internals(2 + p - 1 + q - 1, r);
            let mut long = vec![0];
            long.extend(&ir);
            long.push(1);
            Ok(Plan::Theta {
                long,
                others: [ip, iq],
            })
        }
        ListerKind::K24 => {
            let (hubs, m) = g
                .as_k2n()
                .filter(|&(_, m)| m >= 4)
                .ok_or_else(|| precondition("graph is not K_{2,n} with n >= 4"))?;
            require_tokens(f, |_| 2, "2 everywhere")?;
            let others: Vec<usize> = g.vertices().difference(hubs).iter().take(4).collect();
            let _ = m;
            let h: Vec<usize> = hubs.to_vec();
            Ok(Plan::K24 {
                u: h[0],
                v: h[1],
                x: [others[0], others[1], others[2], others[3]],
            })
        }
    }
}

impl ListerStrategy for PlanLister {
    fn name(&self) -> String {
        match self.kind {
            ListerKind::PathSplitting => "path-splitting-lister",
            ListerKind::Cycle => "cycle-lister",
            ListerKind::Tadpole => "tadpole-lister",
            ListerKind::Dumbbell => "dumbbell-lister",
            ListerKind::Theta => "theta-lister",
            ListerKind::K24 => "k24-lister",
        }
        .into()
    }

    fn begin(
        &mut self,
        g: &Graph,
        f: &TokenAssignment,
        variant: Variant,
    ) -> Result<(), StrategyError> {
        let Variant::ExactRounds(t) = variant else {
            return Err(precondition("scripted listers play the exact-rounds game"));
        };
        let plan = build_plan(self.kind, g, f)?;
        let start = GameState::initial(f, variant);
        let own = fit(&plan, &start, t).ok_or_else(|| {
            let (lo, hi) = plan.range();
            precondition(format!(
                "t = {t} is outside the guaranteed range (plan covers {lo}..={hi} rounds)"
            ))
        })?;
        self.last_region = plan.region();
        self.active = Some(Active {
            plan,
            step: 0,
            rounds: own,
        });
        Ok(())
    }

    fn choose(&mut self, _g: &Graph, s: &GameState) -> Result<VertexSet, StrategyError> {
        let r = s
            .rounds_left()
            .ok_or_else(|| precondition("scripted listers play the exact-rounds game"))?;
        let mut core = VertexSet::EMPTY;
        while let Some(active) = self.active.as_mut().filter(|a| a.rounds > 0) {
            if r > active.rounds {
                // padding rounds come before the plan's own rounds
                break;
            }
            match active.plan.step(active.step, active.rounds, s)? {
                Action::Mark(c) => {
                    active.step += 1;
                    active.rounds -= 1;
                    core = c;
                    break;
                }
                Action::Delegate(candidates) => {
                    let (plan, own) = candidates
                        .into_iter()
                        .find_map(|p| fit(&p, s, r).map(|own| (p, own)))
                        .ok_or_else(|| {
                            StrategyError::Stuck(format!("no sub-plan fits at {s:?}"))
                        })?;
                    self.last_region = plan.region();
                    self.active = Some(Active {
                        plan,
                        step: 0,
                        rounds: own,
                    });
                }
            }
        }
        let tokens = s.tokens();
        let forced = if r <= 3 {
            tokens.exactly(r as u8)
        } else {
            VertexSet::EMPTY
        };
        let mut marked = core.union(forced);
        if marked.is_empty() {
            let holders = tokens.nonzero();
            let pool = match holders.difference(self.last_region) {
                p if p.is_empty() => holders,
                p => p,
            };
            let best = pool
                .iter()
                .max_by_key(|&v| (s.token(v), std::cmp::Reverse(v)));
            marked = best.into_iter().collect();
        }
        s.check_lister_move(marked).map_err(|e| {
            StrategyError::Stuck(format!("planned move {marked:?} is illegal: {e}"))
        })?;
        Ok(marked)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bounds() {
        assert_eq!(path_lister_bound(3), 2);
        assert_eq!(path_lister_bound(4), 4);
        assert_eq!(path_lister_bound(8), 11);
        assert_eq!(tadpole_lister_bound(1, 5), 6);
        // 2n - 2 - lg n with n a power of two is exact
        assert_eq!(path_lister_bound(2), 1);
        assert_eq!(theta_bound(6, 3, 4), 8);
    }

    #[test]
    fn plans_follow_family_labelings() {
        let g = make_theta(1, 3, 3).unwrap();
        let f = TokenAssignment::uniform(6, 2).unwrap();
        let plan = build_plan(ListerKind::Theta, &g, &f).unwrap();
        let Plan::Theta { long, others } = &plan else {
            panic!()
        };
        for w in long.windows(2) {
            assert!(g.has_edge(w[0], w[1]));
        }
        assert_eq!(long.len(), 4);
        assert_eq!(others[0].len() + others[1].len(), 2);
        assert_eq!(plan.region(), g.vertices());

        let g = make_dumbbell(4, 2, 3).unwrap();
        let f = TokenAssignment::uniform(g.n(), 2).unwrap();
        let plan = build_plan(ListerKind::Dumbbell, &g, &f).unwrap();
        assert_eq!(plan.region(), g.vertices());
    }
}
