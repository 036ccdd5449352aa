//! The signed double cover and shortest negative cycles.
//!
//! Cover vertex `2v` is `(v, +)` and `2v + 1` is `(v, -)`. A positive edge
//! keeps the fiber sign, a negative edge flips it, so a path from `(v, +)` to
//! `(v, -)` projects to a negative closed walk through `v`.

use std::collections::VecDeque;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::balance::{reduce_closed_walk, NegativeCycle, Step};
use crate::graph::{Sign, SignedGraph};
use crate::plain::PlainGraph;

/// Index of the cover vertex `(v, fiber)`.
pub fn cover_vertex(v: usize, fiber: Sign) -> usize {
    2 * v + fiber.is_negative() as usize
}

/// Projection of cover vertex `x` back to `(v, fiber)`.
pub fn fiber_of(x: usize) -> (usize, Sign) {
    (
        x / 2,
        if x.is_multiple_of(2) {
            Sign::Positive
        } else {
            Sign::Negative
        },
    )
}

/// The double cover as a list of cover edges, one per signed edge and fiber,
/// so parallel signed edges give distinct cover edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleCover {
    pub vertices: usize,
    pub edges: Vec<(usize, usize)>,
}

impl DoubleCover {
    /// The cover as a simple graph. The two cover edges of one signed edge
    /// never coincide, and edges from different signs of a digon land on
    /// different pairs, so nothing collapses.
    pub fn to_plain(&self) -> PlainGraph {
        PlainGraph::new(self.vertices, self.edges.iter().copied()).unwrap()
    }
}

pub fn double_cover(g: &SignedGraph) -> DoubleCover {
    let mut edges = Vec::with_capacity(2 * g.edge_count());
    for e in g.edges() {
        for fiber in [Sign::Positive, Sign::Negative] {
            let a = cover_vertex(e.u, fiber);
            let b = cover_vertex(e.v, fiber * e.sign);
            edges.push((a.min(b), a.max(b)));
        }
    }
    DoubleCover {
        vertices: 2 * g.n(),
        edges,
    }
}

/// Negative girth: a shortest negative cycle, or `Infinite` for a balanced graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Girth {
    Finite(NegativeCycle),
    Infinite,
}

impl Girth {
    pub fn length(&self) -> Option<usize> {
        match self {
            Girth::Finite(c) => Some(c.len()),
            Girth::Infinite => None,
        }
    }

    pub fn witness(&self) -> Option<&NegativeCycle> {
        match self {
            Girth::Finite(c) => Some(c),
            Girth::Infinite => None,
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, Girth::Infinite)
    }
}

/// BFS distances in the cover from `from`, stopping once `stop` is settled
/// or the depth exceeds `max_depth`.
fn cover_bfs(g: &SignedGraph, from: usize, stop: Option<usize>, max_depth: usize) -> Vec<u32> {
    let mut dist = vec![u32::MAX; 2 * g.n()];
    let mut queue = VecDeque::new();
    dist[from] = 0;
    queue.push_back(from);
    while let Some(x) = queue.pop_front() {
        if Some(x) == stop || dist[x] as usize >= max_depth {
            break;
        }
        let (v, fiber) = fiber_of(x);
        for &(w, sign) in g.neighbors(v) {
            let y = cover_vertex(w, fiber * sign);
            if dist[y] == u32::MAX {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
    }
    dist
}

/// Length of a shortest negative closed walk through `v`, if any.
pub fn shortest_negative_walk_through(g: &SignedGraph, v: usize) -> Option<usize> {
    shortest_negative_walk_bounded(g, v, usize::MAX)
}

/// As [`shortest_negative_walk_through`], but gives up beyond `max_len`.
pub fn shortest_negative_walk_bounded(g: &SignedGraph, v: usize, max_len: usize) -> Option<usize> {
    let target = cover_vertex(v, Sign::Negative);
    let d = cover_bfs(g, cover_vertex(v, Sign::Positive), Some(target), max_len)[target];
    (d != u32::MAX && d as usize <= max_len).then_some(d as usize)
}

/// Lexicographically smallest shortest cover path from `(s, +)` to `(s, -)`,
/// projected to a closed walk.
fn smallest_walk(g: &SignedGraph, s: usize) -> Vec<Step> {
    let target = cover_vertex(s, Sign::Negative);
    let to_target = cover_bfs(g, target, None, usize::MAX);
    let mut x = cover_vertex(s, Sign::Positive);
    let mut walk = Vec::new();
    while x != target {
        let (v, fiber) = fiber_of(x);
        let &(w, sign) = g
            .neighbors(v)
            .iter()
            .find(|&&(w, sign)| {
                let y = cover_vertex(w, fiber * sign);
                to_target[y] != u32::MAX && to_target[y] + 1 == to_target[x]
            })
            .expect("a neighbor one step closer to the target exists");
        walk.push((v, w, sign));
        x = cover_vertex(w, fiber * sign);
    }
    walk
}

impl SignedGraph {
    /// Shortest negative cycle via per-vertex searches in the double cover.
    ///
    /// Searches run in parallel over source vertices. The witness is the
    /// lexicographically smallest shortest walk from the smallest source
    /// attaining the minimum, so the result does not depend on scheduling.
    pub fn negative_girth(&self) -> Girth {
        let lengths: Vec<Option<usize>> = (0..self.n())
            .into_par_iter()
            .map(|v| shortest_negative_walk_through(self, v))
            .collect();
        let best = lengths
            .iter()
            .enumerate()
            .filter_map(|(v, l)| l.map(|l| (l, v)))
            .min();
        match best {
            None => Girth::Infinite,
            Some((_, s)) => {
                let walk = smallest_walk(self, s);
                let cycle = reduce_closed_walk(self, &walk)
                    .expect("cover path projects to a negative walk");
                debug_assert_eq!(cycle.len(), walk.len());
                Girth::Finite(cycle)
            }
        }
    }
}

/// Shortest negative cycle length by enumerating simple cycles from their
/// smallest vertex, pruning at the best length found so far. Test oracle.
pub fn girth_by_cycle_enumeration(g: &SignedGraph) -> Option<usize> {
    fn extend(
        g: &SignedGraph,
        start: usize,
        v: usize,
        len: usize,
        sign: Sign,
        on_path: &mut [bool],
        best: &mut Option<usize>,
    ) {
        for &(w, s) in g.neighbors(v) {
            let l = len + 1;
            if best.is_some_and(|b| l >= b) {
                return;
            }
            if w == start {
                // a 2-cycle must use two distinct (digon) edges; the walk
                // start -> v -> start over one edge has l == 2 and positive sign
                if sign * s == Sign::Negative && l >= 2 {
                    *best = Some(l);
                }
                continue;
            }
            if w < start || on_path[w] {
                continue;
            }
            on_path[w] = true;
            extend(g, start, w, l, sign * s, on_path, best);
            on_path[w] = false;
        }
    }
    let mut best = None;
    let mut on_path = vec![false; g.n()];
    for start in 0..g.n() {
        on_path[start] = true;
        extend(g, start, start, 0, Sign::Positive, &mut on_path, &mut best);
        on_path[start] = false;
    }
    best
}
