use serde::{Deserialize, Serialize};

use crate::budget::{Budget, Meter};
use crate::dsu::ParityDsu;
use crate::error::{Error, Result};
use crate::graph::SignedGraph;

/// A largest vertex set whose induced subgraph is balanced `p`-colorable.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MaxSubgraph {
    /// Ascending; lexicographically smallest among the maximum sets.
    pub vertices: Vec<usize>,
    /// `colors[i]` is the class of `vertices[i]`, in `0..p`.
    pub colors: Vec<usize>,
    pub p: usize,
    pub complete: bool,
    pub nodes: u64,
}

const NONE: usize = usize::MAX;

struct Search<'a> {
    g: &'a SignedGraph,
    p: usize,
    color: Vec<usize>,
    dsu: ParityDsu,
    meter: Meter,
    count: usize,
    best: Vec<usize>,
    best_count: usize,
}

impl Search<'_> {
    fn place(&mut self, v: usize, c: usize) -> bool {
        let snap = self.dsu.snapshot();
        for &(w, s) in self.g.neighbors(v) {
            if self.color[w] == c && !self.dsu.unite(v, w, s.is_negative()) {
                self.dsu.rollback(snap);
                return false;
            }
        }
        self.color[v] = c;
        true
    }

    /// Could `v` join class `c` without contradiction? Does not mutate.
    fn fits(&self, v: usize, c: usize) -> bool {
        let mut seen: Vec<(usize, bool)> = Vec::new();
        for &(w, s) in self.g.neighbors(v) {
            if self.color[w] != c {
                continue;
            }
            let (root, par) = self.dsu.find(w);
            let side = par ^ s.is_negative();
            match seen.iter().find(|&&(r, _)| r == root) {
                Some(&(_, other)) if other != side => return false,
                Some(_) => {}
                None => seen.push((root, side)),
            }
        }
        true
    }

    fn bound(&self, i: usize, used: usize) -> usize {
        let n = self.g.n();
        if used < self.p {
            return self.count + (n - i);
        }
        self.count
            + (i..n)
                .filter(|&v| (0..self.p).any(|c| self.fits(v, c)))
                .count()
    }

    fn dfs(&mut self, i: usize, used: usize) -> bool {
        if !self.meter.tick() {
            return false;
        }
        if self.count > self.best_count {
            self.best_count = self.count;
            self.best = self.color.clone();
        }
        if i == self.g.n() || self.bound(i, used) <= self.best_count {
            return true;
        }
        for c in 0..(used + 1).min(self.p) {
            let snap = self.dsu.snapshot();
            if self.place(i, c) {
                self.count += 1;
                let ok = self.dfs(i + 1, used.max(c + 1));
                self.count -= 1;
                self.color[i] = NONE;
                self.dsu.rollback(snap);
                if !ok {
                    return false;
                }
            }
        }
        self.dfs(i + 1, used)
    }
}

/// Maximum-cardinality vertex set `S` with `chi_b(G[S]) <= p`, plus its
/// coloring. Include-before-exclude search in vertex order, so the first
/// maximum found is the lexicographically smallest. An exhausted budget
/// returns the best set so far with `complete == false`.
pub fn max_balanced_p_colorable_subgraph(
    g: &SignedGraph,
    p: usize,
    budget: Budget,
) -> Result<MaxSubgraph> {
    if p == 0 {
        return Err(Error::Parameter("p must be at least 1".into()));
    }
    let mut s = Search {
        g,
        p,
        color: vec![NONE; g.n()],
        dsu: ParityDsu::new(g.n()),
        meter: Meter::new(budget),
        count: 0,
        best: vec![NONE; g.n()],
        best_count: 0,
    };
    let complete = s.dfs(0, 0);
    let vertices: Vec<usize> = (0..g.n()).filter(|&v| s.best[v] != NONE).collect();
    let colors = vertices.iter().map(|&v| s.best[v]).collect();
    Ok(MaxSubgraph {
        vertices,
        colors,
        p,
        complete,
        nodes: s.meter.used,
    })
}

/// Maximum balanced set, lexicographically smallest among maximum ones.
pub fn max_balanced_set(g: &SignedGraph, budget: Budget) -> Result<MaxSubgraph> {
    max_balanced_p_colorable_subgraph(g, 1, budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::{balanced_set_by_enumeration, check_coloring};
    use crate::graph::Sign;
    use crate::plain::PlainGraph;

    fn brute_max(g: &SignedGraph) -> Vec<usize> {
        let n = g.n();
        let mut best: Vec<usize> = vec![];
        for mask in 0u32..1 << n {
            let s: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            if balanced_set_by_enumeration(g, &s)
                && (s.len() > best.len() || (s.len() == best.len() && s < best))
            {
                best = s;
            }
        }
        best
    }

    #[test]
    fn negative_k5() {
        let g = PlainGraph::complete(5).to_all_negative();
        let m = max_balanced_set(&g, Budget::default()).unwrap();
        assert_eq!(m.vertices, vec![0, 1]);
        assert_eq!(m.vertices, brute_max(&g));
        assert_eq!(
            max_balanced_p_colorable_subgraph(&g, 2, Budget::default())
                .unwrap()
                .vertices
                .len(),
            4
        );
        assert_eq!(
            max_balanced_p_colorable_subgraph(&g, 3, Budget::default())
                .unwrap()
                .vertices
                .len(),
            5
        );
    }

    #[test]
    fn negative_four_cycle() {
        let g = SignedGraph::new(
            4,
            [
                (0, 1, Sign::Positive),
                (1, 2, Sign::Positive),
                (2, 3, Sign::Positive),
                (0, 3, Sign::Negative),
            ],
        )
        .unwrap();
        let m = max_balanced_set(&g, Budget::default()).unwrap();
        assert_eq!(m.vertices, vec![0, 1, 2]);
        assert_eq!(m.vertices, brute_max(&g));
    }

    #[test]
    fn balanced_graph_keeps_everything() {
        let g = PlainGraph::cycle(8).to_all_negative();
        assert_eq!(
            max_balanced_set(&g, Budget::default())
                .unwrap()
                .vertices
                .len(),
            8
        );
    }

    #[test]
    fn coloring_of_max_subgraph_is_valid() {
        let g = PlainGraph::complete(7).to_all_negative();
        let m = max_balanced_p_colorable_subgraph(&g, 2, Budget::default()).unwrap();
        assert_eq!(m.vertices.len(), 4);
        let sub = g.induced(&m.vertices).unwrap();
        assert!(check_coloring(&sub, &m.colors, 2).unwrap());
    }
}
