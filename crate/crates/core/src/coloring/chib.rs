use serde::{Deserialize, Serialize};

use super::BalancedColoring;
use crate::budget::{Budget, Meter};
use crate::dsu::ParityDsu;
use crate::graph::{EdgeState, SignedGraph};

/// Outcome of the balanced chromatic number search.
///
/// `coloring` is the best coloring found. When `complete` is set the search
/// refuted every coloring with fewer colors, so `coloring.used_colors()` is
/// exact; otherwise the value lies in `lower_bound..=upper_bound()`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChiBResult {
    pub coloring: BalancedColoring,
    pub lower_bound: usize,
    pub complete: bool,
    pub nodes: u64,
}

impl ChiBResult {
    pub fn value(&self) -> Option<usize> {
        self.complete.then(|| self.upper_bound())
    }

    pub fn upper_bound(&self) -> usize {
        self.coloring.used_colors()
    }
}

/// Answer to "is there a balanced `p`-coloring?".
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decision {
    Colorable(Vec<usize>),
    NotColorable,
    /// Budget ran out first.
    Unknown,
}

/// Smallest-last order reversed: dense cores first.
pub(crate) fn degeneracy_order(g: &SignedGraph) -> Vec<usize> {
    let n = g.n();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut removal = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !removed[v])
            .min_by_key(|&v| (deg[v], v))
            .unwrap();
        removed[v] = true;
        removal.push(v);
        for w in g.neighbor_vertices(v) {
            if !removed[w] {
                deg[w] -= 1;
            }
        }
    }
    removal.reverse();
    removal
}

struct Search<'a> {
    g: &'a SignedGraph,
    order: Vec<usize>,
    color: Vec<usize>,
    dsu: ParityDsu,
    meter: Meter,
    p: usize,
}

const NONE: usize = usize::MAX;

impl<'a> Search<'a> {
    fn new(g: &'a SignedGraph, p: usize, budget: Budget) -> Self {
        Search {
            g,
            order: degeneracy_order(g),
            color: vec![NONE; g.n()],
            dsu: ParityDsu::new(g.n()),
            meter: Meter::new(budget),
            p,
        }
    }

    /// Tries to put `v` into class `c`; on failure the DSU is restored.
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

    fn unplace(&mut self, v: usize, snap: usize) {
        self.color[v] = NONE;
        self.dsu.rollback(snap);
    }

    /// `Some(true)` on success, `Some(false)` when exhausted, `None` when
    /// the budget ran out.
    fn dfs(&mut self, i: usize, used: usize) -> Option<bool> {
        if !self.meter.tick() {
            return None;
        }
        if i == self.order.len() {
            return Some(true);
        }
        let v = self.order[i];
        for c in 0..(used + 1).min(self.p) {
            let snap = self.dsu.snapshot();
            if !self.place(v, c) {
                continue;
            }
            match self.dfs(i + 1, used.max(c + 1)) {
                Some(false) => self.unplace(v, snap),
                other => return other,
            }
        }
        Some(false)
    }
}

/// Decides balanced `p`-colorability by branch and bound: vertices in
/// degeneracy order, each class kept balanced incrementally with a parity
/// union-find, and color `j + 1` only after color `j` is in use.
pub fn p_colorable(g: &SignedGraph, p: usize, budget: Budget) -> (Decision, u64) {
    if g.n() == 0 {
        return (Decision::Colorable(vec![]), 0);
    }
    if p == 0 {
        return (Decision::NotColorable, 0);
    }
    let mut s = Search::new(g, p, budget);
    let d = match s.dfs(0, 0) {
        Some(true) => Decision::Colorable(s.color.clone()),
        Some(false) => Decision::NotColorable,
        None => Decision::Unknown,
    };
    (d, s.meter.used)
}

fn greedy(g: &SignedGraph) -> Vec<usize> {
    let mut s = Search::new(g, g.n().max(1), Budget::unlimited());
    let order = s.order.clone();
    let mut used = 0;
    for v in order {
        let c = (0..used).find(|&c| s.place(v, c)).unwrap_or_else(|| {
            s.place(v, used);
            used
        });
        used = used.max(c + 1);
    }
    s.color
}

/// Vertices pairwise joined by digons need distinct colors.
fn digon_clique_bound(g: &SignedGraph) -> usize {
    let mut best = 0;
    for start in 0..g.n() {
        let mut clique = vec![start];
        for v in 0..g.n() {
            if v != start
                && clique
                    .iter()
                    .all(|&u| g.edge_state(u, v) == EdgeState::Digon)
            {
                clique.push(v);
            }
        }
        best = best.max(clique.len());
    }
    best
}

/// Exact balanced chromatic number within `budget`.
///
/// Starts from a greedy coloring and repeatedly asks for a coloring with one
/// color fewer until that is refuted. An exhausted budget yields the best
/// coloring so far with `complete == false`.
pub fn balanced_chromatic_number(g: &SignedGraph, budget: Budget) -> ChiBResult {
    let n = g.n();
    if n == 0 {
        return ChiBResult {
            coloring: BalancedColoring {
                colors: vec![],
                palette: 0,
                switchings: vec![],
            },
            lower_bound: 0,
            complete: true,
            nodes: 0,
        };
    }
    let mut lower = if g.is_balanced().is_balanced() { 1 } else { 2 };
    lower = lower.max(digon_clique_bound(g));
    let mut best = compact(greedy(g));
    let mut nodes = 0u64;
    let mut upper = best.iter().max().unwrap() + 1;
    let mut complete = true;
    while upper > lower {
        let left = Budget::nodes(budget.nodes.saturating_sub(nodes));
        let (d, used) = p_colorable(g, upper - 1, left);
        nodes += used;
        match d {
            Decision::Colorable(c) => {
                best = compact(c);
                upper = best.iter().max().unwrap() + 1;
            }
            Decision::NotColorable => lower = upper,
            Decision::Unknown => {
                complete = false;
                break;
            }
        }
    }
    let coloring =
        BalancedColoring::certify(g, best, upper).expect("search keeps classes balanced");
    ChiBResult {
        coloring,
        lower_bound: lower,
        complete,
        nodes,
    }
}

/// Renumbers colors by first appearance along vertex order.
fn compact(colors: Vec<usize>) -> Vec<usize> {
    let mut map = vec![NONE; colors.len() + 1];
    let mut next = 0;
    colors
        .into_iter()
        .map(|c| {
            if map[c] == NONE {
                map[c] = next;
                next += 1;
            }
            map[c]
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Sign;
    use crate::plain::PlainGraph;

    #[test]
    fn negative_k5_needs_three() {
        let g = PlainGraph::complete(5).to_all_negative();
        let r = balanced_chromatic_number(&g, Budget::default());
        assert_eq!(r.value(), Some(3));
        assert!(r.coloring.validate(&g).unwrap());
    }

    #[test]
    fn balanced_graph_needs_one() {
        let g = PlainGraph::cycle(6).to_all_negative();
        assert_eq!(
            balanced_chromatic_number(&g, Budget::default()).value(),
            Some(1)
        );
        assert_eq!(
            balanced_chromatic_number(&SignedGraph::empty(0), Budget::default()).value(),
            Some(0)
        );
        assert_eq!(
            balanced_chromatic_number(&SignedGraph::empty(4), Budget::default()).value(),
            Some(1)
        );
    }

    #[test]
    fn digon_needs_two() {
        let g = SignedGraph::new(2, [(0, 1, Sign::Positive), (0, 1, Sign::Negative)]).unwrap();
        assert_eq!(
            balanced_chromatic_number(&g, Budget::default()).value(),
            Some(2)
        );
    }

    #[test]
    fn tiny_budget_is_marked_incomplete() {
        let g = PlainGraph::complete(9).to_all_negative();
        let r = balanced_chromatic_number(&g, Budget::nodes(3));
        assert!(!r.complete);
        assert_eq!(r.value(), None);
        assert!(r.lower_bound <= 5 && r.upper_bound() >= 5);
        assert!(r.coloring.validate(&g).unwrap());
    }
}
