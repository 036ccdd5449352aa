//! Balance testing with certificates either way.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Sign, SignedGraph};

/// Which vertices are switched. Total over the vertex set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SwitchingAssignment {
    flipped: Vec<bool>,
}

impl SwitchingAssignment {
    pub fn none(n: usize) -> Self {
        SwitchingAssignment {
            flipped: vec![false; n],
        }
    }

    pub fn from_flags(flipped: Vec<bool>) -> Self {
        SwitchingAssignment { flipped }
    }

    pub fn is_flipped(&self, v: usize) -> bool {
        self.flipped[v]
    }

    pub fn flags(&self) -> &[bool] {
        &self.flipped
    }

    /// The switched set, ascending.
    pub fn flipped_set(&self) -> Vec<usize> {
        (0..self.flipped.len())
            .filter(|&v| self.flipped[v])
            .collect()
    }

    /// True iff switching by `self` makes every edge of `g` positive.
    pub fn validates(&self, g: &SignedGraph) -> bool {
        self.flipped.len() == g.n()
            && g.edges().iter().all(|e| {
                let s = if self.flipped[e.u] != self.flipped[e.v] {
                    e.sign.flip()
                } else {
                    e.sign
                };
                s == Sign::Positive
            })
    }
}

/// One traversal step of a walk: from `from` to `to` over the edge of sign `sign`.
pub type Step = (usize, usize, Sign);

/// A simple cycle `v_0 ... v_{l-1}` where `signs[i]` is the sign of the edge
/// used between `v_i` and `v_{i+1 mod l}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct NegativeCycle {
    pub vertices: Vec<usize>,
    pub signs: Vec<Sign>,
}

impl NegativeCycle {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn steps(&self) -> Vec<Step> {
        let l = self.vertices.len();
        (0..l)
            .map(|i| (self.vertices[i], self.vertices[(i + 1) % l], self.signs[i]))
            .collect()
    }

    /// Checks every invariant: distinct vertices, length at least 2, every
    /// edge present, and a negative sign product.
    pub fn validate(&self, g: &SignedGraph) -> Result<()> {
        let l = self.vertices.len();
        if l < 2 || self.signs.len() != l {
            return Err(Error::InvalidCycle(format!("length {l}")));
        }
        let mut seen = vec![false; g.n()];
        for &v in &self.vertices {
            g.check_vertex(v)?;
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidCycle(format!("vertex {v} repeated")));
            }
        }
        if l == 2 && self.signs[0] == self.signs[1] {
            return Err(Error::InvalidCycle(
                "2-cycle must use both edges of a digon".into(),
            ));
        }
        if closed_walk_sign(g, &self.steps())? != Sign::Negative {
            return Err(Error::InvalidCycle("sign product is positive".into()));
        }
        Ok(())
    }

    /// Maps vertex ids through `map` (e.g. from an induced subgraph back to
    /// its host).
    pub fn mapped(&self, map: &[usize]) -> NegativeCycle {
        NegativeCycle {
            vertices: self.vertices.iter().map(|&v| map[v]).collect(),
            signs: self.signs.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum BalanceResult {
    Balanced(SwitchingAssignment),
    Unbalanced(NegativeCycle),
}

impl BalanceResult {
    pub fn is_balanced(&self) -> bool {
        matches!(self, BalanceResult::Balanced(_))
    }

    pub fn cycle(&self) -> Option<&NegativeCycle> {
        match self {
            BalanceResult::Unbalanced(c) => Some(c),
            BalanceResult::Balanced(_) => None,
        }
    }

    pub fn switching(&self) -> Option<&SwitchingAssignment> {
        match self {
            BalanceResult::Balanced(s) => Some(s),
            BalanceResult::Unbalanced(_) => None,
        }
    }

    /// Re-checks the carried witness against `g`.
    pub fn validate(&self, g: &SignedGraph) -> Result<()> {
        match self {
            BalanceResult::Balanced(s) if s.validates(g) => Ok(()),
            BalanceResult::Balanced(_) => Err(Error::InvalidCycle(
                "switching leaves a negative edge".into(),
            )),
            BalanceResult::Unbalanced(c) => c.validate(g),
        }
    }
}

/// Product of the signs along a closed walk given as steps.
pub fn closed_walk_sign(g: &SignedGraph, walk: &[Step]) -> Result<Sign> {
    for (i, &(a, b, s)) in walk.iter().enumerate() {
        if !g.has_edge(a, b, s) {
            return Err(Error::InvalidWalk(format!("missing edge ({a}, {b}, {s})")));
        }
        let next = walk[(i + 1) % walk.len()].0;
        if b != next {
            return Err(Error::InvalidWalk(format!(
                "step {i} ends at {b}, next starts at {next}"
            )));
        }
    }
    Ok(Sign::product(walk.iter().map(|s| s.2)))
}

/// Extracts a negative simple cycle from a negative closed walk, never longer
/// than the walk. The segment closed by the first repeated vertex is cut
/// out; a positive segment is dropped and the scan continues.
pub fn reduce_closed_walk(g: &SignedGraph, walk: &[Step]) -> Result<NegativeCycle> {
    if closed_walk_sign(g, walk)? != Sign::Negative {
        return Err(Error::InvalidWalk("walk is not negative".into()));
    }
    let mut pos: Vec<Option<usize>> = vec![None; g.n()];
    let mut path: Vec<usize> = Vec::new();
    let mut signs: Vec<Sign> = Vec::new();
    let start = walk[0].0;
    path.push(start);
    pos[start] = Some(0);
    for &(_, to, sign) in walk {
        signs.push(sign);
        if let Some(i) = pos[to] {
            let segment = Sign::product(signs[i..].iter().copied());
            if segment == Sign::Negative {
                return Ok(NegativeCycle {
                    vertices: path[i..].to_vec(),
                    signs: signs[i..].to_vec(),
                });
            }
            for &v in &path[i + 1..] {
                pos[v] = None;
            }
            path.truncate(i + 1);
            signs.truncate(i);
        } else {
            pos[to] = Some(path.len());
            path.push(to);
        }
    }
    unreachable!("a negative closed walk always contains a negative cycle")
}

impl SignedGraph {
    /// Tests balance by labeling a BFS spanning forest with switching
    /// parities. Returns the switching that makes every edge positive, or a
    /// negative cycle (a length-2 digon whenever one exists).
    pub fn is_balanced(&self) -> BalanceResult {
        if let Some(w) = self
            .edges()
            .windows(2)
            .find(|w| w[0].u == w[1].u && w[0].v == w[1].v)
        {
            return BalanceResult::Unbalanced(NegativeCycle {
                vertices: vec![w[0].u, w[0].v],
                signs: vec![Sign::Positive, Sign::Negative],
            });
        }
        let n = self.n();
        let mut side: Vec<Option<bool>> = vec![None; n];
        let mut parent: Vec<Option<(usize, Sign)>> = vec![None; n];
        let mut depth = vec![0usize; n];
        let mut queue = VecDeque::new();
        for root in 0..n {
            if side[root].is_some() {
                continue;
            }
            side[root] = Some(false);
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                let su = side[u].unwrap();
                for &(w, sign) in self.neighbors(u) {
                    let want = su ^ sign.is_negative();
                    match side[w] {
                        None => {
                            side[w] = Some(want);
                            parent[w] = Some((u, sign));
                            depth[w] = depth[u] + 1;
                            queue.push_back(w);
                        }
                        Some(s) if s != want => {
                            return BalanceResult::Unbalanced(tree_cycle(
                                &parent, &depth, u, w, sign,
                            ));
                        }
                        Some(_) => {}
                    }
                }
            }
        }
        BalanceResult::Balanced(SwitchingAssignment::from_flags(
            side.into_iter().map(|s| s.unwrap_or(false)).collect(),
        ))
    }
}

/// Cycle formed by the non-tree edge `u -> w` and the two tree paths to
/// their lowest common ancestor.
fn tree_cycle(
    parent: &[Option<(usize, Sign)>],
    depth: &[usize],
    u: usize,
    w: usize,
    closing: Sign,
) -> NegativeCycle {
    // up_u: u, parent(u), ..., lca ; up_w likewise
    let (mut a, mut b) = (u, w);
    let mut up_u = vec![];
    let mut up_w = vec![];
    while depth[a] > depth[b] {
        let (p, s) = parent[a].unwrap();
        up_u.push((a, s));
        a = p;
    }
    while depth[b] > depth[a] {
        let (p, s) = parent[b].unwrap();
        up_w.push((b, s));
        b = p;
    }
    while a != b {
        let (pa, sa) = parent[a].unwrap();
        let (pb, sb) = parent[b].unwrap();
        up_u.push((a, sa));
        up_w.push((b, sb));
        a = pa;
        b = pb;
    }
    // lca -> ... -> w, then the closing edge w -> u, then u -> ... -> lca
    let mut vertices = vec![a];
    let mut signs = vec![];
    for &(x, s) in up_w.iter().rev() {
        signs.push(s);
        vertices.push(x);
    }
    signs.push(closing);
    for &(x, s) in &up_u {
        vertices.push(x);
        signs.push(s);
    }
    NegativeCycle { vertices, signs }
}

/// Brute-force balance test over all `2^n` switchings. Test oracle.
pub fn balanced_by_enumeration(g: &SignedGraph) -> bool {
    let n = g.n();
    assert!(n <= 24, "switching enumeration is exponential");
    (0u32..1 << n).any(|mask| {
        g.edges().iter().all(|e| {
            let flip = ((mask >> e.u) ^ (mask >> e.v)) & 1 == 1;
            e.sign.is_negative() == flip
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plain::PlainGraph;
    use Sign::*;

    fn tri(s: [Sign; 3]) -> SignedGraph {
        SignedGraph::new(3, [(0, 1, s[0]), (1, 2, s[1]), (0, 2, s[2])]).unwrap()
    }

    #[test]
    fn positive_triangle_is_balanced_without_switching() {
        let g = tri([Positive; 3]);
        let r = g.is_balanced();
        assert_eq!(r.switching().unwrap().flipped_set(), Vec::<usize>::new());
        r.validate(&g).unwrap();
    }

    #[test]
    fn negative_triangle_witness() {
        let g = tri([Negative; 3]);
        let r = g.is_balanced();
        assert_eq!(r.cycle().unwrap().len(), 3);
        r.validate(&g).unwrap();
    }

    #[test]
    fn digon_witness_has_length_two() {
        let g = SignedGraph::new(2, [(0, 1, Positive), (0, 1, Negative)]).unwrap();
        let r = g.is_balanced();
        assert_eq!(r.cycle().unwrap().vertices, vec![0, 1]);
        r.validate(&g).unwrap();
    }

    #[test]
    fn long_cycle_witness_is_valid() {
        let g = SignedGraph::new(
            6,
            [
                (0, 1, Positive),
                (1, 2, Positive),
                (2, 3, Negative),
                (3, 4, Positive),
                (4, 5, Positive),
                (0, 5, Positive),
            ],
        )
        .unwrap();
        let r = g.is_balanced();
        assert_eq!(r.cycle().unwrap().len(), 6);
        r.validate(&g).unwrap();
    }

    #[test]
    fn walk_signs() {
        let g = SignedGraph::new(2, [(0, 1, Positive), (0, 1, Negative)]).unwrap();
        assert_eq!(closed_walk_sign(&g, &[]).unwrap(), Positive);
        assert_eq!(
            closed_walk_sign(&g, &[(0, 1, Positive), (1, 0, Negative)]).unwrap(),
            Negative
        );
        assert!(closed_walk_sign(&g, &[(0, 1, Positive)]).is_err());
        let t = tri([Negative; 3]);
        assert_eq!(
            closed_walk_sign(&t, &[(0, 1, Negative), (1, 2, Negative), (2, 0, Negative)]).unwrap(),
            Negative
        );
        assert!(closed_walk_sign(&t, &[(0, 1, Positive), (1, 0, Positive)]).is_err());
    }

    #[test]
    fn reduce_drops_positive_detours() {
        // negative triangle 0-1-2 with a positive pendant detour 1-3-1
        let g = SignedGraph::new(
            4,
            [
                (0, 1, Negative),
                (1, 2, Negative),
                (0, 2, Negative),
                (1, 3, Positive),
            ],
        )
        .unwrap();
        let walk = [
            (0, 1, Negative),
            (1, 3, Positive),
            (3, 1, Positive),
            (1, 2, Negative),
            (2, 0, Negative),
        ];
        let c = reduce_closed_walk(&g, &walk).unwrap();
        assert_eq!(c.vertices, vec![0, 1, 2]);
        c.validate(&g).unwrap();
    }

    #[test]
    fn all_negative_odd_cycles_unbalanced() {
        for n in 3..9 {
            let g = PlainGraph::cycle(n).to_all_negative();
            assert_eq!(g.is_balanced().is_balanced(), n % 2 == 0);
            assert_eq!(balanced_by_enumeration(&g), n % 2 == 0);
        }
    }
}
