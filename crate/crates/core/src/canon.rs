//! Canonical forms up to vertex relabeling and switching.
//!
//! Candidate orderings come from color refinement with individualization.
//! Refinement only looks at switching-invariant data: which pairs are
//! joined by a single edge, which by a digon, and the negative triangles.
//! For each ordering the graph is switched so that a BFS forest of single
//! edges, taken in position order, is all positive; the smallest encoding of
//! the upper triangle over all orderings is the form.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{EdgeState, Sign, SignedGraph};

pub const CANON_MAX_VERTICES: usize = 64;

/// `n` followed by two bits per vertex pair, pairs `(i, j)` with `i < j`
/// in row order. Compares like the graph it encodes.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CanonicalForm {
    n: usize,
    bits: Vec<u8>,
}

fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

impl CanonicalForm {
    fn encode(n: usize, state: impl Fn(usize, usize) -> EdgeState) -> CanonicalForm {
        let mut bits = vec![0u8; pair_count(n).div_ceil(4)];
        let mut k = 0;
        for i in 0..n {
            for j in i + 1..n {
                // high bits first so byte order matches pair order
                bits[k / 4] |= state(i, j).code() << (6 - 2 * (k % 4));
                k += 1;
            }
        }
        CanonicalForm { n, bits }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn to_hex(&self) -> String {
        let mut s = format!("{:02x}", self.n);
        for b in &self.bits {
            s.push_str(&format!("{b:02x}"));
        }
        s
    }

    pub fn from_hex(s: &str) -> Result<CanonicalForm> {
        let bad = || Error::Parameter(format!("not a canonical form: {s:?}"));
        if !s.len().is_multiple_of(2) || !s.is_ascii() {
            return Err(bad());
        }
        let bytes: Vec<u8> = (0..s.len())
            .step_by(2)
            .map(|i| u8::from_str_radix(&s[i..i + 2], 16))
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| bad())?;
        let (&n, bits) = bytes.split_first().ok_or_else(bad)?;
        let n = n as usize;
        if bits.len() != pair_count(n).div_ceil(4) {
            return Err(bad());
        }
        Ok(CanonicalForm {
            n,
            bits: bits.to_vec(),
        })
    }

    fn state(&self, k: usize) -> EdgeState {
        EdgeState::from_code((self.bits[k / 4] >> (6 - 2 * (k % 4))) & 3).unwrap()
    }

    /// The representative graph the form encodes.
    pub fn to_graph(&self) -> SignedGraph {
        let n = self.n;
        let mut states = vec![EdgeState::None; n * n];
        let mut k = 0;
        for i in 0..n {
            for j in i + 1..n {
                states[i * n + j] = self.state(k);
                k += 1;
            }
        }
        SignedGraph::from_states(n, |i, j| states[i.min(j) * n + i.max(j)])
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

// 0 none, 1 single edge, 2 digon
fn kind(s: EdgeState) -> u8 {
    match s {
        EdgeState::None => 0,
        EdgeState::Positive | EdgeState::Negative => 1,
        EdgeState::Digon => 2,
    }
}

struct Refiner {
    n: usize,
    kinds: Vec<u8>,
}

impl Refiner {
    fn new(g: &SignedGraph) -> Refiner {
        let n = g.n();
        let mut kinds = vec![0u8; n * n];
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    kinds[i * n + j] = kind(g.edge_state(i, j));
                }
            }
        }
        Refiner { n, kinds }
    }

    /// Renumbers `keys` densely in sorted order.
    fn rank<K: Ord + Clone>(keys: &[K]) -> Vec<usize> {
        let mut sorted: Vec<K> = keys.to_vec();
        sorted.sort();
        sorted.dedup();
        keys.iter()
            .map(|k| sorted.binary_search(k).unwrap())
            .collect()
    }

    fn refine(&self, mut colors: Vec<usize>) -> Vec<usize> {
        let n = self.n;
        let mut cells = colors.iter().max().map_or(0, |&c| c + 1);
        loop {
            let keys: Vec<(usize, Vec<(u8, usize)>)> = (0..n)
                .map(|v| {
                    let mut sig: Vec<(u8, usize)> = (0..n)
                        .filter(|&w| self.kinds[v * n + w] != 0)
                        .map(|w| (self.kinds[v * n + w], colors[w]))
                        .collect();
                    sig.sort_unstable();
                    (colors[v], sig)
                })
                .collect();
            colors = Self::rank(&keys);
            let now = colors.iter().max().map_or(0, |&c| c + 1);
            if now == cells {
                return colors;
            }
            cells = now;
        }
    }
}

fn negative_triangles(g: &SignedGraph) -> Vec<usize> {
    let n = g.n();
    let mut count = vec![0; n];
    for a in 0..n {
        for b in a + 1..n {
            let sab = g.edge_state(a, b);
            if sab == EdgeState::None {
                continue;
            }
            for c in b + 1..n {
                let (sbc, sac) = (g.edge_state(b, c), g.edge_state(a, c));
                if sbc == EdgeState::None || sac == EdgeState::None {
                    continue;
                }
                let negative = [sab, sbc, sac].contains(&EdgeState::Digon)
                    || Sign::product([sab, sbc, sac].iter().map(|s| s.signs()[0])).is_negative();
                if negative {
                    count[a] += 1;
                    count[b] += 1;
                    count[c] += 1;
                }
            }
        }
    }
    count
}

/// Whether `g` and `h` on the same vertex set differ by a switching.
pub fn switching_equivalent(g: &SignedGraph, h: &SignedGraph) -> bool {
    if g.n() != h.n() {
        return false;
    }
    let mut diff = Vec::new();
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            let (a, b) = (g.edge_state(u, v), h.edge_state(u, v));
            if kind(a) != kind(b) {
                return false;
            }
            if kind(a) == 1 {
                diff.push((u, v, a.signs()[0] * b.signs()[0]));
            }
        }
    }
    SignedGraph::new(g.n(), diff)
        .unwrap()
        .is_balanced()
        .is_balanced()
}

struct Canon<'a> {
    g: &'a SignedGraph,
    refiner: Refiner,
    best: Option<CanonicalForm>,
}

impl Canon<'_> {
    /// Swapping `u` and `v` (same cell, so neither is individualized) maps
    /// the graph to a switching of itself.
    fn swappable(&self, u: usize, v: usize) -> bool {
        let n = self.g.n();
        let mut perm: Vec<usize> = (0..n).collect();
        perm.swap(u, v);
        let h = self.g.relabel(&perm).unwrap();
        switching_equivalent(self.g, &h)
    }

    fn leaf(&mut self, colors: &[usize]) {
        let n = self.g.n();
        let mut order = vec![0; n];
        for (v, &c) in colors.iter().enumerate() {
            order[c] = v;
        }
        let form = normalized_form(self.g, &order);
        if self.best.as_ref().is_none_or(|b| form < *b) {
            self.best = Some(form);
        }
    }

    fn search(&mut self, colors: Vec<usize>) {
        let n = self.g.n();
        let mut size = vec![0usize; n];
        for &c in &colors {
            size[c] += 1;
        }
        let Some(target) = (0..n).find(|&c| size[c] > 1) else {
            self.leaf(&colors);
            return;
        };
        let members: Vec<usize> = (0..n).filter(|&v| colors[v] == target).collect();
        let mut reps: Vec<usize> = Vec::new();
        for &v in &members {
            if !reps.iter().any(|&r| self.swappable(r, v)) {
                reps.push(v);
            }
        }
        for v in reps {
            // v gets its own cell in front of the rest of its cell
            let split: Vec<usize> = (0..n)
                .map(|w| 2 * colors[w] + usize::from(colors[w] == target && w != v))
                .collect();
            let next = self.refiner.refine(Refiner::rank(&split));
            self.search(next);
        }
    }
}

/// Position `i` holds vertex `order[i]`. Switches so a BFS forest over single
/// edges, visiting neighbors in position order, is all positive.
fn normalized_form(g: &SignedGraph, order: &[usize]) -> CanonicalForm {
    let n = g.n();
    let state = |i: usize, j: usize| g.edge_state(order[i], order[j]);
    let mut flip = vec![false; n];
    let mut seen = vec![false; n];
    let mut queue = std::collections::VecDeque::new();
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        queue.push_back(root);
        while let Some(i) = queue.pop_front() {
            for j in 0..n {
                if seen[j] || kind(state(i, j)) != 1 {
                    continue;
                }
                seen[j] = true;
                flip[j] = flip[i] ^ (state(i, j) == EdgeState::Negative);
                queue.push_back(j);
            }
        }
    }
    CanonicalForm::encode(n, |i, j| {
        let s = state(i, j);
        if flip[i] != flip[j] {
            s.switched()
        } else {
            s
        }
    })
}

/// Canonical form under relabeling and switching: two graphs share a form
/// exactly when one is a switching of a relabeling of the other.
pub fn canonical_form(g: &SignedGraph) -> Result<CanonicalForm> {
    let n = g.n();
    if n > CANON_MAX_VERTICES {
        return Err(Error::SizeGuard {
            what: "canonical form vertices",
            value: n as u128,
            limit: CANON_MAX_VERTICES as u128,
        });
    }
    let refiner = Refiner::new(g);
    let tri = negative_triangles(g);
    let initial: Vec<(usize, usize, usize)> = (0..n)
        .map(|v| {
            let digons = (0..n).filter(|&w| refiner.kinds[v * n + w] == 2).count();
            (g.neighbor_vertices(v).count(), digons, tri[v])
        })
        .collect();
    let colors = refiner.refine(Refiner::rank(&initial));
    let mut canon = Canon {
        g,
        refiner,
        best: None,
    };
    canon.search(colors);
    Ok(canon
        .best
        .unwrap_or_else(|| CanonicalForm::encode(0, |_, _| EdgeState::None)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plain::PlainGraph;

    fn triangle(signs: [Sign; 3]) -> SignedGraph {
        SignedGraph::new(3, [(0, 1, signs[0]), (1, 2, signs[1]), (0, 2, signs[2])]).unwrap()
    }

    #[test]
    fn triangles() {
        let all_neg = canonical_form(&triangle([Sign::Negative; 3])).unwrap();
        let one_neg =
            canonical_form(&triangle([Sign::Positive, Sign::Positive, Sign::Negative])).unwrap();
        let balanced =
            canonical_form(&triangle([Sign::Positive, Sign::Negative, Sign::Negative])).unwrap();
        assert_eq!(all_neg, one_neg);
        assert_ne!(all_neg, balanced);
        assert_eq!(
            balanced,
            canonical_form(&triangle([Sign::Positive; 3])).unwrap()
        );
    }

    #[test]
    fn hex_round_trip() {
        let g = PlainGraph::complete(5).to_all_negative();
        let f = canonical_form(&g).unwrap();
        assert_eq!(CanonicalForm::from_hex(&f.to_hex()).unwrap(), f);
        let back = f.to_graph();
        assert_eq!(canonical_form(&back).unwrap(), f);
        assert!(CanonicalForm::from_hex("05ff").is_err());
        assert!(CanonicalForm::from_hex("zz").is_err());
    }

    #[test]
    fn empty_and_symmetric_graphs_are_fast() {
        assert_eq!(canonical_form(&SignedGraph::empty(0)).unwrap().n(), 0);
        let e = canonical_form(&SignedGraph::empty(40)).unwrap();
        assert_eq!(e.to_graph().edge_count(), 0);
        let k = canonical_form(&PlainGraph::complete(30).to_all_negative()).unwrap();
        assert_eq!(k.to_graph().edge_count(), 435);
    }

    #[test]
    fn switching_equivalence() {
        let g = PlainGraph::cycle(5).to_all_negative();
        let h = g.switch(&[1, 3]).unwrap();
        assert!(switching_equivalent(&g, &h));
        let p = PlainGraph::cycle(5).with_sign(Sign::Positive);
        assert!(!switching_equivalent(&g, &p));
    }
}
