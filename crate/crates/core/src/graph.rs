use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::plain::PlainGraph;

/// Edge sign. `Positive` orders before `Negative`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Positive,
    #[serde(rename = "-")]
    Negative,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }

    pub fn is_negative(self) -> bool {
        self == Sign::Negative
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Positive => '+',
            Sign::Negative => '-',
        }
    }

    pub fn from_char(c: char) -> Option<Sign> {
        match c {
            '+' => Some(Sign::Positive),
            '-' => Some(Sign::Negative),
            _ => None,
        }
    }

    /// Product of a sequence of signs; the empty product is positive.
    pub fn product<I: IntoIterator<Item = Sign>>(signs: I) -> Sign {
        signs.into_iter().fold(Sign::Positive, |acc, s| acc * s)
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// A normalized edge with `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub sign: Sign,
}

/// What a vertex pair carries.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeState {
    None,
    Positive,
    Negative,
    /// Both a positive and a negative edge.
    Digon,
}

impl EdgeState {
    pub const ALL: [EdgeState; 4] = [
        EdgeState::None,
        EdgeState::Positive,
        EdgeState::Negative,
        EdgeState::Digon,
    ];

    pub fn signs(self) -> &'static [Sign] {
        match self {
            EdgeState::None => &[],
            EdgeState::Positive => &[Sign::Positive],
            EdgeState::Negative => &[Sign::Negative],
            EdgeState::Digon => &[Sign::Positive, Sign::Negative],
        }
    }

    pub fn code(self) -> u8 {
        match self {
            EdgeState::None => 0,
            EdgeState::Positive => 1,
            EdgeState::Negative => 2,
            EdgeState::Digon => 3,
        }
    }

    pub fn from_code(c: u8) -> Option<EdgeState> {
        Some(match c {
            0 => EdgeState::None,
            1 => EdgeState::Positive,
            2 => EdgeState::Negative,
            3 => EdgeState::Digon,
            _ => return None,
        })
    }

    pub fn switched(self) -> EdgeState {
        match self {
            EdgeState::Positive => EdgeState::Negative,
            EdgeState::Negative => EdgeState::Positive,
            s => s,
        }
    }
}

/// A loopless signed graph on vertices `0..n` carrying at most one edge of
/// each sign per vertex pair.
///
/// Values are immutable after construction; every transformation returns a
/// new graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "GraphRepr", try_from = "GraphRepr")]
pub struct SignedGraph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<(usize, Sign)>>,
    labels: Option<Vec<String>>,
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    n: usize,
    edges: Vec<Edge>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
}

impl From<SignedGraph> for GraphRepr {
    fn from(g: SignedGraph) -> GraphRepr {
        GraphRepr {
            n: g.n,
            edges: g.edges,
            labels: g.labels,
        }
    }
}

impl TryFrom<GraphRepr> for SignedGraph {
    type Error = Error;

    fn try_from(r: GraphRepr) -> Result<SignedGraph> {
        let g = SignedGraph::new(r.n, r.edges.into_iter().map(|e| (e.u, e.v, e.sign)))?;
        match r.labels {
            Some(labels) => g.with_labels(labels),
            None => Ok(g),
        }
    }
}

impl SignedGraph {
    /// Builds a graph from `(u, v, sign)` triples in any endpoint order.
    ///
    /// Loops, out-of-range endpoints and repeated signed edges are rejected.
    pub fn new<I>(n: usize, edges: I) -> Result<SignedGraph>
    where
        I: IntoIterator<Item = (usize, usize, Sign)>,
    {
        let mut list = Vec::new();
        for (a, b, sign) in edges {
            for x in [a, b] {
                if x >= n {
                    return Err(Error::OutOfRange { vertex: x, n });
                }
            }
            if a == b {
                return Err(Error::Loop(a));
            }
            let (u, v) = if a < b { (a, b) } else { (b, a) };
            list.push(Edge { u, v, sign });
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge {
                u: w[0].u,
                v: w[0].v,
                sign: w[0].sign.as_char(),
            });
        }
        Ok(Self::from_sorted(n, list, None))
    }

    pub fn empty(n: usize) -> SignedGraph {
        Self::from_sorted(n, Vec::new(), None)
    }

    /// Builds from a pair-state matrix indexed by `u < v`.
    pub fn from_states(n: usize, state: impl Fn(usize, usize) -> EdgeState) -> SignedGraph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                for &sign in state(u, v).signs() {
                    edges.push(Edge { u, v, sign });
                }
            }
        }
        Self::from_sorted(n, edges, None)
    }

    fn from_sorted(n: usize, edges: Vec<Edge>, labels: Option<Vec<String>>) -> SignedGraph {
        let mut adj = vec![Vec::new(); n];
        for e in &edges {
            adj[e.u].push((e.v, e.sign));
            adj[e.v].push((e.u, e.sign));
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        SignedGraph {
            n,
            edges,
            adj,
            labels,
        }
    }

    /// Attaches one label per vertex.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<SignedGraph> {
        if labels.len() != self.n {
            return Err(Error::Parameter(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.n
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn without_labels(mut self) -> SignedGraph {
        self.labels = None;
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges sorted by `(u, v, sign)`.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v].as_str())
    }

    /// Signed neighbors sorted by `(vertex, sign)`; a digon neighbor appears twice.
    pub fn neighbors(&self, v: usize) -> &[(usize, Sign)] {
        &self.adj[v]
    }

    /// Distinct neighbors in the underlying graph, ascending.
    pub fn neighbor_vertices(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let list = &self.adj[v];
        list.iter()
            .enumerate()
            .filter(move |&(i, &(w, _))| i == 0 || list[i - 1].0 != w)
            .map(|(_, &(w, _))| w)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbor_vertices(v).count()
    }

    pub fn has_edge(&self, u: usize, v: usize, sign: Sign) -> bool {
        u < self.n && self.adj[u].binary_search(&(v, sign)).is_ok()
    }

    pub fn edge_state(&self, u: usize, v: usize) -> EdgeState {
        match (
            self.has_edge(u, v, Sign::Positive),
            self.has_edge(u, v, Sign::Negative),
        ) {
            (false, false) => EdgeState::None,
            (true, false) => EdgeState::Positive,
            (false, true) => EdgeState::Negative,
            (true, true) => EdgeState::Digon,
        }
    }

    pub fn is_all_positive(&self) -> bool {
        self.edges.iter().all(|e| e.sign == Sign::Positive)
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::OutOfRange {
                vertex: v,
                n: self.n,
            })
        } else {
            Ok(())
        }
    }

    pub(crate) fn membership(&self, set: &[usize]) -> Result<Vec<bool>> {
        let mut mark = vec![false; self.n];
        for &v in set {
            self.check_vertex(v)?;
            mark[v] = true;
        }
        Ok(mark)
    }

    /// Switches every vertex of `set`: an edge changes sign iff exactly one
    /// endpoint lies in `set`.
    pub fn switch(&self, set: &[usize]) -> Result<SignedGraph> {
        let mark = self.membership(set)?;
        Ok(self.switch_by(&mark))
    }

    pub(crate) fn switch_by(&self, flipped: &[bool]) -> SignedGraph {
        let mut edges: Vec<Edge> = self
            .edges
            .iter()
            .map(|e| {
                let sign = if flipped[e.u] != flipped[e.v] {
                    e.sign.flip()
                } else {
                    e.sign
                };
                Edge { sign, ..*e }
            })
            .collect();
        edges.sort_unstable();
        Self::from_sorted(self.n, edges, self.labels.clone())
    }

    /// Subgraph induced by `vertices`; new vertex `i` is `vertices[i]`
    /// after sorting and deduplication. Both edges of a digon are kept.
    pub fn induced(&self, vertices: &[usize]) -> Result<SignedGraph> {
        let mut keep: Vec<usize> = vertices.to_vec();
        keep.sort_unstable();
        keep.dedup();
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            self.check_vertex(v)?;
            index[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| index[e.u] != usize::MAX && index[e.v] != usize::MAX)
            .map(|e| Edge {
                u: index[e.u],
                v: index[e.v],
                sign: e.sign,
            })
            .collect();
        let labels = self
            .labels
            .as_ref()
            .map(|l| keep.iter().map(|&v| l[v].clone()).collect());
        Ok(Self::from_sorted(keep.len(), edges, labels))
    }

    /// Renames vertex `v` to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<SignedGraph> {
        let mut seen = vec![false; self.n];
        if perm.len() != self.n {
            return Err(Error::Parameter("permutation length mismatch".into()));
        }
        for &p in perm {
            self.check_vertex(p)?;
            if std::mem::replace(&mut seen[p], true) {
                return Err(Error::Parameter("not a permutation".into()));
            }
        }
        let mut edges: Vec<Edge> = self
            .edges
            .iter()
            .map(|e| {
                let (a, b) = (perm[e.u], perm[e.v]);
                Edge {
                    u: a.min(b),
                    v: a.max(b),
                    sign: e.sign,
                }
            })
            .collect();
        edges.sort_unstable();
        let labels = self.labels.as_ref().map(|l| {
            let mut out = vec![String::new(); self.n];
            for (v, lab) in l.iter().enumerate() {
                out[perm[v]] = lab.clone();
            }
            out
        });
        Ok(Self::from_sorted(self.n, edges, labels))
    }

    /// Appends `extra` isolated vertices.
    pub fn with_isolated(&self, extra: usize) -> SignedGraph {
        let labels = self.labels.as_ref().map(|l| {
            let mut l = l.clone();
            l.extend((0..extra).map(|i| format!("iso{i}")));
            l
        });
        Self::from_sorted(self.n + extra, self.edges.clone(), labels)
    }

    /// The plain graph formed by the negative edges, on the same vertex set.
    pub fn negative_subgraph(&self) -> PlainGraph {
        PlainGraph::new(
            self.n,
            self.edges
                .iter()
                .filter(|e| e.sign.is_negative())
                .map(|e| (e.u, e.v)),
        )
        .expect("edges of a valid graph")
    }

    /// The underlying plain graph (digons collapse to one edge).
    pub fn underlying(&self) -> PlainGraph {
        let mut pairs: Vec<(usize, usize)> = self.edges.iter().map(|e| (e.u, e.v)).collect();
        pairs.dedup();
        PlainGraph::new(self.n, pairs).expect("edges of a valid graph")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Sign::*;

    #[test]
    fn positive_triangle() {
        let g =
            SignedGraph::new(3, [(0, 1, Positive), (1, 2, Positive), (0, 2, Positive)]).unwrap();
        assert_eq!(g.edge_count(), 3);
        assert!(g.is_all_positive());
    }

    #[test]
    fn digon_accepted_and_loops_rejected() {
        let g = SignedGraph::new(2, [(0, 1, Positive), (1, 0, Negative)]).unwrap();
        assert_eq!(g.edge_state(0, 1), EdgeState::Digon);
        assert_eq!(g.neighbor_vertices(0).collect::<Vec<_>>(), vec![1]);
        assert_eq!(SignedGraph::new(2, [(0, 0, Positive)]), Err(Error::Loop(0)));
        assert!(matches!(
            SignedGraph::new(2, [(0, 2, Positive)]),
            Err(Error::OutOfRange { vertex: 2, .. })
        ));
        assert!(matches!(
            SignedGraph::new(2, [(0, 1, Positive), (1, 0, Positive)]),
            Err(Error::DuplicateEdge { .. })
        ));
    }

    #[test]
    fn switching_examples() {
        let g =
            SignedGraph::new(3, [(0, 1, Negative), (1, 2, Negative), (0, 2, Negative)]).unwrap();
        let s = g.switch(&[0]).unwrap();
        assert_eq!(s.edge_state(0, 1), EdgeState::Positive);
        assert_eq!(s.edge_state(0, 2), EdgeState::Positive);
        assert_eq!(s.edge_state(1, 2), EdgeState::Negative);
        assert_eq!(g.switch(&[]).unwrap(), g);
        assert_eq!(g.switch(&[0, 1, 2]).unwrap(), g);
        assert!(g.switch(&[3]).is_err());
        let d = SignedGraph::new(2, [(0, 1, Positive), (0, 1, Negative)]).unwrap();
        assert_eq!(d.switch(&[1]).unwrap(), d);
    }

    #[test]
    fn induced_and_negative_subgraph() {
        let d = SignedGraph::new(2, [(0, 1, Positive), (0, 1, Negative)]).unwrap();
        let one = d.induced(&[0]).unwrap();
        assert_eq!((one.n(), one.edge_count()), (1, 0));
        assert_eq!(d.induced(&[0, 1]).unwrap(), d);

        let k5 = PlainGraph::complete(5).to_all_negative();
        assert_eq!(k5.negative_subgraph(), PlainGraph::complete(5));
        let k3 = PlainGraph::complete(3).to_all_negative();
        assert!(k3.edges().iter().all(|e| e.sign == Negative));
        assert_eq!(k3.edge_count(), 3);
    }

    #[test]
    fn relabel_roundtrip() {
        let g =
            SignedGraph::new(4, [(0, 1, Negative), (1, 2, Positive), (2, 3, Negative)]).unwrap();
        let h = g.relabel(&[3, 2, 1, 0]).unwrap();
        assert_eq!(h.edge_state(3, 2), EdgeState::Negative);
        assert_eq!(h.relabel(&[3, 2, 1, 0]).unwrap(), g);
        assert!(g.relabel(&[0, 0, 1, 2]).is_err());
    }
}
