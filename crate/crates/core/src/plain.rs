use crate::error::{Error, Result};
use crate::graph::{Sign, SignedGraph};

/// A simple undirected graph on `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlainGraph {
    n: usize,
    adj: Vec<Vec<usize>>,
}

impl PlainGraph {
    /// Builds from unordered pairs; repeated pairs collapse.
    pub fn new<I>(n: usize, edges: I) -> Result<PlainGraph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::OutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::Loop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(PlainGraph { n, adj })
    }

    pub fn complete(n: usize) -> PlainGraph {
        let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Self::new(n, pairs).unwrap()
    }

    /// The cycle `0-1-...-(n-1)-0`; requires `n >= 3`.
    pub fn cycle(n: usize) -> PlainGraph {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        Self::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    pub fn path(n: usize) -> PlainGraph {
        Self::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    /// The Grötzsch graph: Mycielskian of the 5-cycle (11 vertices, 20 edges).
    pub fn grotzsch() -> PlainGraph {
        let mut edges: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        for i in 0..5 {
            // shadow vertex 5+i copies the neighborhood of i
            edges.push((5 + i, (i + 1) % 5));
            edges.push((5 + i, (i + 4) % 5));
            edges.push((5 + i, 10));
        }
        Self::new(11, edges).unwrap()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, l)| l.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// `(G, -)`: every edge negative.
    pub fn to_all_negative(&self) -> SignedGraph {
        self.with_sign(Sign::Negative)
    }

    pub fn with_sign(&self, sign: Sign) -> SignedGraph {
        SignedGraph::new(self.n, self.edges().map(|(u, v)| (u, v, sign))).unwrap()
    }
}
