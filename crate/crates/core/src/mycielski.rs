//! Signed generalized Mycielskian and the 13-vertex witness graph.

use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::coloring::balanced_chromatic_number;
use crate::error::{Error, Result};
use crate::graph::{Sign, SignedGraph};

/// Sign rules for the edges the construction adds. Level 0 always copies `G`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Convention {
    /// Cross-level edges inherit `sigma(vw)`; apex edges positive.
    InheritedPositiveApex,
    /// Cross-level edges inherit `sigma(vw)`; apex edges negative.
    InheritedNegativeApex,
    /// Cross-level edges positive; apex edges positive.
    PositiveCross,
}

impl Convention {
    pub const ALL: [Convention; 3] = [
        Convention::InheritedPositiveApex,
        Convention::InheritedNegativeApex,
        Convention::PositiveCross,
    ];

    fn cross(self, sign: Sign) -> Sign {
        match self {
            Convention::PositiveCross => Sign::Positive,
            _ => sign,
        }
    }

    fn apex(self) -> Sign {
        match self {
            Convention::InheritedNegativeApex => Sign::Negative,
            _ => Sign::Positive,
        }
    }
}

/// Generalized Mycielskian with `m` levels under the default convention.
///
/// Vertex `(v, i)` is `i * n + v` and the apex is `n * m`. Level 0 copies
/// `G`; for every edge `vw` and `0 <= i <= m - 2` the edges `(v,i)(w,i+1)`
/// and `(w,i)(v,i+1)` carry `sigma(vw)`; the apex is joined to level `m - 1`.
pub fn generalized_mycielskian(g: &SignedGraph, m: usize) -> Result<SignedGraph> {
    generalized_mycielskian_with(g, m, Convention::InheritedPositiveApex)
}

pub fn generalized_mycielskian_with(
    g: &SignedGraph,
    m: usize,
    convention: Convention,
) -> Result<SignedGraph> {
    if m == 0 {
        return Err(Error::Parameter(
            "the Mycielskian needs at least one level".into(),
        ));
    }
    let n = g.n();
    let at = |v: usize, i: usize| i * n + v;
    let apex = n * m;
    let mut edges = Vec::new();
    for e in g.edges() {
        edges.push((e.u, e.v, e.sign));
        let s = convention.cross(e.sign);
        for i in 0..m - 1 {
            edges.push((at(e.u, i), at(e.v, i + 1), s));
            edges.push((at(e.v, i), at(e.u, i + 1), s));
        }
    }
    for v in 0..n {
        edges.push((at(v, m - 1), apex, convention.apex()));
    }
    SignedGraph::new(n * m + 1, edges)
}

/// The 4-cycle with a single negative edge `30`.
pub fn negative_c4() -> SignedGraph {
    SignedGraph::new(
        4,
        [
            (0, 1, Sign::Positive),
            (1, 2, Sign::Positive),
            (2, 3, Sign::Positive),
            (3, 0, Sign::Negative),
        ],
    )
    .unwrap()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum GateSource {
    Mycielskian(Convention),
    Drawing,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GateRow {
    pub source: GateSource,
    pub n: usize,
    pub edges: usize,
    pub chi_b: Option<usize>,
    pub girth: Option<usize>,
}

impl GateRow {
    fn measure(source: GateSource, g: &SignedGraph) -> GateRow {
        GateRow {
            source,
            n: g.n(),
            edges: g.edge_count(),
            chi_b: balanced_chromatic_number(g, Budget::default()).value(),
            girth: g.negative_girth().length(),
        }
    }

    pub fn passes(&self) -> bool {
        self.n == 13 && self.chi_b == Some(3) && self.girth == Some(4)
    }
}

/// Measures the three-level Mycielskian of the negative 4-cycle under every
/// convention, then the transcribed drawing.
pub fn fig13_gate() -> Vec<GateRow> {
    let mut rows: Vec<GateRow> = Convention::ALL
        .iter()
        .map(|&c| {
            GateRow::measure(
                GateSource::Mycielskian(c),
                &generalized_mycielskian_with(&negative_c4(), 3, c).unwrap(),
            )
        })
        .collect();
    rows.push(GateRow::measure(GateSource::Drawing, &fig13()));
    rows
}

use Sign::{Negative as N, Positive as P};

// Transcribed from the drawing on a 3x3 grid plus four outer points:
// 0 (0,-2), 1 (0,0), 2 (0,2), 3 (2,0), 4 (-2,0), 5 (2,2), 6 (2,-2),
// 7 (-2,2), 8 (-2,-2), 9 (-4,0), 10 (-4,4), 11 (0,4), 12 (4,4).
// Straight dotted segments through grid points are split there; the
// solid curves are negative and join their endpoints directly.
#[rustfmt::skip]
const FIG13_EDGES: [(usize, usize, Sign); 36] = [
    (0, 1, P), (0, 6, P), (0, 8, P), (0, 11, N), (1, 2, P), (1, 3, P), (1, 4, P), (1, 5, P), (1, 6, P),
    (1, 7, P), (1, 8, P), (2, 5, P), (2, 7, P), (2, 11, P), (3, 5, P), (3, 6, P), (3, 9, N), (4, 7, P),
    (4, 8, P), (4, 9, P), (5, 9, N), (5, 11, P), (5, 12, P), (6, 9, N), (6, 10, N), (6, 11, N), (7, 9, P),
    (7, 10, P), (7, 11, P), (8, 9, P), (8, 11, N), (8, 12, N), (9, 10, P), (9, 12, N), (10, 11, P), (11, 12, P),
];

/// The 13-vertex signed graph with balanced chromatic number 3 and negative
/// girth 4, as drawn. None of the [`Convention`]s reproduces it from the
/// negative 4-cycle: each of those graphs has 24 edges and is balanced
/// 2-colorable (see [`fig13_gate`]).
pub fn fig13() -> SignedGraph {
    SignedGraph::new(13, FIG13_EDGES).unwrap()
}
