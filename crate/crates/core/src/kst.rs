//! Obstructions and peel coloring.
//!
//! An `(alpha, beta)`-obstruction is a vertex set `Q` with `|Q| >= alpha`
//! whose radius, measured with distances of the whole graph, is at most
//! `beta`. If every subgraph of radius at most `q r` (with
//! `r = ceil(n^(1/q))`) is balanced `p`-colorable, peeling off a maximum
//! balanced `p`-colorable subgraph `q` times colors the graph with `p q`
//! colors. When the peeling fails, the obstruction recursion produces a
//! concrete subgraph of small radius that is not balanced `p`-colorable.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::coloring::{max_balanced_p_colorable_subgraph, p_colorable, BalancedColoring, Decision};
use crate::distance::{ball, distances_from, radius_with_center};
use crate::error::{Error, Result};
use crate::graph::SignedGraph;

/// Smallest `r` with `r^q >= n`, by monotone integer search.
pub fn q_root(n: u64, q: u32) -> u64 {
    assert!(n >= 1 && q >= 1, "q_root needs n >= 1 and q >= 1");
    let reaches = |r: u64| r.checked_pow(q).is_none_or(|x| x >= n);
    let (mut lo, mut hi) = (1u64, 1u64);
    while !reaches(hi) {
        lo = hi;
        hi *= 2;
    }
    // reaches(hi), and lo is either 1 or fails
    if reaches(lo) {
        return lo;
    }
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if reaches(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    hi
}

/// `r = ceil(n^(1/q))` with its powers `r^0 ..= r^q`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootScale {
    pub n: u64,
    pub q: u32,
    pub r: u64,
    pub powers: Vec<u64>,
}

impl RootScale {
    pub fn new(n: u64, q: u32) -> RootScale {
        let r = q_root(n.max(1), q);
        let powers = (0..=q).map(|l| r.saturating_pow(l)).collect();
        RootScale { n, q, r, powers }
    }

    pub fn power(&self, l: u32) -> u64 {
        self.powers[l as usize]
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Obstruction {
    pub vertices: Vec<usize>,
    pub alpha: u64,
    pub beta: u64,
    pub radius: usize,
    pub center: usize,
}

impl Obstruction {
    /// Re-measures `|Q| >= alpha` and `R_G(Q) <= beta`.
    pub fn validate(&self, g: &SignedGraph) -> Result<bool> {
        let measured = radius_with_center(g, &self.vertices)?;
        Ok(self.vertices.len() as u64 >= self.alpha
            && measured.is_some_and(|(r, _)| r as u64 <= self.beta && r == self.radius))
    }
}

/// A subgraph of small ambient radius that is not balanced `p`-colorable.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypothesisViolation {
    pub vertices: Vec<usize>,
    pub radius: usize,
    pub center: usize,
    /// Radius allowed by the hypothesis, `q r`.
    pub radius_bound: u64,
    pub source: ViolationSource,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ViolationSource {
    /// A layer `P_j` with `j < r` at recursion level `level` held fewer than
    /// `required = r^(level - 1)` vertices; the vertices are the inner layers
    /// `P_0 ∪ ... ∪ P_(j-1)`.
    LayerClaim {
        level: u32,
        layer: usize,
        size: usize,
        required: u64,
    },
    /// The recursion reached a full-size obstruction, i.e. the whole graph.
    WholeGraph,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ObstructionOutcome {
    Obstruction(Obstruction),
    /// Coloring of `W` with at most `level * p` colors; `colors[i]` belongs
    /// to the `i`-th smallest vertex of `W`.
    Colorable {
        vertices: Vec<usize>,
        colors: Vec<usize>,
    },
    Violation(HypothesisViolation),
}

struct Recursion<'a> {
    g: &'a SignedGraph,
    p: usize,
    scale: RootScale,
    budget: Budget,
}

impl Recursion<'_> {
    fn run(&self, w: &[usize], level: u32) -> Result<ObstructionOutcome> {
        if w.is_empty() {
            return Ok(ObstructionOutcome::Colorable {
                vertices: vec![],
                colors: vec![],
            });
        }
        if level == 0 {
            return Ok(ObstructionOutcome::Obstruction(Obstruction {
                vertices: vec![w[0]],
                alpha: 1,
                beta: 0,
                radius: 0,
                center: w[0],
            }));
        }
        let sub = self.g.induced(w)?;
        let h = max_balanced_p_colorable_subgraph(&sub, self.p, self.budget)?;
        if !h.complete {
            return Err(Error::BudgetExhausted { nodes: h.nodes });
        }
        let h_vertices: Vec<usize> = h.vertices.iter().map(|&i| w[i]).collect();
        let mut in_h = vec![false; self.g.n()];
        for &v in &h_vertices {
            in_h[v] = true;
        }
        let rest: Vec<usize> = w.iter().copied().filter(|&v| !in_h[v]).collect();
        match self.run(&rest, level - 1)? {
            ObstructionOutcome::Colorable { vertices, colors } => {
                let offset = (level as usize - 1) * self.p;
                let mut pairs: Vec<(usize, usize)> = vertices.into_iter().zip(colors).collect();
                pairs.extend(
                    h_vertices
                        .iter()
                        .zip(&h.colors)
                        .map(|(&v, &c)| (v, c + offset)),
                );
                pairs.sort_unstable();
                let (vertices, colors) = pairs.into_iter().unzip();
                Ok(ObstructionOutcome::Colorable { vertices, colors })
            }
            v @ ObstructionOutcome::Violation(_) => Ok(v),
            ObstructionOutcome::Obstruction(p0) => self.grow(&p0, &h_vertices, level),
        }
    }

    /// Layers `P_j` of `H` around `P_0`; the union up to `j = r` is the next
    /// obstruction unless some inner layer is too thin.
    fn grow(&self, p0: &Obstruction, h: &[usize], level: u32) -> Result<ObstructionOutcome> {
        let r = self.scale.r as usize;
        let required = self.scale.power(level - 1);
        let dist = distances_from(self.g, &p0.vertices)?;
        let mut layers: Vec<Vec<usize>> = vec![p0.vertices.clone()];
        layers.resize(r + 1, Vec::new());
        for &x in h {
            if let Some(d) = dist[x] {
                if (1..=r).contains(&d) {
                    layers[d].push(x);
                }
            }
        }
        for j in 1..r {
            if (layers[j].len() as u64) < required {
                let mut inner: Vec<usize> = layers[..j].concat();
                inner.sort_unstable();
                let (radius, center) =
                    radius_with_center(self.g, &inner)?.expect("inner layers are connected to P_0");
                return Ok(ObstructionOutcome::Violation(HypothesisViolation {
                    vertices: inner,
                    radius,
                    center,
                    radius_bound: self.scale.q as u64 * self.scale.r,
                    source: ViolationSource::LayerClaim {
                        level,
                        layer: j,
                        size: layers[j].len(),
                        required,
                    },
                }));
            }
        }
        let mut q: Vec<usize> = layers.concat();
        q.sort_unstable();
        let (radius, center) =
            radius_with_center(self.g, &q)?.expect("layers are connected to P_0");
        let obstruction = Obstruction {
            vertices: q,
            alpha: self.scale.power(level),
            beta: level as u64 * self.scale.r,
            radius,
            center,
        };
        debug_assert!(obstruction.validate(self.g).unwrap());
        Ok(ObstructionOutcome::Obstruction(obstruction))
    }
}

/// Runs the obstruction recursion on `w` at level `level` (`0 <= level <= q`).
///
/// Each level removes a maximum balanced `p`-colorable subgraph `H` and
/// recurses on the rest. If some level finds nothing left, the removed
/// subgraphs give a `level * p` coloring of `w`. Otherwise an
/// `(r^level, level * r)`-obstruction is grown layer by layer, or the thin
/// layer that stops it is reported as a [`HypothesisViolation`].
pub fn find_obstruction(
    g: &SignedGraph,
    w: &[usize],
    level: u32,
    p: usize,
    q: u32,
    budget: Budget,
) -> Result<ObstructionOutcome> {
    if p == 0 || q == 0 || level > q {
        return Err(Error::Parameter(format!(
            "need p, q >= 1 and level <= q, got p = {p}, q = {q}, level = {level}"
        )));
    }
    let mut w = w.to_vec();
    w.sort_unstable();
    w.dedup();
    g.membership(&w)?;
    let rec = Recursion {
        g,
        p,
        scale: RootScale::new(g.n() as u64, q),
        budget,
    };
    rec.run(&w, level)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum PeelOutcome {
    Colored(BalancedColoring),
    Failure(HypothesisViolation),
}

/// Colors with at most `p q` colors by peeling a maximum balanced
/// `p`-colorable subgraph in each of `q` rounds. If vertices remain, the
/// obstruction recursion on the whole graph returns the subgraph of radius
/// at most `q r` that breaks the hypothesis.
pub fn peel_color(g: &SignedGraph, p: usize, q: u32, budget: Budget) -> Result<PeelOutcome> {
    if p == 0 || q == 0 {
        return Err(Error::Parameter("p and q must be positive".into()));
    }
    let n = g.n();
    let mut colors = vec![usize::MAX; n];
    let mut residual: Vec<usize> = (0..n).collect();
    for round in 0..q as usize {
        if residual.is_empty() {
            break;
        }
        let sub = g.induced(&residual)?;
        let h = max_balanced_p_colorable_subgraph(&sub, p, budget)?;
        if !h.complete {
            return Err(Error::BudgetExhausted { nodes: h.nodes });
        }
        for (&i, &c) in h.vertices.iter().zip(&h.colors) {
            colors[residual[i]] = round * p + c;
        }
        residual.retain(|&v| colors[v] == usize::MAX);
    }
    if residual.is_empty() {
        let coloring = BalancedColoring::certify(g, colors, p * q as usize)?;
        return Ok(PeelOutcome::Colored(coloring));
    }
    let all: Vec<usize> = (0..n).collect();
    let scale = RootScale::new(n as u64, q);
    match find_obstruction(g, &all, q, p, q, budget)? {
        ObstructionOutcome::Violation(v) => Ok(PeelOutcome::Failure(v)),
        ObstructionOutcome::Obstruction(o) => Ok(PeelOutcome::Failure(HypothesisViolation {
            vertices: o.vertices,
            radius: o.radius,
            center: o.center,
            radius_bound: q as u64 * scale.r,
            source: ViolationSource::WholeGraph,
        })),
        ObstructionOutcome::Colorable { .. } => {
            unreachable!("the recursion repeats the peeling that just failed")
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BallViolation {
    pub center: usize,
    pub vertices: Vec<usize>,
    /// Radius of the ball in the ambient graph.
    pub radius: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BallCheck {
    pub radius_bound: u64,
    pub violation: Option<BallViolation>,
}

impl BallCheck {
    pub fn holds(&self) -> bool {
        self.violation.is_none()
    }
}

/// Checks that every ball of radius `q r` is balanced `p`-colorable. Any
/// subgraph of radius at most `q r` lies in the ball around its center, so
/// this decides the hypothesis of the peel coloring. Among violating balls
/// the one of smallest measured radius (then smallest center) is reported.
pub fn ball_hypothesis_check(
    g: &SignedGraph,
    p: usize,
    q: u32,
    budget: Budget,
) -> Result<BallCheck> {
    if p == 0 || q == 0 {
        return Err(Error::Parameter("p and q must be positive".into()));
    }
    let n = g.n();
    let radius_bound = q as u64 * q_root(n.max(1) as u64, q);
    let verdicts: Vec<Result<Option<BallViolation>>> = (0..n)
        .into_par_iter()
        .map(|v| {
            let members = ball(g, v, radius_bound as usize)?;
            let sub = g.induced(&members)?;
            let fine = if p == 1 {
                sub.is_balanced().is_balanced()
            } else {
                match p_colorable(&sub, p, budget).0 {
                    Decision::Colorable(_) => true,
                    Decision::NotColorable => false,
                    Decision::Unknown => {
                        return Err(Error::BudgetExhausted {
                            nodes: budget.nodes,
                        })
                    }
                }
            };
            if fine {
                return Ok(None);
            }
            let (radius, _) = radius_with_center(g, &members)?.expect("a ball is connected");
            Ok(Some(BallViolation {
                center: v,
                vertices: members,
                radius,
            }))
        })
        .collect();
    let mut violation: Option<BallViolation> = None;
    for v in verdicts {
        if let Some(b) = v? {
            if violation.as_ref().is_none_or(|cur| b.radius < cur.radius) {
                violation = Some(b);
            }
        }
    }
    Ok(BallCheck {
        radius_bound,
        violation,
    })
}
