//! Checkable certificate that a balanced 3-chromatic signed graph has a short
//! negative cycle.
//!
//! The certificate instantiates every set of the counting argument: a
//! maximum balanced set `B`, a shortest negative cycle `C` of `G - B`, the
//! distance layers `V_i` around a vertex `v` of `C`, and the sets
//! `U_i = V_0 ∪ ... ∪ V_(i-1) ∪ (B ∩ (V_(i+1) ∪ ...))`. Each inequality of
//! the argument is recorded with both sides so a reader can recheck it.

use serde::{Deserialize, Serialize};

use crate::balance::NegativeCycle;
use crate::bounds::below_sqrt_bound;
use crate::budget::Budget;
use crate::coloring::{is_balanced_set, max_balanced_set, p_colorable, Decision};
use crate::distance::distances_from;
use crate::error::{Error, Result};
use crate::graph::SignedGraph;
use crate::kneser::schrijver_signed;
use crate::mycielski::fig13;
use crate::plain::PlainGraph;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Inequality {
    pub name: String,
    pub lhs: u64,
    pub rhs: u64,
    /// `lhs < rhs` when set, `lhs >= rhs` otherwise.
    pub strict_less: bool,
}

impl Inequality {
    fn at_least(name: impl Into<String>, lhs: u64, rhs: u64) -> Inequality {
        Inequality {
            name: name.into(),
            lhs,
            rhs,
            strict_less: false,
        }
    }

    pub fn holds(&self) -> bool {
        if self.strict_less {
            self.lhs < self.rhs
        } else {
            self.lhs >= self.rhs
        }
    }

    /// Slack on the correct side; negative when the inequality fails.
    pub fn margin(&self) -> i128 {
        if self.strict_less {
            self.rhs as i128 - self.lhs as i128
        } else {
            self.lhs as i128 - self.rhs as i128
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LayerRow {
    pub i: usize,
    pub u: Vec<usize>,
    pub u_balanced: bool,
    pub u_minus_b: usize,
    pub v_cap_b: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate41 {
    pub n: usize,
    /// Negative girth of `G`.
    pub girth: usize,
    pub balanced_set: Vec<usize>,
    pub cycle: NegativeCycle,
    pub v: usize,
    /// `layers[i]` is `V_i`, the vertices at distance `i` from `v`.
    pub layers: Vec<Vec<usize>>,
    /// Vertices with no path to `v`; they count as infinitely far.
    pub unreachable: Vec<usize>,
    /// `t = floor((girth - 2) / 2)`.
    pub t: usize,
    /// Whether `V_i` is balanced, for `0 <= i <= t`.
    pub balanced_layers: Vec<bool>,
    pub rows: Vec<LayerRow>,
    pub inequalities: Vec<Inequality>,
}

impl Certificate41 {
    pub fn holds(&self) -> bool {
        self.balanced_layers.iter().all(|&b| b)
            && self.rows.iter().all(|r| r.u_balanced)
            && self.inequalities.iter().all(Inequality::holds)
    }

    pub fn failures(&self) -> Vec<&Inequality> {
        self.inequalities.iter().filter(|q| !q.holds()).collect()
    }
}

fn require_three_chromatic(g: &SignedGraph, budget: Budget) -> Result<()> {
    match p_colorable(g, 2, budget) {
        (Decision::NotColorable, _) => Ok(()),
        (Decision::Colorable(_), _) => Err(Error::Precondition(
            "balanced chromatic number is at most 2".into(),
        )),
        (Decision::Unknown, nodes) => Err(Error::BudgetExhausted { nodes }),
    }
}

/// Builds the certificate for `g`, which must have `chi_b(g) >= 3`.
///
/// `B` is the lexicographically smallest maximum balanced set, `C` the
/// lexicographically smallest shortest negative cycle of `G - B`, and `v`
/// its smallest vertex. The index range `1 <= i <= t` uses the negative
/// girth of `G`; the length of `C` enters through `n >= |C| + |B|`.
pub fn layer_certificate(g: &SignedGraph, budget: Budget) -> Result<Certificate41> {
    require_three_chromatic(g, budget)?;
    let n = g.n();
    let girth = g
        .negative_girth()
        .length()
        .expect("an unbalanced graph has a negative cycle");

    let b = max_balanced_set(g, budget)?;
    if !b.complete {
        return Err(Error::BudgetExhausted { nodes: b.nodes });
    }
    let mut in_b = vec![false; n];
    for &x in &b.vertices {
        in_b[x] = true;
    }
    let rest: Vec<usize> = (0..n).filter(|&x| !in_b[x]).collect();
    let cycle = g
        .induced(&rest)?
        .negative_girth()
        .witness()
        .map(|c| c.mapped(&rest))
        .ok_or_else(|| Error::Precondition("G - B is balanced, so B is not maximum".into()))?;
    cycle.validate(g)?;
    let v = *cycle.vertices.iter().min().unwrap();

    let dist = distances_from(g, &[v])?;
    let depth = dist.iter().flatten().copied().max().unwrap_or(0);
    let mut layers = vec![Vec::new(); depth + 1];
    let mut unreachable = Vec::new();
    for (x, d) in dist.iter().enumerate() {
        match d {
            Some(d) => layers[*d].push(x),
            None => unreachable.push(x),
        }
    }

    let t = girth.saturating_sub(2) / 2;
    let mut balanced_layers = Vec::with_capacity(t + 1);
    for layer in layers.iter().take(t + 1) {
        balanced_layers.push(is_balanced_set(g, layer)?.is_balanced());
    }

    let b_size = b.vertices.len() as u64;
    let mut inequalities = Vec::new();
    let mut rows = Vec::with_capacity(t);
    let mut layer_sum = 0u64;
    for i in 1..=t {
        let mut u: Vec<usize> = (0..n)
            .filter(|&x| match dist[x] {
                Some(d) => d < i || (d > i && in_b[x]),
                None => in_b[x],
            })
            .collect();
        u.sort_unstable();
        let u_balanced = is_balanced_set(g, &u)?.is_balanced();
        let u_minus_b = u.iter().filter(|&&x| !in_b[x]).count();
        let v_cap_b = layers
            .get(i)
            .map_or(0, |l| l.iter().filter(|&&x| in_b[x]).count());
        let odd = 2 * i as u64 - 1;
        inequalities.push(Inequality::at_least(
            format!("|B| >= |U_{i}|"),
            b_size,
            u.len() as u64,
        ));
        inequalities.push(Inequality::at_least(
            format!("|U_{i} \\ B| >= {odd}"),
            u_minus_b as u64,
            odd,
        ));
        inequalities.push(Inequality::at_least(
            format!("|V_{i} ∩ B| >= |U_{i} \\ B|"),
            v_cap_b as u64,
            u_minus_b as u64,
        ));
        inequalities.push(Inequality::at_least(
            format!("|V_{i} ∩ B| >= {odd}"),
            v_cap_b as u64,
            odd,
        ));
        layer_sum += v_cap_b as u64;
        rows.push(LayerRow {
            i,
            u,
            u_balanced,
            u_minus_b,
            v_cap_b,
        });
    }
    let t2 = (t * t) as u64;
    let c_len = cycle.len() as u64;
    inequalities.push(Inequality::at_least(
        "|B| >= sum |V_i ∩ B|",
        b_size,
        layer_sum,
    ));
    inequalities.push(Inequality::at_least("sum |V_i ∩ B| >= t^2", layer_sum, t2));
    inequalities.push(Inequality::at_least("|C| >= girth", c_len, girth as u64));
    inequalities.push(Inequality::at_least(
        "n >= |C| + |B|",
        n as u64,
        c_len + b_size,
    ));
    inequalities.push(Inequality::at_least(
        "n >= girth + t^2",
        n as u64,
        girth as u64 + t2,
    ));
    inequalities.push(Inequality {
        name: "(girth - 1)^2 < 4 (n - 1)".into(),
        lhs: (girth as u64 - 1).pow(2),
        rhs: 4 * (n as u64 - 1),
        strict_less: true,
    });

    Ok(Certificate41 {
        n,
        girth,
        balanced_set: b.vertices,
        cycle,
        v,
        layers,
        unreachable,
        t,
        balanced_layers,
        rows,
        inequalities,
    })
}

/// `g_-(G) < 2 sqrt(n - 1) + 1`, decided as `(g - 1)^2 < 4 (n - 1)`.
/// Requires `chi_b(g) >= 3`.
pub fn thm41_check(g: &SignedGraph, budget: Budget) -> Result<bool> {
    require_three_chromatic(g, budget)?;
    let girth = g
        .negative_girth()
        .length()
        .expect("an unbalanced graph has a negative cycle");
    Ok(below_sqrt_bound(girth as u64, g.n() as u64))
}

/// Named graphs with `chi_b >= 3` used to exercise the certificate.
pub fn corpus() -> Vec<(String, SignedGraph)> {
    let mut out = Vec::new();
    for n in [5, 6, 7, 8] {
        out.push((
            format!("(K{n},-)"),
            PlainGraph::complete(n).to_all_negative(),
        ));
    }
    out.push(("fig13".into(), fig13()));
    for (n, k) in [(3, 1), (4, 2), (5, 2), (5, 3), (6, 2), (6, 4)] {
        let g = schrijver_signed(n, k)
            .expect("small parameters")
            .reduce()
            .expect("double switching")
            .graph;
        out.push((format!("SS^({n},{k})"), g));
    }
    out.push((
        "(K5,-) + 3 isolated".into(),
        PlainGraph::complete(5).to_all_negative().with_isolated(3),
    ));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::balanced_set_by_enumeration;

    #[test]
    fn negative_k5() {
        let g = PlainGraph::complete(5).to_all_negative();
        let c = layer_certificate(&g, Budget::default()).unwrap();
        assert!(c.holds(), "{:?}", c.failures());
        assert_eq!(c.balanced_set, vec![0, 1]);
        assert_eq!((c.girth, c.cycle.len(), c.t), (3, 3, 0));
        assert_eq!(c.cycle.vertices, vec![2, 3, 4]);
        assert_eq!(c.v, 2);
        let last = c
            .inequalities
            .iter()
            .find(|q| q.name == "n >= girth + t^2")
            .unwrap();
        assert_eq!((last.lhs, last.rhs), (5, 3));
        assert!(thm41_check(&g, Budget::default()).unwrap());
    }

    #[test]
    fn reduced_schrijver_6_4() {
        let g = schrijver_signed(6, 4).unwrap().reduce().unwrap().graph;
        let c = layer_certificate(&g, Budget::default()).unwrap();
        assert!(c.holds(), "{:?}", c.failures());
        // {1,-2,3,-4}, {1,-4,5,-6}, {2,-3,5,-6} is a negative triangle
        assert_eq!((c.n, c.girth, c.t), (15, 3, 0));
        assert!(c.rows.is_empty());
        assert!(thm41_check(&g, Budget::default()).unwrap());
    }

    #[test]
    fn rows_match_enumeration() {
        let g = fig13();
        let c = layer_certificate(&g, Budget::default()).unwrap();
        assert!(c.holds(), "{:?}", c.failures());
        assert_eq!((c.n, c.girth, c.t), (13, 4, 1));
        for row in &c.rows {
            assert!(balanced_set_by_enumeration(&g, &row.u));
        }
    }

    #[test]
    fn two_colorable_is_rejected() {
        let g = PlainGraph::complete(4).to_all_negative();
        assert!(matches!(
            layer_certificate(&g, Budget::default()),
            Err(Error::Precondition(_))
        ));
        assert!(thm41_check(&g, Budget::default()).is_err());
    }

    #[test]
    fn deterministic() {
        let g = PlainGraph::complete(7).to_all_negative();
        let a = layer_certificate(&g, Budget::default()).unwrap();
        let b = layer_certificate(&g, Budget::default()).unwrap();
        assert_eq!(a, b);
        assert!(a.holds());
    }
}
