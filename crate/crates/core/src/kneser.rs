//! Kneser and Schrijver signed graphs.
//!
//! Vertices are signed `k`-subsets of `[n]`: `k` nonzero integers in
//! `-n..=n` with pairwise distinct absolute values. `A` and `B` are joined by
//! a positive edge when `A ∩ (-B)` is empty and by a negative edge when
//! `A ∩ B` is empty, so a pair may carry both (a digon).

use std::collections::HashMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::balance::NegativeCycle;
use crate::bounds::binomial;
use crate::error::{Error, Result};
use crate::graph::{Edge, Sign, SignedGraph};

/// Default cap on generated vertex counts.
pub const DEFAULT_VERTEX_CAP: u128 = 1_000_000;

/// A signed `k`-subset of `[n]`, stored as sign masks over `1..=n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SignedSubset {
    n: u32,
    pos: u64,
    neg: u64,
}

impl SignedSubset {
    /// From signed elements; rejects zero, out-of-range values and `i, -i` pairs.
    pub fn new(n: u32, elements: &[i32]) -> Result<SignedSubset> {
        if n > 63 {
            return Err(Error::Parameter(format!("ground set [{n}] too large")));
        }
        let (mut pos, mut neg) = (0u64, 0u64);
        for &x in elements {
            let a = x.unsigned_abs();
            if a == 0 || a > n {
                return Err(Error::Parameter(format!("element {x} outside [±{n}]")));
            }
            let bit = 1u64 << (a - 1);
            if (pos | neg) & bit != 0 {
                return Err(Error::Parameter(format!("absolute value {a} repeated")));
            }
            if x > 0 {
                pos |= bit;
            } else {
                neg |= bit;
            }
        }
        Ok(SignedSubset { n, pos, neg })
    }

    pub fn ground(&self) -> u32 {
        self.n
    }

    pub fn len(&self) -> usize {
        (self.pos | self.neg).count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.pos | self.neg == 0
    }

    /// Elements sorted by absolute value.
    pub fn elements(&self) -> Vec<i32> {
        (1..=self.n as i32)
            .filter_map(|a| {
                let bit = 1u64 << (a - 1);
                if self.pos & bit != 0 {
                    Some(a)
                } else if self.neg & bit != 0 {
                    Some(-a)
                } else {
                    None
                }
            })
            .collect()
    }

    pub fn negated(&self) -> SignedSubset {
        SignedSubset {
            n: self.n,
            pos: self.neg,
            neg: self.pos,
        }
    }

    /// `A ∩ (-B) = ∅`
    pub fn positive_compatible(&self, other: &SignedSubset) -> bool {
        self.pos & other.neg == 0 && self.neg & other.pos == 0
    }

    /// `A ∩ B = ∅`
    pub fn disjoint(&self, other: &SignedSubset) -> bool {
        self.pos & other.pos == 0 && self.neg & other.neg == 0
    }

    /// Signs alternate when elements are read by increasing absolute value.
    pub fn is_alternating(&self) -> bool {
        let e = self.elements();
        e.windows(2).all(|w| (w[0] > 0) != (w[1] > 0))
    }

    /// Whether the element of smallest absolute value is positive.
    pub fn leads_positive(&self) -> bool {
        self.elements().first().is_none_or(|&x| x > 0)
    }

    /// Parses `1,-2,3` against the ground set `[n]`.
    pub fn parse(s: &str, n: u32) -> Result<SignedSubset> {
        let elements = parse_elements(s)?;
        SignedSubset::new(n, &elements)
    }
}

fn parse_elements(s: &str) -> Result<Vec<i32>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(vec![]);
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<i32>()
                .map_err(|e| Error::Parameter(format!("bad element {t:?}: {e}")))
        })
        .collect()
}

impl fmt::Display for SignedSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.elements().iter().map(|x| x.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// A Kneser-type signed graph with its vertex labeling.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KneserLabeling {
    pub graph: SignedGraph,
    pub subsets: Vec<SignedSubset>,
}

impl KneserLabeling {
    /// Builds the graph on `subsets` by the signed Kneser edge rule.
    pub fn from_subsets(subsets: Vec<SignedSubset>) -> KneserLabeling {
        let m = subsets.len();
        let edges: Vec<Edge> = (0..m)
            .into_par_iter()
            .flat_map_iter(|i| {
                let subsets = &subsets;
                (i + 1..m).flat_map(move |j| {
                    let (a, b) = (&subsets[i], &subsets[j]);
                    let pos = a.positive_compatible(b).then_some(Edge {
                        u: i,
                        v: j,
                        sign: Sign::Positive,
                    });
                    let neg = a.disjoint(b).then_some(Edge {
                        u: i,
                        v: j,
                        sign: Sign::Negative,
                    });
                    pos.into_iter().chain(neg)
                })
            })
            .collect();
        let labels = subsets.iter().map(|s| s.to_string()).collect();
        let graph = SignedGraph::new(m, edges.into_iter().map(|e| (e.u, e.v, e.sign)))
            .expect("generated edges are valid")
            .with_labels(labels)
            .expect("one label per vertex");
        KneserLabeling { graph, subsets }
    }

    pub fn index_of(&self, s: &SignedSubset) -> Option<usize> {
        self.subsets.iter().position(|t| t == s)
    }

    /// Deletes one vertex from each pair `{A, -A}`, keeping the member
    /// whose smallest-absolute-value element is positive. Each pair is
    /// checked to be an antitwin pair first.
    pub fn reduce(&self) -> Result<KneserLabeling> {
        let index: HashMap<SignedSubset, usize> = self
            .subsets
            .iter()
            .enumerate()
            .map(|(i, s)| (*s, i))
            .collect();
        let mut keep = Vec::new();
        for (i, s) in self.subsets.iter().enumerate() {
            let j = *index
                .get(&s.negated())
                .ok_or_else(|| Error::Precondition(format!("vertex {s} has no antitwin -{s}")))?;
            if !are_antitwins(&self.graph, i, j) {
                return Err(Error::Precondition(format!(
                    "{s} and its negation are not antitwins"
                )));
            }
            if s.leads_positive() {
                keep.push(i);
            }
        }
        Ok(self.restrict(&keep))
    }

    /// Induced labeled subgraph on `keep`, renumbered in ascending order.
    pub fn restrict(&self, keep: &[usize]) -> KneserLabeling {
        let mut keep = keep.to_vec();
        keep.sort_unstable();
        keep.dedup();
        KneserLabeling {
            graph: self.graph.induced(&keep).expect("indices in range"),
            subsets: keep.iter().map(|&i| self.subsets[i]).collect(),
        }
    }
}

/// `k`-subsets of `1..=n` as bitmasks, in lexicographic order of their
/// sorted element lists.
fn combinations(n: u32, k: u32) -> Vec<u64> {
    fn go(start: u32, n: u32, left: u32, acc: u64, out: &mut Vec<u64>) {
        if left == 0 {
            out.push(acc);
            return;
        }
        for a in start..=n - left + 1 {
            go(a + 1, n, left - 1, acc | 1 << (a - 1), out);
        }
    }
    let mut out = Vec::new();
    go(1, n, k, 0, &mut out);
    out
}

/// Splits `support` into signed subsets by a sign pattern whose bit
/// `k - 1 - j` says whether the `j`-th smallest element is negative.
fn apply_pattern(n: u32, support: u64, k: u32, pattern: u64) -> SignedSubset {
    let (mut pos, mut neg) = (0, 0);
    let mut j = 0;
    for a in 0..n {
        let bit = 1u64 << a;
        if support & bit != 0 {
            if pattern >> (k - 1 - j) & 1 == 1 {
                neg |= bit;
            } else {
                pos |= bit;
            }
            j += 1;
        }
    }
    SignedSubset { n, pos, neg }
}

fn check_params(n: u32, k: u32) -> Result<()> {
    if k > n || n > 63 {
        return Err(Error::Parameter(format!(
            "need 0 <= k <= n <= 63, got n = {n}, k = {k}"
        )));
    }
    Ok(())
}

/// Every signed `k`-subset of `[n]`: supports in lexicographic order, and
/// for each support the sign patterns with `+` before `-` from the smallest
/// element on.
pub fn signed_subsets(n: u32, k: u32) -> Result<Vec<SignedSubset>> {
    check_params(n, k)?;
    let count = binomial(n as u64, k as u64)
        .unwrap_or(u128::MAX)
        .saturating_mul(1u128 << k);
    guard(count, DEFAULT_VERTEX_CAP)?;
    Ok(combinations(n, k)
        .into_iter()
        .flat_map(|support| (0..1u64 << k).map(move |p| apply_pattern(n, support, k, p)))
        .collect())
}

/// The alternating signed `k`-subsets, in the order of [`signed_subsets`].
pub fn alternating_subsets(n: u32, k: u32) -> Result<Vec<SignedSubset>> {
    check_params(n, k)?;
    if k == 0 {
        return Ok(vec![SignedSubset { n, pos: 0, neg: 0 }]);
    }
    let count = binomial(n as u64, k as u64)
        .unwrap_or(u128::MAX)
        .saturating_mul(2);
    guard(count, DEFAULT_VERTEX_CAP)?;
    // 0101... starting with +, and its complement starting with -
    let plus_first: u64 = (0..k)
        .filter(|j| j % 2 == 1)
        .map(|j| 1u64 << (k - 1 - j))
        .sum();
    let minus_first = !plus_first & ((1u64 << k) - 1);
    Ok(combinations(n, k)
        .into_iter()
        .flat_map(|s| {
            [
                apply_pattern(n, s, k, plus_first),
                apply_pattern(n, s, k, minus_first),
            ]
        })
        .collect())
}

fn guard(count: u128, cap: u128) -> Result<()> {
    if count > cap {
        Err(Error::SizeGuard {
            what: "vertices",
            value: count,
            limit: cap,
        })
    } else {
        Ok(())
    }
}

pub fn kneser_signed(n: u32, k: u32) -> Result<KneserLabeling> {
    if k == 0 {
        return Err(Error::Parameter("k must be at least 1".into()));
    }
    Ok(KneserLabeling::from_subsets(signed_subsets(n, k)?))
}

pub fn schrijver_signed(n: u32, k: u32) -> Result<KneserLabeling> {
    if k == 0 {
        return Err(Error::Parameter("k must be at least 1".into()));
    }
    Ok(KneserLabeling::from_subsets(alternating_subsets(n, k)?))
}

/// Neighborhoods agree outside the pair and every common neighbor sees
/// opposite signs (a digon stays a digon).
pub fn are_antitwins(g: &SignedGraph, x: usize, y: usize) -> bool {
    if x == y {
        return false;
    }
    let nx: Vec<usize> = g.neighbor_vertices(x).filter(|&v| v != y).collect();
    let ny: Vec<usize> = g.neighbor_vertices(y).filter(|&v| v != x).collect();
    nx == ny
        && nx
            .iter()
            .all(|&v| g.edge_state(x, v) == g.edge_state(y, v).switched())
}

/// All antitwin pairs `(x, y)` with `x < y`, ascending.
pub fn antitwin_pairs(g: &SignedGraph) -> Vec<(usize, usize)> {
    // adjacent antitwins share closed neighborhoods, non-adjacent ones open
    let mut groups: HashMap<(bool, Vec<usize>), Vec<usize>> = HashMap::new();
    for v in 0..g.n() {
        let open: Vec<usize> = g.neighbor_vertices(v).collect();
        let mut closed = open.clone();
        closed.push(v);
        closed.sort_unstable();
        groups.entry((false, open)).or_default().push(v);
        groups.entry((true, closed)).or_default().push(v);
    }
    let mut pairs = Vec::new();
    for members in groups.values() {
        for (i, &x) in members.iter().enumerate() {
            for &y in &members[i + 1..] {
                if are_antitwins(g, x, y) {
                    pairs.push((x.min(y), x.max(y)));
                }
            }
        }
    }
    pairs.sort_unstable();
    pairs.dedup();
    pairs
}

/// Reduction of a double switching graph: each vertex must have exactly one
/// antitwin, and one vertex of each pair is deleted. Labels that parse as
/// signed subsets keep the member led by a positive element; otherwise the
/// member whose signs toward the common neighbors are lexicographically
/// smaller (`+` before `-`) is kept.
pub fn reduce_double_switching(g: &SignedGraph) -> Result<SignedGraph> {
    let pairs = antitwin_pairs(g);
    let mut partner = vec![None; g.n()];
    for &(x, y) in &pairs {
        for (a, b) in [(x, y), (y, x)] {
            if partner[a].replace(b).is_some() {
                return Err(Error::Precondition(format!(
                    "vertex {a} has more than one antitwin"
                )));
            }
        }
    }
    if let Some(v) = partner.iter().position(Option::is_none) {
        return Err(Error::Precondition(format!("vertex {v} has no antitwin")));
    }
    let label_subsets: Option<Vec<Vec<i32>>> = g
        .labels()
        .and_then(|ls| ls.iter().map(|l| parse_elements(l).ok()).collect());
    let mut keep = Vec::new();
    for &(x, y) in &pairs {
        let keep_x = match &label_subsets {
            Some(ls) => {
                let lead = |v: usize| {
                    ls[v]
                        .iter()
                        .min_by_key(|e| e.unsigned_abs())
                        .is_none_or(|&e| e > 0)
                };
                if lead(x) != lead(y) {
                    lead(x)
                } else {
                    signature(g, x, y) <= signature(g, y, x)
                }
            }
            None => signature(g, x, y) <= signature(g, y, x),
        };
        keep.push(if keep_x { x } else { y });
    }
    keep.sort_unstable();
    g.induced(&keep)
}

fn signature(g: &SignedGraph, x: usize, other: usize) -> Vec<u8> {
    g.neighbor_vertices(x)
        .filter(|&v| v != other)
        .map(|v| g.edge_state(x, v).code())
        .collect()
}

/// Negative girth of a signed graph as a value, with an explicit infinity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GirthValue {
    Finite(usize),
    Infinite,
}

impl GirthValue {
    pub fn of(length: Option<usize>) -> GirthValue {
        length.map_or(GirthValue::Infinite, GirthValue::Finite)
    }
}

impl fmt::Display for GirthValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GirthValue::Finite(l) => write!(f, "{l}"),
            GirthValue::Infinite => write!(f, "inf"),
        }
    }
}

/// Negative girth of `KS(n, k)` in closed form: `1 + ceil(k / (n - k))`
/// for `n > k` and infinite for `n = k`.
pub fn kneser_girth_formula(n: u32, k: u32) -> Result<GirthValue> {
    if k == 0 || k > n {
        return Err(Error::Parameter(format!(
            "need 1 <= k <= n, got n = {n}, k = {k}"
        )));
    }
    if n == k {
        return Ok(GirthValue::Infinite);
    }
    let d = (n - k) as usize;
    Ok(GirthValue::Finite(1 + (k as usize).div_ceil(d)))
}

/// An inconsistent cycle in `KS(n, k)` given by its subsets: consecutive
/// subsets are joined positively and the closing pair negatively.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftCycle {
    pub subsets: Vec<SignedSubset>,
}

impl ShiftCycle {
    pub fn len(&self) -> usize {
        self.subsets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subsets.is_empty()
    }

    pub fn signs(&self) -> Vec<Sign> {
        let l = self.subsets.len();
        (0..l)
            .map(|i| {
                if i + 1 == l {
                    Sign::Negative
                } else {
                    Sign::Positive
                }
            })
            .collect()
    }

    /// The cycle as vertex ids of `host`, validated there.
    pub fn locate(&self, host: &KneserLabeling) -> Result<NegativeCycle> {
        let vertices = self
            .subsets
            .iter()
            .map(|s| {
                host.index_of(s)
                    .ok_or_else(|| Error::InvalidCycle(format!("{s} is not a vertex")))
            })
            .collect::<Result<Vec<_>>>()?;
        let cycle = NegativeCycle {
            vertices,
            signs: self.signs(),
        };
        cycle.validate(&host.graph)?;
        Ok(cycle)
    }
}

/// Lays `1..n, -1..-n` on a circle of `2n` positions, starts from `[k]` and
/// shifts the window by `n - k` until `1 + ceil(k / (n - k))` subsets are
/// collected.
pub fn shift_cycle_witness(n: u32, k: u32) -> Result<ShiftCycle> {
    if k == 0 || k >= n || n > 63 {
        return Err(Error::Parameter(format!(
            "need 1 <= k < n <= 63, got n = {n}, k = {k}"
        )));
    }
    let length = match kneser_girth_formula(n, k)? {
        GirthValue::Finite(l) => l,
        GirthValue::Infinite => unreachable!(),
    };
    let position = |p: u32| -> i32 {
        let p = p % (2 * n);
        if p < n {
            p as i32 + 1
        } else {
            -((p - n) as i32 + 1)
        }
    };
    let subsets = (0..length as u32)
        .map(|i| {
            let start = i * (n - k);
            let elems: Vec<i32> = (start..start + k).map(position).collect();
            SignedSubset::new(n, &elems)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ShiftCycle { subsets })
}

/// The lower-bound construction for `chi_b >= p` with large negative girth
/// on exactly `n` vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LowerBoundWitness {
    pub p: u32,
    pub n: usize,
    pub k: u32,
    /// Vertices of the reduced Schrijver core; the rest are isolated.
    pub core_vertices: usize,
    pub graph: SignedGraph,
    pub predicted_chi_b: usize,
    /// `1 + ceil(k / (p - 1))`
    pub predicted_girth: usize,
}

/// Largest `k` with `C(p + k - 1, k) <= n`, then the reduced
/// `SS(p + k - 1, k)` padded with isolated vertices up to `n`.
pub fn lower_bound_witness(p: u32, n: usize) -> Result<LowerBoundWitness> {
    if p < 2 || n < p as usize {
        return Err(Error::Parameter(format!(
            "need p >= 2 and n >= p, got p = {p}, n = {n}"
        )));
    }
    let fits = |k: u32| binomial((p + k - 1) as u64, k as u64).is_some_and(|c| c <= n as u128);
    let mut k = 1;
    while fits(k + 1) {
        k += 1;
    }
    let core = schrijver_signed(p + k - 1, k)?.reduce()?;
    let core_vertices = core.graph.n();
    debug_assert_eq!(
        core_vertices as u128,
        binomial((p + k - 1) as u64, k as u64).unwrap()
    );
    let graph = core.graph.with_isolated(n - core_vertices);
    Ok(LowerBoundWitness {
        p,
        n,
        k,
        core_vertices,
        graph,
        predicted_chi_b: p as usize,
        predicted_girth: 1 + (k as usize).div_ceil(p as usize - 1),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn strs(v: &[SignedSubset]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn subset_enumeration() {
        assert_eq!(
            strs(&signed_subsets(2, 1).unwrap()),
            vec!["1", "-1", "2", "-2"]
        );
        assert_eq!(signed_subsets(6, 4).unwrap().len(), 240);
        assert_eq!(
            signed_subsets(6, 4).unwrap().len() as u128,
            binomial(6, 4).unwrap() * 16
        );
        assert_eq!(signed_subsets(3, 3).unwrap().len(), 8);
        assert!(signed_subsets(2, 3).is_err());
        assert_eq!(
            strs(&signed_subsets(2, 2).unwrap()),
            vec!["1,2", "1,-2", "-1,2", "-1,-2"]
        );
    }

    #[test]
    fn subset_validation() {
        assert!(SignedSubset::new(3, &[1, -1]).is_err());
        assert!(SignedSubset::new(3, &[0]).is_err());
        assert!(SignedSubset::new(3, &[4]).is_err());
        let s = SignedSubset::parse("3,-1", 3).unwrap();
        assert_eq!(s.to_string(), "-1,3");
        assert_eq!(s.negated().to_string(), "1,-3");
    }

    #[test]
    fn alternation() {
        assert!(SignedSubset::new(4, &[1, -2, 3, -4])
            .unwrap()
            .is_alternating());
        assert!(!SignedSubset::new(2, &[1, 2]).unwrap().is_alternating());
        for x in [1, -1, 3, -3] {
            assert!(SignedSubset::new(3, &[x]).unwrap().is_alternating());
        }
        for (n, k) in [(6, 4), (5, 2), (7, 3)] {
            let direct = alternating_subsets(n, k).unwrap();
            let filtered: Vec<_> = signed_subsets(n, k)
                .unwrap()
                .into_iter()
                .filter(|s| s.is_alternating())
                .collect();
            assert_eq!(direct, filtered);
        }
    }

    #[test]
    fn antitwin_of_a_is_minus_a() {
        for n in 1..=5 {
            for k in 1..=n {
                let ks = kneser_signed(n, k).unwrap();
                for (i, s) in ks.subsets.iter().enumerate() {
                    let j = ks.index_of(&s.negated()).unwrap();
                    assert!(are_antitwins(&ks.graph, i, j), "KS({n},{k}) {s}");
                }
            }
        }
    }

    #[test]
    fn reduction_sizes() {
        assert_eq!(
            kneser_signed(6, 4).unwrap().reduce().unwrap().graph.n(),
            120
        );
        assert_eq!(
            schrijver_signed(6, 4).unwrap().reduce().unwrap().graph.n(),
            15
        );
    }

    #[test]
    fn generic_reduction_matches_labeled_reduction() {
        for (n, k) in [(6, 4), (5, 3), (4, 2), (3, 3)] {
            let ks = schrijver_signed(n, k).unwrap();
            let labeled = ks.reduce().unwrap();
            assert_eq!(reduce_double_switching(&ks.graph).unwrap(), labeled.graph);
            // without labels the neighborhood-signature rule still picks one per pair
            let bare = reduce_double_switching(&ks.graph.clone().without_labels()).unwrap();
            assert_eq!(bare.n(), labeled.graph.n());
        }
    }

    #[test]
    fn singletons_have_unique_antitwins() {
        // {1} and {2} share a digon, but only {2} sees -1 with both signs
        for n in 2..6 {
            let ks = kneser_signed(n, 1).unwrap();
            assert_eq!(antitwin_pairs(&ks.graph).len(), n as usize);
            assert_eq!(
                reduce_double_switching(&ks.graph).unwrap(),
                ks.reduce().unwrap().graph
            );
        }
    }

    #[test]
    fn girth_formula() {
        assert_eq!(kneser_girth_formula(6, 4).unwrap(), GirthValue::Finite(3));
        assert_eq!(kneser_girth_formula(5, 4).unwrap(), GirthValue::Finite(5));
        assert_eq!(kneser_girth_formula(8, 4).unwrap(), GirthValue::Finite(2));
        assert_eq!(kneser_girth_formula(4, 4).unwrap(), GirthValue::Infinite);
        assert!(kneser_girth_formula(3, 4).is_err());
    }

    #[test]
    fn shift_cycle_5_4() {
        let c = shift_cycle_witness(5, 4).unwrap();
        assert_eq!(
            strs(&c.subsets),
            vec!["1,2,3,4", "2,3,4,5", "-1,3,4,5", "-1,-2,4,5", "-1,-2,-3,5"]
        );
        let ks = kneser_signed(5, 4).unwrap();
        let cycle = c.locate(&ks).unwrap();
        assert_eq!(cycle.len(), 5);
        assert_eq!(cycle.signs.iter().filter(|s| s.is_negative()).count(), 1);
    }

    #[test]
    fn lower_bound_parameters() {
        let w = lower_bound_witness(2, 5).unwrap();
        assert_eq!(
            (w.k, w.core_vertices, w.graph.n(), w.predicted_girth),
            (4, 5, 5, 5)
        );
        let w = lower_bound_witness(3, 15).unwrap();
        assert_eq!((w.k, w.core_vertices, w.graph.n()), (4, 15, 15));
        let w = lower_bound_witness(3, 9).unwrap();
        // C(4,2) = 6 <= 9 < C(5,3) = 10
        assert_eq!((w.k, w.core_vertices, w.graph.n()), (2, 6, 9));
        assert!(binomial(4, 2).unwrap() <= 9 && binomial(5, 3).unwrap() > 9);
        assert!(lower_bound_witness(1, 5).is_err());
        assert!(lower_bound_witness(3, 2).is_err());
    }
}
