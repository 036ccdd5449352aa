use serde::{Deserialize, Serialize};

use crate::budget::{Budget, Meter};
use crate::plain::PlainGraph;

/// Ordinary chromatic number with a proper coloring witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChromaticResult {
    pub colors: Vec<usize>,
    pub complete: bool,
    pub nodes: u64,
}

impl ChromaticResult {
    pub fn upper_bound(&self) -> usize {
        self.colors.iter().max().map_or(0, |c| c + 1)
    }

    pub fn value(&self) -> Option<usize> {
        self.complete.then(|| self.upper_bound())
    }
}

fn colorable(
    g: &PlainGraph,
    order: &[usize],
    k: usize,
    meter: &mut Meter,
) -> Option<Option<Vec<usize>>> {
    fn go(
        g: &PlainGraph,
        order: &[usize],
        i: usize,
        used: usize,
        k: usize,
        color: &mut [usize],
        meter: &mut Meter,
    ) -> Option<bool> {
        if !meter.tick() {
            return None;
        }
        if i == order.len() {
            return Some(true);
        }
        let v = order[i];
        for c in 0..(used + 1).min(k) {
            if g.neighbors(v).iter().any(|&w| color[w] == c) {
                continue;
            }
            color[v] = c;
            match go(g, order, i + 1, used.max(c + 1), k, color, meter) {
                Some(false) => color[v] = usize::MAX,
                other => return other,
            }
        }
        Some(false)
    }
    let mut color = vec![usize::MAX; g.n()];
    go(g, order, 0, 0, k, &mut color, meter).map(|ok| ok.then_some(color))
}

/// Exact chromatic number by branch and bound, counting down from the
/// greedy bound.
pub fn chromatic_number(g: &PlainGraph, budget: Budget) -> ChromaticResult {
    let n = g.n();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.neighbors(v).len()), v));
    let mut best = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        let taken: Vec<usize> = g
            .neighbors(v)
            .iter()
            .filter(|&&w| order[..i].contains(&w))
            .map(|&w| best[w])
            .collect();
        best[v] = (0..).find(|c| !taken.contains(c)).unwrap();
    }
    let mut meter = Meter::new(budget);
    let mut complete = true;
    let mut k = best.iter().max().map_or(0, |c| c + 1);
    while k > 1 {
        match colorable(g, &order, k - 1, &mut meter) {
            Some(Some(c)) => {
                best = c;
                k = best.iter().max().unwrap() + 1;
            }
            Some(None) => break,
            None => {
                complete = false;
                break;
            }
        }
    }
    ChromaticResult {
        colors: best,
        complete,
        nodes: meter.used,
    }
}
