//! Exhaustive search for the smallest signed graphs with large negative
//! girth and large balanced chromatic number.
//!
//! Graphs are grown one vertex at a time. Deleting a vertex never shortens
//! the negative girth, so every graph with girth at least `lambda` on `n`
//! vertices extends some class found at `n - 1`; keeping one representative
//! per canonical form at each level therefore loses nothing.

use std::collections::BTreeSet;
use std::fs;
use std::path::PathBuf;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::{lower_bound_ceiling, upper_bound};
use crate::budget::Budget;
use crate::canon::{canonical_form, CanonicalForm};
use crate::coloring::{balanced_chromatic_number, p_colorable, Decision};
use crate::cover::shortest_negative_walk_bounded;
use crate::error::{Error, Result};
use crate::graph::{EdgeState, SignedGraph};
use crate::harness::CSV_HEADER;
use crate::kneser::GirthValue;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub form: String,
    pub graph: SignedGraph,
    pub girth: GirthValue,
    pub chi_b: usize,
}

impl Witness {
    /// Recomputes girth and balanced chromatic number from scratch.
    pub fn revalidate(&self, lambda: usize, p: usize) -> bool {
        let girth = self.graph.negative_girth().length();
        let chi = balanced_chromatic_number(&self.graph, Budget::default());
        girth.is_none_or(|g| g >= lambda)
            && GirthValue::of(girth) == self.girth
            && chi.value() == Some(self.chi_b)
            && self.chi_b >= p
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelReport {
    pub n: usize,
    /// Canonical classes with negative girth at least `lambda`.
    pub classes: usize,
    /// Candidate graphs built from the previous level.
    pub generated: u64,
    pub witnesses: Vec<Witness>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SearchStatus {
    /// A witness was found at the last level, which is therefore `n_s`.
    Found,
    /// Every level up to `n_max` was exhausted without a witness.
    Exhausted,
    /// The budget ran out while building the level after the last one reported.
    BudgetExhausted,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchReport {
    pub lambda: usize,
    pub p: usize,
    pub n_max: usize,
    /// Level the search resumed after, when started from a checkpoint.
    pub resumed_from: Option<usize>,
    pub levels: Vec<LevelReport>,
    pub status: SearchStatus,
}

impl SearchReport {
    pub fn n_s(&self) -> Option<usize> {
        match self.status {
            SearchStatus::Found => self.levels.last().map(|l| l.n),
            _ => None,
        }
    }

    /// `n_s(lambda, p)` is at least this much.
    pub fn lower_bound(&self) -> usize {
        let proven = self
            .levels
            .iter()
            .take_while(|l| l.witnesses.is_empty())
            .map(|l| l.n)
            .max();
        match (self.resumed_from, proven) {
            (_, Some(n)) => n + 1,
            (Some(r), None) => r + 1,
            (None, None) => 1,
        }
    }

    pub fn to_csv(&self) -> String {
        let mut out = format!("{CSV_HEADER}\n");
        for level in &self.levels {
            let n = level.n as u64;
            let (low, high) = if self.p >= 2 {
                (
                    lower_bound_ceiling(n, self.p as u32).to_string(),
                    upper_bound(n, self.p as u32).to_string(),
                )
            } else {
                ("-".into(), "-".into())
            };
            if level.witnesses.is_empty() {
                out.push_str(&format!("{},-,-,{low},{high},exhausted\n", level.n));
            }
            for w in &level.witnesses {
                out.push_str(&format!(
                    "{},{},{},{low},{high},witness\n",
                    level.n, w.girth, w.chi_b
                ));
            }
        }
        out
    }
}

#[derive(Clone, Debug, Default)]
pub struct SearchOptions {
    /// Frontier file rewritten after every completed level.
    pub checkpoint: Option<PathBuf>,
    /// Start from the checkpoint instead of a single vertex.
    pub resume: bool,
}

fn alphabet(lambda: usize) -> &'static [EdgeState] {
    // a digon is a negative 2-cycle
    if lambda >= 3 {
        &[EdgeState::None, EdgeState::Positive, EdgeState::Negative]
    } else {
        &EdgeState::ALL
    }
}

/// One extension of `parent` by a new last vertex, for each state vector.
/// Switching the new vertex flips its single edges, so its first single
/// edge may be taken positive.
fn children(parent: &SignedGraph, lambda: usize) -> (Vec<CanonicalForm>, u64) {
    let m = parent.n();
    let states = alphabet(lambda);
    let total = states.len().pow(m as u32);
    let mut out = Vec::new();
    let mut generated = 0;
    let mut vector = vec![EdgeState::None; m];
    for code in 0..total {
        let mut c = code;
        for slot in vector.iter_mut() {
            *slot = states[c % states.len()];
            c /= states.len();
        }
        let first_single = vector
            .iter()
            .find(|s| matches!(s, EdgeState::Positive | EdgeState::Negative));
        if first_single == Some(&EdgeState::Negative) {
            continue;
        }
        generated += 1;
        let child = SignedGraph::from_states(m + 1, |i, j| {
            if j == m {
                vector[i]
            } else {
                parent.edge_state(i, j)
            }
        });
        if lambda >= 2 && shortest_negative_walk_bounded(&child, m, lambda - 1).is_some() {
            continue;
        }
        out.push(canonical_form(&child).expect("desk-scale graphs"));
    }
    (out, generated)
}

fn write_checkpoint(
    path: &PathBuf,
    lambda: usize,
    p: usize,
    n: usize,
    frontier: &[CanonicalForm],
) -> Result<()> {
    let mut text = format!("# lambda {lambda} p {p} n {n}\n");
    for f in frontier {
        text.push_str(&f.to_hex());
        text.push('\n');
    }
    fs::write(path, text)
        .map_err(|e| Error::Parameter(format!("checkpoint {}: {e}", path.display())))
}

fn read_checkpoint(path: &PathBuf, lambda: usize, p: usize) -> Result<(usize, Vec<CanonicalForm>)> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Parameter(format!("checkpoint {}: {e}", path.display())))?;
    let mut lines = text.lines().enumerate();
    let header = lines.next().map(|(_, l)| l).unwrap_or("");
    let words: Vec<&str> = header.split_whitespace().collect();
    let parse = |i: usize| words.get(i).and_then(|w| w.parse::<usize>().ok());
    if words.first() != Some(&"#") || parse(2) != Some(lambda) || parse(4) != Some(p) {
        return Err(Error::Parse {
            line: 1,
            msg: format!("checkpoint is not for lambda {lambda}, p {p}"),
        });
    }
    let n = parse(6).ok_or(Error::Parse {
        line: 1,
        msg: "missing level".into(),
    })?;
    let mut frontier = Vec::new();
    for (i, line) in lines {
        let form = CanonicalForm::from_hex(line.trim()).map_err(|e| Error::Parse {
            line: i + 1,
            msg: e.to_string(),
        })?;
        if form.n() != n {
            return Err(Error::Parse {
                line: i + 1,
                msg: format!("form on {} vertices at level {n}", form.n()),
            });
        }
        frontier.push(form);
    }
    Ok((n, frontier))
}

/// Smallest `n <= n_max` with a signed graph on `n` vertices of negative
/// girth at least `lambda` and balanced chromatic number at least `p`.
///
/// Levels without a witness are exhaustively refuted. The search stops at
/// the first level with a witness and reports every witness class there.
/// `budget` caps the number of candidate graphs built.
pub fn n_s_search(lambda: usize, p: usize, n_max: usize, budget: Budget) -> Result<SearchReport> {
    n_s_search_with(lambda, p, n_max, budget, &SearchOptions::default())
}

pub fn n_s_search_with(
    lambda: usize,
    p: usize,
    n_max: usize,
    budget: Budget,
    opts: &SearchOptions,
) -> Result<SearchReport> {
    if lambda < 2 || p < 2 {
        return Err(Error::Parameter(format!(
            "need lambda >= 2 and p >= 2, got lambda = {lambda}, p = {p}"
        )));
    }
    let (start, mut frontier, resumed_from) = match (&opts.checkpoint, opts.resume) {
        (Some(path), true) => {
            let (n, frontier) = read_checkpoint(path, lambda, p)?;
            (n + 1, frontier, Some(n))
        }
        _ => (1, Vec::new(), None),
    };
    let mut report = SearchReport {
        lambda,
        p,
        n_max,
        resumed_from,
        levels: Vec::new(),
        status: SearchStatus::Exhausted,
    };
    let mut used = 0u64;
    for n in start..=n_max {
        let (forms, generated) = if n == 1 {
            (vec![canonical_form(&SignedGraph::empty(1))?], 1)
        } else {
            let parents: Vec<SignedGraph> = frontier.iter().map(CanonicalForm::to_graph).collect();
            let parts: Vec<(Vec<CanonicalForm>, u64)> =
                parents.par_iter().map(|g| children(g, lambda)).collect();
            let generated = parts.iter().map(|(_, c)| c).sum();
            let forms: BTreeSet<CanonicalForm> = parts.into_iter().flat_map(|(f, _)| f).collect();
            (forms.into_iter().collect(), generated)
        };
        used += generated;
        if used > budget.nodes {
            report.status = SearchStatus::BudgetExhausted;
            return Ok(report);
        }
        frontier = forms;
        let mut witnesses = Vec::new();
        for form in &frontier {
            let g = form.to_graph();
            match p_colorable(&g, p - 1, budget).0 {
                Decision::Colorable(_) => continue,
                Decision::Unknown => {
                    report.status = SearchStatus::BudgetExhausted;
                    return Ok(report);
                }
                Decision::NotColorable => {}
            }
            let chi_b =
                balanced_chromatic_number(&g, budget)
                    .value()
                    .ok_or(Error::BudgetExhausted {
                        nodes: budget.nodes,
                    })?;
            let girth = GirthValue::of(g.negative_girth().length());
            witnesses.push(Witness {
                form: form.to_hex(),
                graph: g,
                girth,
                chi_b,
            });
        }
        if let Some(path) = &opts.checkpoint {
            write_checkpoint(path, lambda, p, n, &frontier)?;
        }
        let found = !witnesses.is_empty();
        report.levels.push(LevelReport {
            n,
            classes: frontier.len(),
            generated,
            witnesses,
        });
        if found {
            report.status = SearchStatus::Found;
            return Ok(report);
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plain::PlainGraph;

    #[test]
    fn triangle_for_two_colors() {
        let r = n_s_search(3, 2, 6, Budget::default()).unwrap();
        assert_eq!(r.n_s(), Some(3));
        let w = &r.levels.last().unwrap().witnesses;
        assert_eq!(w.len(), 1);
        let tri = PlainGraph::complete(3).to_all_negative();
        assert_eq!(w[0].form, canonical_form(&tri).unwrap().to_hex());
        assert!(w[0].revalidate(3, 2));
    }

    #[test]
    fn digon_when_lambda_is_two() {
        let r = n_s_search(2, 2, 4, Budget::default()).unwrap();
        assert_eq!(r.n_s(), Some(2));
        assert_eq!(
            r.levels.last().unwrap().witnesses[0].girth,
            GirthValue::Finite(2)
        );
    }

    #[test]
    fn budget_marks_partial() {
        let r = n_s_search(3, 3, 6, Budget { nodes: 5 }).unwrap();
        assert_eq!(r.status, SearchStatus::BudgetExhausted);
        assert!(r.n_s().is_none());
    }

    #[test]
    fn checkpoint_resume_matches() {
        let dir = std::env::temp_dir().join(format!("ns-ckpt-{}", std::process::id()));
        let opts = SearchOptions {
            checkpoint: Some(dir.clone()),
            resume: false,
        };
        let first = n_s_search_with(3, 3, 3, Budget::default(), &opts).unwrap();
        assert_eq!(first.status, SearchStatus::Exhausted);
        let resumed = n_s_search_with(
            3,
            3,
            5,
            Budget::default(),
            &SearchOptions {
                checkpoint: Some(dir.clone()),
                resume: true,
            },
        )
        .unwrap();
        let _ = fs::remove_file(&dir);
        let direct = n_s_search(3, 3, 5, Budget::default()).unwrap();
        assert_eq!(resumed.resumed_from, Some(3));
        assert_eq!(resumed.levels, direct.levels[3..].to_vec());
        assert_eq!(resumed.n_s(), Some(5));
    }
}
