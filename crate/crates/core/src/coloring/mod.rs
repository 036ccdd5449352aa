//! Balanced sets and balanced colorings.
//!
//! A vertex set is balanced when its induced signed graph switches to all
//! positive. A balanced `p`-coloring partitions the vertices into `p`
//! balanced classes; the balanced chromatic number is the least such `p`.

mod chib;
mod chromatic;
mod maxsub;
mod oracle;

use serde::{Deserialize, Serialize};

use crate::balance::BalanceResult;
use crate::error::{Error, Result};
use crate::graph::SignedGraph;

pub use chib::{balanced_chromatic_number, p_colorable, ChiBResult, Decision};
pub use chromatic::{chromatic_number, ChromaticResult};
pub use maxsub::{max_balanced_p_colorable_subgraph, max_balanced_set, MaxSubgraph};
pub use oracle::{balanced_set_by_enumeration, chi_b_oracle, ORACLE_MAX_VERTICES};

/// Balance of `set` with its witness expressed in the vertex ids of `g`.
pub fn is_balanced_set(g: &SignedGraph, set: &[usize]) -> Result<BalanceResult> {
    let mut members = set.to_vec();
    members.sort_unstable();
    members.dedup();
    let sub = g.induced(&members)?;
    Ok(match sub.is_balanced() {
        BalanceResult::Balanced(s) => {
            let mut flags = vec![false; g.n()];
            for (i, &v) in members.iter().enumerate() {
                flags[v] = s.is_flipped(i);
            }
            BalanceResult::Balanced(crate::balance::SwitchingAssignment::from_flags(flags))
        }
        BalanceResult::Unbalanced(c) => BalanceResult::Unbalanced(c.mapped(&members)),
    })
}

/// True iff `colors` is total, uses colors below `palette`, and every class
/// is balanced.
pub fn check_coloring(g: &SignedGraph, colors: &[usize], palette: usize) -> Result<bool> {
    if colors.len() != g.n() {
        return Err(Error::PartialColoring {
            expected: g.n(),
            got: colors.len(),
        });
    }
    if colors.iter().any(|&c| c >= palette) {
        return Ok(false);
    }
    for class in classes(colors, palette) {
        if !is_balanced_set(g, &class)?.is_balanced() {
            return Ok(false);
        }
    }
    Ok(true)
}

fn classes(colors: &[usize], palette: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new(); palette];
    for (v, &c) in colors.iter().enumerate() {
        out[c].push(v);
    }
    out
}

/// A validated balanced coloring. Colors are `0..palette`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BalancedColoring {
    pub colors: Vec<usize>,
    pub palette: usize,
    /// For each class, the vertices switched to make it all positive.
    pub switchings: Vec<Vec<usize>>,
}

impl BalancedColoring {
    /// Validates `colors` and records a switching certificate per class.
    pub fn certify(
        g: &SignedGraph,
        colors: Vec<usize>,
        palette: usize,
    ) -> Result<BalancedColoring> {
        if colors.len() != g.n() {
            return Err(Error::PartialColoring {
                expected: g.n(),
                got: colors.len(),
            });
        }
        if let Some(&c) = colors.iter().find(|&&c| c >= palette) {
            return Err(Error::Parameter(format!(
                "color {c} outside palette {palette}"
            )));
        }
        let mut switchings = Vec::with_capacity(palette);
        for class in classes(&colors, palette) {
            match is_balanced_set(g, &class)? {
                BalanceResult::Balanced(s) => switchings.push(s.flipped_set()),
                BalanceResult::Unbalanced(c) => {
                    return Err(Error::Precondition(format!(
                        "color class contains the negative cycle {:?}",
                        c.vertices
                    )))
                }
            }
        }
        Ok(BalancedColoring {
            colors,
            palette,
            switchings,
        })
    }

    pub fn used_colors(&self) -> usize {
        let mut seen = vec![false; self.palette];
        for &c in &self.colors {
            seen[c] = true;
        }
        seen.iter().filter(|&&s| s).count()
    }

    pub fn class(&self, color: usize) -> Vec<usize> {
        (0..self.colors.len())
            .filter(|&v| self.colors[v] == color)
            .collect()
    }

    /// Re-checks the coloring and each stored certificate.
    pub fn validate(&self, g: &SignedGraph) -> Result<bool> {
        if !check_coloring(g, &self.colors, self.palette)? || self.switchings.len() != self.palette
        {
            return Ok(false);
        }
        for (c, flipped) in self.switchings.iter().enumerate() {
            let class = self.class(c);
            let mut flag = vec![false; g.n()];
            for &v in flipped {
                flag[v] = true;
            }
            let sub = g.induced(&class)?;
            let local: Vec<bool> = class.iter().map(|&v| flag[v]).collect();
            if !crate::balance::SwitchingAssignment::from_flags(local).validates(&sub) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Sign;
    use crate::plain::PlainGraph;

    #[test]
    fn balanced_sets_of_negative_k5() {
        let g = PlainGraph::complete(5).to_all_negative();
        assert!(is_balanced_set(&g, &[]).unwrap().is_balanced());
        for mask in 0u32..32 {
            let s: Vec<usize> = (0..5).filter(|&v| mask >> v & 1 == 1).collect();
            let r = is_balanced_set(&g, &s).unwrap();
            assert_eq!(r.is_balanced(), s.len() <= 2, "{s:?}");
            assert_eq!(r.is_balanced(), balanced_set_by_enumeration(&g, &s));
            if let Some(c) = r.cycle() {
                c.validate(&g).unwrap();
            }
        }
    }

    #[test]
    fn digon_endpoints_unbalanced() {
        let g = SignedGraph::new(2, [(0, 1, Sign::Positive), (0, 1, Sign::Negative)]).unwrap();
        assert!(!is_balanced_set(&g, &[0, 1]).unwrap().is_balanced());
        assert!(is_balanced_set(&g, &[9]).is_err());
    }

    #[test]
    fn coloring_checks() {
        let g = PlainGraph::complete(5).to_all_negative();
        assert!(check_coloring(&g, &[0, 0, 1, 1, 2], 3).unwrap());
        assert!(!check_coloring(&g, &[0, 0, 0, 1, 2], 3).unwrap());
        assert!(!check_coloring(&g, &[0, 0, 1, 1, 2], 2).unwrap());
        assert!(matches!(
            check_coloring(&g, &[0, 0], 3),
            Err(Error::PartialColoring { .. })
        ));
        let c = BalancedColoring::certify(&g, vec![0, 0, 1, 1, 2], 3).unwrap();
        assert!(c.validate(&g).unwrap());
        assert_eq!(c.used_colors(), 3);
        assert!(BalancedColoring::certify(&g, vec![0, 0, 0, 1, 2], 3).is_err());
    }
}
