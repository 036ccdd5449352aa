//! Measures negative girth of generated families against the bounds
//! `ceil(n^(1/(p-1)) / e)` and `2 (p - 1) ceil(n^(1/(p-1)))`.

use serde::{Deserialize, Serialize};

use crate::bounds::{lower_bound_ceiling, upper_bound};
use crate::budget::Budget;
use crate::coloring::balanced_chromatic_number;
use crate::error::{Error, Result};
use crate::graph::SignedGraph;
use crate::kneser::{lower_bound_witness, GirthValue};
use crate::mycielski::{generalized_mycielskian, negative_c4};
use crate::plain::PlainGraph;

pub const CSV_HEADER: &str = "n,girth,chi_b,bound_low,bound_high,status";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Family {
    /// The lower-bound construction at each target size.
    LowerBoundSweep { sizes: Vec<usize> },
    /// `(K_n, -)` for each size.
    NegativeCliques { sizes: Vec<usize> },
    /// Generalized Mycielskian of the negative 4-cycle with each level count.
    Mycielski { levels: Vec<usize> },
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::LowerBoundSweep { .. } => "lower-bound",
            Family::NegativeCliques { .. } => "negative-clique",
            Family::Mycielski { .. } => "mycielski",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum RowStatus {
    /// `chi_b >= p` and the girth respects every bound that applies.
    Ok,
    /// `chi_b < p`, so the bounds say nothing.
    BelowP,
    /// `chi_b` could not be decided within the budget.
    Unverified,
    ViolatesLower,
    ViolatesUpper,
}

impl RowStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            RowStatus::Ok => "ok",
            RowStatus::BelowP => "below_p",
            RowStatus::Unverified => "unverified",
            RowStatus::ViolatesLower => "violates_lower",
            RowStatus::ViolatesUpper => "violates_upper",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HarnessRow {
    pub family: String,
    pub n: usize,
    pub girth: GirthValue,
    pub chi_b: Option<usize>,
    pub bound_low: u64,
    pub bound_high: u64,
    /// `girth / n^(1/(p-1))`, for display.
    pub ratio: Option<f64>,
    pub status: RowStatus,
}

impl HarnessRow {
    pub fn to_csv(&self) -> String {
        let chi = self.chi_b.map_or("-".to_string(), |c| c.to_string());
        format!(
            "{},{},{},{},{},{}",
            self.n,
            self.girth,
            chi,
            self.bound_low,
            self.bound_high,
            self.status.as_str()
        )
    }
}

pub fn rows_to_csv(rows: &[HarnessRow]) -> String {
    let mut out = format!("{CSV_HEADER}\n");
    for r in rows {
        out.push_str(&r.to_csv());
        out.push('\n');
    }
    out
}

fn measure(family: &Family, g: &SignedGraph, p: u32, budget: Budget) -> HarnessRow {
    let n = g.n();
    let girth = GirthValue::of(g.negative_girth().length());
    let chi_b = balanced_chromatic_number(g, budget).value();
    let bound_low = lower_bound_ceiling(n as u64, p);
    let bound_high = upper_bound(n as u64, p);
    let status = match chi_b {
        None => RowStatus::Unverified,
        Some(c) if c < p as usize => RowStatus::BelowP,
        Some(_) => match girth {
            // the lower bound is a property of the construction only
            GirthValue::Finite(l)
                if matches!(family, Family::LowerBoundSweep { .. }) && (l as u64) < bound_low =>
            {
                RowStatus::ViolatesLower
            }
            // an extra 1 absorbs ceiling conventions in the upper bound
            GirthValue::Finite(l) if l as u64 > bound_high + 1 => RowStatus::ViolatesUpper,
            GirthValue::Infinite => RowStatus::ViolatesUpper,
            _ => RowStatus::Ok,
        },
    };
    let ratio = match girth {
        GirthValue::Finite(l) => Some(l as f64 / (n as f64).powf(1.0 / (p as f64 - 1.0))),
        GirthValue::Infinite => None,
    };
    HarnessRow {
        family: family.name().to_string(),
        n,
        girth,
        chi_b,
        bound_low,
        bound_high,
        ratio,
        status,
    }
}

/// One row per family member: negative girth, balanced chromatic number
/// and both bounds for `p`.
pub fn lambda_s_harness(family: &Family, p: u32, budget: Budget) -> Result<Vec<HarnessRow>> {
    if p < 2 {
        return Err(Error::Parameter("the bounds need p >= 2".into()));
    }
    let graphs: Vec<SignedGraph> = match family {
        Family::LowerBoundSweep { sizes } => sizes
            .iter()
            .map(|&n| lower_bound_witness(p, n).map(|w| w.graph))
            .collect::<Result<_>>()?,
        Family::NegativeCliques { sizes } => sizes
            .iter()
            .map(|&n| PlainGraph::complete(n).to_all_negative())
            .collect(),
        Family::Mycielski { levels } => levels
            .iter()
            .map(|&m| generalized_mycielskian(&negative_c4(), m))
            .collect::<Result<_>>()?,
    };
    Ok(graphs
        .iter()
        .map(|g| measure(family, g, p, budget))
        .collect())
}
