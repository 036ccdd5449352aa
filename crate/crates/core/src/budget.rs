use serde::{Deserialize, Serialize};

/// Search-node limit shared by the exact (exponential) procedures.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    pub nodes: u64,
}

impl Budget {
    pub const DEFAULT_NODES: u64 = 10_000_000;

    pub fn nodes(nodes: u64) -> Self {
        Budget { nodes }
    }

    pub fn unlimited() -> Self {
        Budget { nodes: u64::MAX }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            nodes: Self::DEFAULT_NODES,
        }
    }
}

/// Running node counter checked against a [`Budget`].
#[derive(Debug)]
pub(crate) struct Meter {
    pub(crate) used: u64,
    limit: u64,
}

impl Meter {
    pub(crate) fn new(budget: Budget) -> Self {
        Meter {
            used: 0,
            limit: budget.nodes,
        }
    }

    /// Counts one node; returns false once the limit is exceeded.
    #[inline]
    pub(crate) fn tick(&mut self) -> bool {
        self.used += 1;
        self.used <= self.limit
    }
}
