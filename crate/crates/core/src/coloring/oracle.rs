//! Exhaustive reference implementations, independent of the union-find and
//! BFS machinery.

use crate::balance::balanced_by_enumeration;
use crate::error::{Error, Result};
use crate::graph::SignedGraph;

pub const ORACLE_MAX_VERTICES: usize = 9;

/// Balance of `set` by trying all `2^|set|` switchings of the induced subgraph.
pub fn balanced_set_by_enumeration(g: &SignedGraph, set: &[usize]) -> bool {
    balanced_by_enumeration(&g.induced(set).expect("vertices in range"))
}

/// Balanced chromatic number by enumerating every set partition.
pub fn chi_b_oracle(g: &SignedGraph) -> Result<usize> {
    let n = g.n();
    if n > ORACLE_MAX_VERTICES {
        return Err(Error::SizeGuard {
            what: "vertices",
            value: n as u128,
            limit: ORACLE_MAX_VERTICES as u128,
        });
    }
    if n == 0 {
        return Ok(0);
    }
    // restricted growth strings: block[0] = 0, block[i] <= max(block[..i]) + 1
    let mut block = vec![0usize; n];
    let mut best = n;
    loop {
        let blocks = block.iter().max().unwrap() + 1;
        if blocks < best {
            let ok = (0..blocks).all(|b| {
                let class: Vec<usize> = (0..n).filter(|&v| block[v] == b).collect();
                balanced_set_by_enumeration(g, &class)
            });
            if ok {
                best = blocks;
            }
        }
        // next restricted growth string
        let mut i = n - 1;
        loop {
            if i == 0 {
                return Ok(best);
            }
            let limit = block[..i].iter().max().unwrap() + 1;
            if block[i] < limit {
                block[i] += 1;
                for x in block[i + 1..].iter_mut() {
                    *x = 0;
                }
                break;
            }
            i -= 1;
        }
    }
}
