#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use signed_graphs::{EdgeState, SignedGraph};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Each pair independently: no edge with probability `1 - density`,
/// otherwise +, - or a digon (digons rarer).
pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, density: f64, digons: bool) -> SignedGraph {
    let mut states = vec![EdgeState::None; n * n];
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen::<f64>() >= density {
                continue;
            }
            let r: f64 = rng.gen();
            states[i * n + j] = if digons && r < 0.15 {
                EdgeState::Digon
            } else if r < 0.575 {
                EdgeState::Positive
            } else {
                EdgeState::Negative
            };
        }
    }
    SignedGraph::from_states(n, |i, j| states[i.min(j) * n + i.max(j)])
}

/// Every signed graph on `n` vertices, 4 states per pair, in code order.
pub fn all_graphs(n: usize) -> impl Iterator<Item = SignedGraph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let total = 4usize.pow(pairs.len() as u32);
    (0..total).map(move |code| {
        let mut states = vec![EdgeState::None; n * n];
        let mut c = code;
        for &(i, j) in &pairs {
            states[i * n + j] = EdgeState::from_code((c % 4) as u8).unwrap();
            c /= 4;
        }
        SignedGraph::from_states(n, |i, j| states[i.min(j) * n + i.max(j)])
    })
}

pub fn random_subset(rng: &mut ChaCha8Rng, n: usize) -> Vec<usize> {
    (0..n).filter(|_| rng.gen_bool(0.5)).collect()
}

pub fn random_permutation(rng: &mut ChaCha8Rng, n: usize) -> Vec<usize> {
    use rand::seq::SliceRandom;
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}
