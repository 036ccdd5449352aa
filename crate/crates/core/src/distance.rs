//! Sign-blind distances in the underlying graph.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::SignedGraph;

/// Hop distances from the nearest vertex of `sources`; `None` = unreachable.
pub fn distances_from(g: &SignedGraph, sources: &[usize]) -> Result<Vec<Option<usize>>> {
    let mut dist = vec![None; g.n()];
    let mut queue = VecDeque::new();
    for &s in sources {
        g.check_vertex(s)?;
        if dist[s].is_none() {
            dist[s] = Some(0);
            queue.push_back(s);
        }
    }
    while let Some(u) = queue.pop_front() {
        let d = dist[u].unwrap() + 1;
        for w in g.neighbor_vertices(u) {
            if dist[w].is_none() {
                dist[w] = Some(d);
                queue.push_back(w);
            }
        }
    }
    Ok(dist)
}

pub fn distance(g: &SignedGraph, x: usize, y: usize) -> Result<Option<usize>> {
    g.check_vertex(y)?;
    Ok(distances_from(g, &[x])?[y])
}

/// Vertices within distance `r` of `v`, ascending.
pub fn ball(g: &SignedGraph, v: usize, r: usize) -> Result<Vec<usize>> {
    let dist = distances_from(g, &[v])?;
    Ok((0..g.n())
        .filter(|&w| dist[w].is_some_and(|d| d <= r))
        .collect())
}

/// `min_{x in H} max_{y in H} d_G(x, y)` with distances measured in the
/// whole graph `g`, not inside `H`. `None` when no center reaches all of `H`.
pub fn radius_in(g: &SignedGraph, h: &[usize]) -> Result<Option<usize>> {
    radius_with_center(g, h).map(|r| r.map(|(radius, _)| radius))
}

/// Radius in `g` together with the smallest center attaining it.
pub fn radius_with_center(g: &SignedGraph, h: &[usize]) -> Result<Option<(usize, usize)>> {
    if h.is_empty() {
        return Err(Error::Parameter("radius of an empty vertex set".into()));
    }
    let mut members = h.to_vec();
    members.sort_unstable();
    members.dedup();
    let mut best: Option<(usize, usize)> = None;
    for &x in &members {
        let dist = distances_from(g, &[x])?;
        let ecc = members
            .iter()
            .map(|&y| dist[y])
            .try_fold(0usize, |m, d| d.map(|d| m.max(d)));
        if let Some(e) = ecc {
            if best.is_none_or(|(b, _)| e < b) {
                best = Some((e, x));
            }
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plain::PlainGraph;

    #[test]
    fn self_distance_is_zero() {
        let g = PlainGraph::cycle(5).to_all_negative();
        for v in 0..5 {
            assert_eq!(distance(&g, v, v).unwrap(), Some(0));
        }
    }

    #[test]
    fn radius_of_25_cycle() {
        let g = PlainGraph::cycle(25).to_all_negative();
        let all: Vec<usize> = (0..25).collect();
        // brute force: all-pairs BFS, min over centers of the eccentricity
        let expect = (0..25)
            .map(|x| {
                let d = distances_from(&g, &[x]).unwrap();
                d.iter().map(|d| d.unwrap()).max().unwrap()
            })
            .min()
            .unwrap();
        assert_eq!(expect, 12);
        assert_eq!(radius_in(&g, &all).unwrap(), Some(12));
    }

    #[test]
    fn ball_on_path() {
        let g = PlainGraph::path(3).to_all_negative();
        assert_eq!(ball(&g, 1, 1).unwrap(), vec![0, 1, 2]);
        assert_eq!(ball(&g, 0, 1).unwrap(), vec![0, 1]);
    }

    #[test]
    fn ambient_distances_are_used() {
        // H = {0, 2} on the path 0-1-2: radius 2 through the ambient vertex 1
        let g = PlainGraph::path(3).to_all_negative();
        assert_eq!(radius_in(&g, &[0, 2]).unwrap(), Some(2));
        let split = PlainGraph::new(3, [(0, 1)]).unwrap().to_all_negative();
        assert_eq!(radius_in(&split, &[0, 2]).unwrap(), None);
        assert!(radius_in(&g, &[]).is_err());
    }
}
