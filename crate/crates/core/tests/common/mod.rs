#![allow(dead_code)] // each test binary uses a different slice of this module

//! Shared test support: an independent brute-force oracle for antiresolving
//! values and helpers for seeded random corpora.
//!
//! The oracle deliberately avoids the library's partition path: distances
//! come from a Floyd-Warshall recomputation and classes from quadratic
//! pairwise comparison, so the two routes can check each other.

use antiresolve_core::{erdos_renyi, Flavor, Graph};

const UNREACHABLE: u64 = u64::MAX / 4;

pub fn floyd_warshall(g: &Graph) -> Vec<Vec<u64>> {
    let n = g.order();
    let mut d = vec![vec![UNREACHABLE; n]; n];
    for (v, row) in d.iter_mut().enumerate() {
        row[v] = 0;
    }
    for &(u, v) in g.edges() {
        d[u][v] = 1;
        d[v][u] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d
}

/// Antiresolving value of `members` by definition: for every outside vertex,
/// count the outside vertices sharing its whole representation (itself
/// included); take the minimum.
pub fn naive_antiresolving_value(g: &Graph, members: &[usize], flavor: Flavor) -> usize {
    let dist = floyd_warshall(g);
    let coord = |u: usize, w: usize| -> u64 {
        match flavor {
            Flavor::Metric => dist[u][w],
            Flavor::Adjacency => {
                if g.has_edge(w, u) {
                    1
                } else {
                    2
                }
            }
        }
    };
    let outside: Vec<usize> = (0..g.order()).filter(|v| !members.contains(v)).collect();
    outside
        .iter()
        .map(|&u| {
            outside
                .iter()
                .filter(|&&v| members.iter().all(|&w| coord(u, w) == coord(v, w)))
                .count()
        })
        .min()
        .expect("probe set must be a proper subset")
}

/// Minimum naive value over every non-empty subset of size <= ell.
pub fn naive_anonymity_value(g: &Graph, ell: usize, flavor: Flavor) -> usize {
    let n = g.order();
    let mut best = usize::MAX;
    let mut subset: Vec<usize> = Vec::new();
    fn recurse(
        g: &Graph,
        flavor: Flavor,
        ell: usize,
        start: usize,
        subset: &mut Vec<usize>,
        best: &mut usize,
    ) {
        if !subset.is_empty() {
            *best = (*best).min(naive_antiresolving_value(g, subset, flavor));
        }
        if subset.len() == ell {
            return;
        }
        for v in start..g.order() {
            subset.push(v);
            recurse(g, flavor, ell, v + 1, subset, best);
            subset.pop();
        }
    }
    recurse(g, flavor, ell.min(n - 1), 0, &mut subset, &mut best);
    best
}

pub const ER_PROBABILITIES: [f64; 4] = [0.05, 0.1, 0.3, 0.7];

/// Deterministic ER corpus: `count` graphs with orders cycling over
/// `min_n..=max_n` and probabilities over [`ER_PROBABILITIES`].
pub fn er_corpus(count: usize, min_n: usize, max_n: usize, seed_base: u64) -> Vec<Graph> {
    (0..count)
        .map(|i| {
            let n = min_n + i % (max_n - min_n + 1);
            let p = ER_PROBABILITIES[i % ER_PROBABILITIES.len()];
            erdos_renyi(n, p, seed_base + i as u64).expect("valid probability")
        })
        .collect()
}

/// Every graph on `n` labelled vertices, by edge-mask enumeration.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let total: u64 = 1 << pairs.len();
    (0..total).map(move |mask| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e);
        Graph::build(n, edges).expect("mask edges valid")
    })
}
