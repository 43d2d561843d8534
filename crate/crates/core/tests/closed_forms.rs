//! The closed-form single-probe value against exhaustive scans, and the
//! ceiling on achievable single-probe anonymity.

mod common;

use antiresolve_core::{
    anonymity_value, graph, k1_upper_bound, k1_value_formula, Flavor, K1Bound,
};
use common::{all_graphs, er_corpus};

// Formula equals brute force on every labelled graph of order <= 5.
#[test]
fn formula_matches_brute_force_exhaustively() {
    for n in 2..=5 {
        for g in all_graphs(n) {
            let brute = anonymity_value(&g, 1, Flavor::Adjacency).unwrap().k;
            let formula = k1_value_formula(&g).unwrap();
            assert_eq!(formula, brute, "graph {:?}", g);
        }
    }
}

// Same on a seeded random corpus up to order 40.
#[test]
fn formula_matches_brute_force_on_corpus() {
    for g in er_corpus(160, 4, 40, 3100) {
        let brute = anonymity_value(&g, 1, Flavor::Adjacency).unwrap().k;
        let formula = k1_value_formula(&g).unwrap();
        assert_eq!(formula, brute, "graph {:?}", g);
    }
}

// Non-complete, non-empty graphs never exceed floor((n-1)/2); complete and
// empty graphs reach n-1 and are flagged unbounded.
#[test]
fn half_order_ceiling_holds() {
    for g in er_corpus(200, 3, 14, 4500) {
        let k = anonymity_value(&g, 1, Flavor::Adjacency).unwrap().k;
        match k1_upper_bound(&g).unwrap() {
            K1Bound::Bounded(cap) => {
                assert_eq!(cap, (g.order() - 1) / 2);
                assert!(k <= cap, "graph {:?} has k={k} above cap={cap}", g);
            }
            K1Bound::Unbounded => {
                assert!(g.is_complete() || g.is_empty_graph());
                assert_eq!(k, g.order() - 1);
            }
        }
    }
}

// The closed form for complete/empty graphs extends to every probe budget.
#[test]
fn complete_and_empty_reach_n_minus_ell() {
    for n in 2..=7 {
        for ell in 1..n {
            let k = anonymity_value(&graph::complete(n), ell, Flavor::Adjacency).unwrap();
            assert_eq!(k.k, n - ell);
            let k = anonymity_value(&graph::empty(n), ell, Flavor::Adjacency).unwrap();
            assert_eq!(k.k, n - ell);
        }
    }
}
