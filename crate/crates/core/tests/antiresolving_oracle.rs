//! Cross-checks of the partition machinery against the independent
//! brute-force oracle, plus the structural invariants tying the anonymity
//! operations together.

mod common;

use antiresolve_core::{
    anonymity_value, antidimension, antiresolving_k, enumerate_bad_sets, erdos_renyi,
    is_transformation, partition, Flavor, Graph, ProbeSet,
};
use common::{er_corpus, naive_antiresolving_value, naive_anonymity_value};
use proptest::prelude::*;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (3..=max_n, 0..4usize, any::<u64>()).prop_map(|(n, p_idx, seed)| {
        let p = [0.1, 0.3, 0.5, 0.8][p_idx];
        erdos_renyi(n, p, seed).expect("valid probability")
    })
}

fn subsets_up_to(n: usize, ell: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = Vec::new();
    let mut frontier: Vec<Vec<usize>> = vec![vec![]];
    for _ in 0..ell {
        let mut next = Vec::new();
        for s in &frontier {
            let start = s.last().map_or(0, |&v| v + 1);
            for v in start..n {
                let mut t = s.clone();
                t.push(v);
                next.push(t.clone());
                out.push(t);
            }
        }
        frontier = next;
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    // Exactness: for every probe set of size <= 3, the partition's minimum
    // class size equals the quadratic group-by oracle, in both flavors.
    #[test]
    fn partition_matches_oracle(g in arb_graph(24)) {
        for members in subsets_up_to(g.order(), 3.min(g.order() - 1)) {
            if members.len() >= g.order() {
                continue;
            }
            let s = ProbeSet::new(members.clone()).unwrap();
            for flavor in [Flavor::Metric, Flavor::Adjacency] {
                let fast = antiresolving_k(&g, &s, flavor).unwrap();
                let slow = naive_antiresolving_value(&g, &members, flavor);
                prop_assert_eq!(fast, slow, "set {:?} flavor {:?}", members, flavor);
            }
        }
    }

    // Class sizes sum to n - |S| and every class is non-empty.
    #[test]
    fn partition_is_a_partition(g in arb_graph(24)) {
        for members in subsets_up_to(g.order(), 2.min(g.order() - 1)) {
            let s = ProbeSet::new(members).unwrap();
            let p = partition(&g, &s, Flavor::Adjacency).unwrap();
            let total: usize = p.classes().iter().map(|(_, m)| m.len()).sum();
            prop_assert_eq!(total, g.order() - s.len());
            prop_assert!(p.classes().iter().all(|(_, m)| !m.is_empty()));
            prop_assert_eq!(p.k_value(), p.classes().iter().map(|(_, m)| m.len()).min().unwrap());
        }
    }

    // The adjacency partition coarsens the metric one, so for any probe the
    // adjacency value dominates the metric value.
    #[test]
    fn adjacency_coarsens_metric(g in arb_graph(20)) {
        for members in subsets_up_to(g.order(), 2.min(g.order() - 1)) {
            let s = ProbeSet::new(members).unwrap();
            let metric = partition(&g, &s, Flavor::Metric).unwrap();
            let adjacency = partition(&g, &s, Flavor::Adjacency).unwrap();
            prop_assert!(adjacency.k_value() >= metric.k_value());
            // Each metric class lies inside a single adjacency class.
            for (_, members) in metric.classes() {
                let host = adjacency.class_of(members[0]).unwrap();
                for &v in members {
                    prop_assert!(host.binary_search(&v).is_ok());
                }
            }
        }
    }

    // Anonymity value agrees with the naive scan, and with the smallest k
    // whose antidimension fits inside ell.
    #[test]
    fn anonymity_consistency(g in arb_graph(12), ell in 1..=3usize) {
        let ell = ell.min(g.order() - 1);
        for flavor in [Flavor::Metric, Flavor::Adjacency] {
            let report = anonymity_value(&g, ell, flavor).unwrap();
            prop_assert_eq!(report.k, naive_anonymity_value(&g, ell, flavor));
            // Witness really attains k at an admissible size.
            prop_assert!(report.witness.len() <= ell);
            prop_assert_eq!(antiresolving_k(&g, &report.witness, flavor).unwrap(), report.k);
            let smallest_k = (1..g.order())
                .find(|&k| antidimension(&g, k, ell, flavor).unwrap().is_some())
                .unwrap();
            prop_assert_eq!(report.k, smallest_k);
        }
    }

    // Bad sets are exactly the value-1 sets, in (size, lex) order.
    #[test]
    fn bad_sets_are_exactly_value_one(g in arb_graph(12), ell in 1..=2usize) {
        let ell = ell.min(g.order() - 1);
        let bad = enumerate_bad_sets(&g, ell).unwrap();
        let mut expected: Vec<Vec<usize>> = Vec::new();
        for size in 1..=ell {
            for members in subsets_up_to(g.order(), size) {
                if members.len() == size
                    && naive_antiresolving_value(&g, &members, Flavor::Adjacency) == 1
                {
                    expected.push(members);
                }
            }
        }
        let got: Vec<Vec<usize>> = bad.iter().map(|s| s.members().to_vec()).collect();
        prop_assert_eq!(got, expected);
    }

    // A graph that satisfies (k, ell)-adjacency anonymity is a valid
    // published graph for any original over the same or fewer vertices.
    #[test]
    fn anonymous_graph_accepts_any_original(g in arb_graph(10), seed in any::<u64>()) {
        let ell = 2.min(g.order() - 1);
        let k = anonymity_value(&g, ell, Flavor::Adjacency).unwrap().k;
        let n0 = 2 + (seed % g.order() as u64) as usize;
        let g0 = erdos_renyi(n0.min(g.order()), 0.4, seed).unwrap();
        let check = is_transformation(&g0, &g, k, ell, Flavor::Adjacency).unwrap();
        prop_assert!(check.holds);
    }
}

// Witness determinism across thread counts on a fixed corpus.
#[test]
fn parallel_scan_is_deterministic() {
    for g in er_corpus(12, 6, 14, 900) {
        for ell in 1..=2 {
            let serial = anonymity_value(&g, ell, Flavor::Adjacency).unwrap();
            for threads in [2, 3, 8] {
                let parallel = antiresolve_core::anonymity_value_with_threads(
                    &g,
                    ell,
                    Flavor::Adjacency,
                    threads,
                )
                .unwrap();
                assert_eq!(serial.k, parallel.k);
                assert_eq!(serial.witness, parallel.witness);
            }
        }
    }
}

#[test]
fn transformation_counterexample_is_lex_first() {
    let g = antiresolve_core::graph::path(4);
    // path to itself: {0} is the first bad singleton on both sides.
    let check = is_transformation(&g, &g, 2, 2, Flavor::Adjacency).unwrap();
    assert!(!check.holds);
    assert_eq!(check.counterexample.unwrap().probe.members(), &[0]);
}
