//! Antiresolving values, anonymity values, antidimensions, the family of
//! 1-adjacency antiresolving sets, transformation verification, and the
//! closed-form value for single-probe adversaries.

use std::time::{Duration, Instant};

use serde::Serialize;

use crate::error::Error;
use crate::graph::Graph;
use crate::partition::partition;
use crate::probe::{Flavor, ProbeSet};
use crate::subsets::{for_each_subset, for_each_subset_with_first};

/// The k for which `s` is exactly a k-(adjacency-)antiresolving set: the
/// smallest number of outside vertices sharing any single representation.
pub fn antiresolving_k(g: &Graph, s: &ProbeSet, flavor: Flavor) -> Result<usize, Error> {
    partition(g, s, flavor).map(|p| p.k_value())
}

/// Minimum cardinality (up to `max_size`) of a set whose antiresolving value
/// is exactly `k`, by exhaustive enumeration in (size, lex) order. `None`
/// when no such set exists within the bound.
pub fn antidimension(g: &Graph, k: usize, max_size: usize, flavor: Flavor) -> Result<Option<usize>, Error> {
    let n = g.order();
    if n < 2 {
        return Err(Error::GraphTooSmall { n, min: 2 });
    }
    let cap = max_size.min(n - 1);
    for size in 1..=cap {
        let mut found = false;
        for_each_subset(n, size, &mut |members| {
            let s = ProbeSet::from_sorted(members.to_vec());
            let value = partition(g, &s, flavor).expect("enumerated probe is valid").k_value();
            found = value == k;
            !found
        });
        if found {
            return Ok(Some(size));
        }
    }
    Ok(None)
}

/// Result of scanning every probe set of size at most `ell`.
#[derive(Debug, Clone, Serialize)]
pub struct AnonymityReport {
    pub mode: Flavor,
    pub ell: usize,
    /// Smallest antiresolving value over all probe sets of size <= ell:
    /// the graph satisfies (k, ell)-(adjacency-)anonymity for exactly this k.
    pub k: usize,
    /// First minimiser in (size, lex) enumeration order.
    pub witness: ProbeSet,
    pub sets_examined: u64,
    #[serde(skip)]
    pub elapsed: Duration,
}

#[derive(Debug)]
struct ScanOutcome {
    best_k: usize,
    witness: Vec<usize>,
    examined: u64,
}

/// Scan every subset of `0..n` with the given size and first element,
/// tracking the first minimiser. Stops once a value of 1 is seen (nothing
/// can beat it).
fn scan_chunk(g: &Graph, flavor: Flavor, size: usize, first: usize) -> ScanOutcome {
    let mut outcome = ScanOutcome {
        best_k: usize::MAX,
        witness: Vec::new(),
        examined: 0,
    };
    for_each_subset_with_first(g.order(), size, first, &mut |members| {
        let s = ProbeSet::from_sorted(members.to_vec());
        let value = partition(g, &s, flavor).expect("enumerated probe is valid").k_value();
        outcome.examined += 1;
        if value < outcome.best_k {
            outcome.best_k = value;
            outcome.witness = members.to_vec();
        }
        outcome.best_k > 1
    });
    outcome
}

/// (k, ell)-(adjacency-)anonymity value: the minimum antiresolving value
/// over all probe sets of size at most `ell`, with the (size, lex)-first
/// witness. Single-threaded.
pub fn anonymity_value(g: &Graph, ell: usize, flavor: Flavor) -> Result<AnonymityReport, Error> {
    anonymity_value_with_threads(g, ell, flavor, 1)
}

/// Parallel variant. Work is split into (size, first-element) chunks merged
/// in enumeration order, so any thread count returns the same k and witness
/// as the serial scan.
pub fn anonymity_value_with_threads(
    g: &Graph,
    ell: usize,
    flavor: Flavor,
    threads: usize,
) -> Result<AnonymityReport, Error> {
    let n = g.order();
    if ell < 1 || ell >= n {
        return Err(Error::InvalidEll { ell, n });
    }
    let started = Instant::now();
    let threads = threads.max(1);

    let chunks: Vec<(usize, usize)> = (1..=ell)
        .flat_map(|size| (0..=(n - size)).map(move |first| (size, first)))
        .collect();

    let outcomes: Vec<ScanOutcome> = if threads == 1 {
        let mut out = Vec::with_capacity(chunks.len());
        for &(size, first) in &chunks {
            let outcome = scan_chunk(g, flavor, size, first);
            let found_floor = outcome.best_k == 1;
            out.push(outcome);
            if found_floor {
                break;
            }
        }
        out
    } else {
        let mut slots: Vec<Option<ScanOutcome>> = Vec::new();
        slots.resize_with(chunks.len(), || None);
        std::thread::scope(|scope| {
            let mut handles = Vec::new();
            for worker in 0..threads {
                let chunks = &chunks;
                handles.push(scope.spawn(move || {
                    chunks
                        .iter()
                        .enumerate()
                        .skip(worker)
                        .step_by(threads)
                        .map(|(idx, &(size, first))| (idx, scan_chunk(g, flavor, size, first)))
                        .collect::<Vec<_>>()
                }));
            }
            for handle in handles {
                for (idx, outcome) in handle.join().expect("scan worker panicked") {
                    slots[idx] = Some(outcome);
                }
            }
        });
        slots.into_iter().flatten().collect()
    };

    let mut best_k = usize::MAX;
    let mut witness = Vec::new();
    let mut examined = 0;
    for outcome in &outcomes {
        examined += outcome.examined;
        if outcome.best_k < best_k {
            best_k = outcome.best_k;
            witness = outcome.witness.clone();
        }
    }
    debug_assert!((1..usize::MAX).contains(&best_k));

    Ok(AnonymityReport {
        mode: flavor,
        ell,
        k: best_k,
        witness: ProbeSet::from_sorted(witness),
        sets_examined: examined,
        elapsed: started.elapsed(),
    })
}

/// All 1-adjacency antiresolving sets of size at most `ell`, in (size, lex)
/// order. These are the probe sets that pin some vertex down uniquely.
pub fn enumerate_bad_sets(g: &Graph, ell: usize) -> Result<Vec<ProbeSet>, Error> {
    let n = g.order();
    if ell < 1 || ell >= n {
        return Err(Error::InvalidEll { ell, n });
    }
    let mut bad = Vec::new();
    for size in 1..=ell {
        for_each_subset(n, size, &mut |members| {
            let s = ProbeSet::from_sorted(members.to_vec());
            if partition(g, &s, Flavor::Adjacency).expect("enumerated probe is valid").k_value() == 1 {
                bad.push(s);
            }
            true
        });
    }
    Ok(bad)
}

/// A probe set violating a transformation target, with its values on both
/// sides.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub probe: ProbeSet,
    pub k_original: usize,
    pub k_published: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TransformationCheck {
    pub holds: bool,
    pub counterexample: Option<Counterexample>,
}

/// Decide whether `(g1, g2)` is a (k, ell)-(adjacency-)anonymous
/// transformation: every probe set over the shared ids whose value in `g1`
/// falls below `k` must reach at least `k` in `g2`. On failure the first
/// violating set in (size, lex) order is returned.
pub fn is_transformation(
    g1: &Graph,
    g2: &Graph,
    k: usize,
    ell: usize,
    flavor: Flavor,
) -> Result<TransformationCheck, Error> {
    if ell < 1 {
        return Err(Error::InvalidEll {
            ell,
            n: g1.order().min(g2.order()),
        });
    }
    // Shared vertices by id; probes must stay proper subsets of both graphs.
    let common = g1.order().min(g2.order());
    let max_size = ell.min(common).min(g1.order().saturating_sub(1)).min(g2.order().saturating_sub(1));

    let mut violation: Option<Counterexample> = None;
    for size in 1..=max_size {
        for_each_subset(common, size, &mut |members| {
            let s = ProbeSet::from_sorted(members.to_vec());
            let k1 = partition(g1, &s, flavor).expect("probe valid in g1").k_value();
            if k1 < k {
                let k2 = partition(g2, &s, flavor).expect("probe valid in g2").k_value();
                if k2 < k {
                    violation = Some(Counterexample {
                        probe: s,
                        k_original: k1,
                        k_published: k2,
                    });
                    return false;
                }
            }
            true
        });
        if violation.is_some() {
            break;
        }
    }
    Ok(TransformationCheck {
        holds: violation.is_none(),
        counterexample: violation,
    })
}

/// Closed-form (k, 1)-adjacency anonymity value, dispatching on the
/// isolated/dominant vertex structure. Equals the brute-force scan of all
/// singleton probes.
pub fn k1_value_formula(g: &Graph) -> Result<usize, Error> {
    let n = g.order();
    if n < 2 {
        return Err(Error::GraphTooSmall { n, min: 2 });
    }
    // Complete and empty graphs: every singleton leaves one class of n-1.
    if g.is_complete() || g.is_empty_graph() {
        return Ok(n - 1);
    }
    let classes = g.classify_vertices();
    if !classes.dominant.is_empty() {
        // Every non-dominant vertex keeps its full degree, and its
        // non-neighbours all live among the non-dominant rest.
        let rest: Vec<usize> = (0..n).filter(|&v| g.degree(v) < n - 1).collect();
        let (sub, _) = g.induced_subgraph(&rest).expect("vertex ids valid");
        let sub_max = sub.classify_vertices().max_degree;
        Ok(classes.min_degree.min(rest.len() - sub_max - 1))
    } else if !classes.isolated.is_empty() {
        let rest: Vec<usize> = (0..n).filter(|&v| g.degree(v) > 0).collect();
        let (sub, _) = g.induced_subgraph(&rest).expect("vertex ids valid");
        let sub_min = sub.classify_vertices().min_degree;
        Ok(sub_min.min(n - classes.max_degree - 1))
    } else {
        Ok(classes.min_degree.min(n - classes.max_degree - 1))
    }
}

/// Ceiling on achievable (k, 1)-adjacency anonymity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum K1Bound {
    /// Non-complete, non-empty graphs cannot exceed `floor((n-1)/2)`.
    Bounded(usize),
    /// Complete and empty graphs reach `n - ell` for every probe budget.
    Unbounded,
}

pub fn k1_upper_bound(g: &Graph) -> Result<K1Bound, Error> {
    let n = g.order();
    if n < 2 {
        return Err(Error::GraphTooSmall { n, min: 2 });
    }
    if g.is_complete() || g.is_empty_graph() {
        Ok(K1Bound::Unbounded)
    } else {
        Ok(K1Bound::Bounded((n - 1) / 2))
    }
}
