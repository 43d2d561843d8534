//! Greedy edge addition that turns every 1-adjacency antiresolving set of
//! size at most `ell` into a set with value >= 2, without re-breaking sets
//! repaired earlier. The pair (input, output) is a (2, ell)-adjacency
//! anonymous transformation.

use serde::Serialize;

use crate::antiresolving::enumerate_bad_sets;
use crate::edit::EditScript;
use crate::error::Error;
use crate::graph::Graph;
use crate::partition::partition;
use crate::probe::{Flavor, ProbeSet};

/// Distance-based skipping of the re-break check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PruneMode {
    Off,
    On,
    /// Run both the pruned and the exhaustive check on every query and fail
    /// on any disagreement.
    Paranoid,
}

/// Counters for the re-break guard.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct GuardStats {
    /// Candidate edges submitted to the guard.
    pub queries: u64,
    /// Fixed sets actually re-evaluated.
    pub checked: u64,
    /// Fixed sets skipped because every member sits more than two hops from
    /// both endpoints of the candidate edge.
    pub skipped: u64,
    /// Fixed sets evaluated by the shadow exhaustive pass (paranoid mode).
    pub checked_exhaustive: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ScoredPair {
    pub u: usize,
    pub v: usize,
    pub score: usize,
}

/// Candidate non-edges, highest score first, ties in pair-lex order. Only
/// pairs with exactly one endpoint in some bad set qualify: any other
/// addition leaves every representation toward every bad set unchanged.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CandidatePool {
    entries: Vec<ScoredPair>,
}

impl CandidatePool {
    pub fn entries(&self) -> &[ScoredPair] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Per-set data reused while scoring: which outside vertices form singleton
/// classes.
struct BadSetMeta {
    singleton: Vec<bool>,
}

fn bad_set_meta(g: &Graph, bad: &[ProbeSet]) -> Vec<BadSetMeta> {
    bad.iter()
        .map(|s| {
            let p = partition(g, s, Flavor::Adjacency).expect("bad set is a valid probe");
            let mut singleton = vec![false; g.order()];
            for (_, members) in p.classes() {
                if members.len() == 1 {
                    singleton[members[0]] = true;
                }
            }
            BadSetMeta { singleton }
        })
        .collect()
}

fn score_with_meta(bad: &[ProbeSet], meta: &[BadSetMeta], u: usize, v: usize) -> usize {
    bad.iter()
        .zip(meta)
        .map(|(s, m)| {
            let mut hits = 0;
            if s.contains(u) && !s.contains(v) && m.singleton[v] {
                hits += 1;
            }
            if s.contains(v) && !s.contains(u) && m.singleton[u] {
                hits += 1;
            }
            hits
        })
        .sum()
}

/// Number of (bad set, orientation) incidences where one endpoint lies in
/// the set and the other is uniquely identified by it. Higher scores mark
/// additions more likely to blur a unique fingerprint.
pub fn score_pair(g: &Graph, bad: &[ProbeSet], pair: (usize, usize)) -> usize {
    let meta = bad_set_meta(g, bad);
    score_with_meta(bad, &meta, pair.0, pair.1)
}

/// Build the scored candidate pool for `g` against its bad sets.
pub fn candidate_pairs(g: &Graph, bad: &[ProbeSet]) -> CandidatePool {
    let n = g.order();
    let meta = bad_set_meta(g, bad);
    let mut entries = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if g.has_edge(u, v) {
                continue;
            }
            let qualifies = bad.iter().any(|s| s.contains(u) != s.contains(v));
            if !qualifies {
                continue;
            }
            entries.push(ScoredPair {
                u,
                v,
                score: score_with_meta(bad, &meta, u, v),
            });
        }
    }
    entries.sort_by(|a, b| b.score.cmp(&a.score).then_with(|| (a.u, a.v).cmp(&(b.u, b.v))));
    CandidatePool { entries }
}

/// Greedy loop state: the original bad sets split into those still bad in
/// the current graph and those already repaired ("fixed").
pub struct GreedyState {
    base: Graph,
    current: Graph,
    prune: PruneMode,
    bad_sets: Vec<ProbeSet>,
    still_bad: Vec<bool>,
    stats: GuardStats,
}

impl GreedyState {
    pub fn new(g: &Graph, ell: usize, prune: PruneMode) -> Result<Self, Error> {
        let bad_sets = enumerate_bad_sets(g, ell)?;
        let still_bad = vec![true; bad_sets.len()];
        Ok(GreedyState {
            base: g.clone(),
            current: g.clone(),
            prune,
            bad_sets,
            still_bad,
            stats: GuardStats::default(),
        })
    }

    /// State for an arbitrary intermediate graph; used to probe the guard in
    /// isolation.
    pub fn with_current(g: &Graph, current: Graph, ell: usize, prune: PruneMode) -> Result<Self, Error> {
        if g.order() != current.order() {
            return Err(Error::OrderMismatch {
                left: g.order(),
                right: current.order(),
            });
        }
        let bad_sets = enumerate_bad_sets(g, ell)?;
        let still_bad = bad_sets
            .iter()
            .map(|s| Ok(partition(&current, s, Flavor::Adjacency)?.k_value() == 1))
            .collect::<Result<Vec<_>, Error>>()?;
        Ok(GreedyState {
            base: g.clone(),
            current,
            prune,
            bad_sets,
            still_bad,
            stats: GuardStats::default(),
        })
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn current(&self) -> &Graph {
        &self.current
    }

    pub fn bad_sets(&self) -> &[ProbeSet] {
        &self.bad_sets
    }

    pub fn bad_remaining(&self) -> impl Iterator<Item = &ProbeSet> {
        self.bad_sets
            .iter()
            .zip(&self.still_bad)
            .filter_map(|(s, &bad)| bad.then_some(s))
    }

    pub fn fixed(&self) -> impl Iterator<Item = &ProbeSet> {
        self.bad_sets
            .iter()
            .zip(&self.still_bad)
            .filter_map(|(s, &bad)| (!bad).then_some(s))
    }

    pub fn remaining_count(&self) -> usize {
        self.still_bad.iter().filter(|&&b| b).count()
    }

    pub fn stats(&self) -> &GuardStats {
        &self.stats
    }

    /// Would adding `pair` make some repaired set 1-adjacency antiresolving
    /// again? With pruning on, fixed sets whose members all sit more than
    /// two hops from both endpoints are skipped. Paranoid mode shadows the
    /// pruned scan with an exhaustive one and fails on disagreement.
    pub fn breaks_fixed_sets(&mut self, pair: (usize, usize)) -> Result<bool, Error> {
        let (u, v) = if pair.0 < pair.1 { pair } else { (pair.1, pair.0) };
        let candidate = self.current.add_edge(u, v)?;
        self.stats.queries += 1;

        let fixed: Vec<&ProbeSet> = self
            .bad_sets
            .iter()
            .zip(&self.still_bad)
            .filter_map(|(s, &bad)| (!bad).then_some(s))
            .collect();

        let scan = |far: Option<(&[u32], &[u32])>,
                    short_circuit: bool,
                    checked: &mut u64,
                    skipped: &mut u64|
         -> Result<bool, Error> {
            let mut broken = false;
            for s in &fixed {
                if let Some((du, dv)) = far {
                    if s.members().iter().all(|&w| du[w] > 2 && dv[w] > 2) {
                        *skipped += 1;
                        continue;
                    }
                }
                *checked += 1;
                if partition(&candidate, s, Flavor::Adjacency)?.k_value() == 1 {
                    broken = true;
                    if short_circuit {
                        break;
                    }
                }
            }
            Ok(broken)
        };

        match self.prune {
            PruneMode::Off => {
                let mut skipped = 0;
                scan(None, true, &mut self.stats.checked, &mut skipped)
            }
            PruneMode::On => {
                let du = self.current.bfs_distances(u);
                let dv = self.current.bfs_distances(v);
                scan(Some((&du, &dv)), true, &mut self.stats.checked, &mut self.stats.skipped)
            }
            PruneMode::Paranoid => {
                let du = self.current.bfs_distances(u);
                let dv = self.current.bfs_distances(v);
                let pruned = scan(
                    Some((&du, &dv)),
                    false,
                    &mut self.stats.checked,
                    &mut self.stats.skipped,
                )?;
                let mut skipped = 0;
                let exhaustive = scan(None, false, &mut self.stats.checked_exhaustive, &mut skipped)?;
                if pruned != exhaustive {
                    return Err(Error::PruneDisagreement { u, v });
                }
                Ok(pruned)
            }
        }
    }

    /// Add the edge and refresh which original bad sets remain bad. The
    /// caller is responsible for having guarded the pair first.
    pub fn commit_edge(&mut self, pair: (usize, usize)) -> Result<(), Error> {
        self.current = self.current.add_edge(pair.0, pair.1)?;
        for (idx, s) in self.bad_sets.iter().enumerate() {
            if self.still_bad[idx] {
                self.still_bad[idx] = partition(&self.current, s, Flavor::Adjacency)?.k_value() == 1;
            } else if cfg!(debug_assertions) {
                // The guard promised no fixed set re-breaks.
                debug_assert!(partition(&self.current, s, Flavor::Adjacency)?.k_value() >= 2);
            }
        }
        Ok(())
    }

    fn into_current(self) -> (Graph, GuardStats) {
        (self.current, self.stats)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TwoEllReport {
    pub ell: usize,
    pub prune: PruneMode,
    /// Size of the initial bad-set family.
    pub bad_initial: usize,
    /// Size of the initial candidate pool.
    pub pool_initial: usize,
    pub additions: usize,
    pub guard: GuardStats,
}

/// Repair every bad set by greedy scored edge additions. Fails with the
/// residual family when no admissible candidate remains; a false success is
/// worse than a loud failure for a privacy tool.
pub fn transform_2ell(
    g: &Graph,
    ell: usize,
    prune: PruneMode,
) -> Result<(Graph, EditScript, TwoEllReport), Error> {
    let mut state = GreedyState::new(g, ell, prune)?;
    let mut pool = candidate_pairs(g, state.bad_sets());
    let bad_initial = state.bad_sets().len();
    let pool_initial = pool.len();
    let mut script = EditScript::new();

    while state.remaining_count() > 0 {
        let mut chosen = None;
        for idx in 0..pool.entries.len() {
            let cand = pool.entries[idx];
            if !state.breaks_fixed_sets((cand.u, cand.v))? {
                chosen = Some(idx);
                break;
            }
        }
        let Some(idx) = chosen else {
            return Err(Error::Stuck {
                residual: state.bad_remaining().cloned().collect(),
                partial: Box::new(state.current().clone()),
                guard: *state.stats(),
            });
        };
        let cand = pool.entries.remove(idx);
        state.commit_edge((cand.u, cand.v))?;
        script.push_add(cand.u, cand.v);
    }

    let ell_report = TwoEllReport {
        ell,
        prune,
        bad_initial,
        pool_initial,
        additions: script.len(),
        guard: *state.stats(),
    };
    let (current, _) = state.into_current();
    Ok((current, script, ell_report))
}
