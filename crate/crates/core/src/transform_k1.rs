//! Degree-window repair: turn a graph into one where every single-probe
//! adversary is confused among at least `k` candidates, by raising low
//! degrees with edge additions and then lowering high degrees with edge
//! removals. The pair (input, output) is a (k, 1)-adjacency anonymous
//! transformation.
//!
//! A singleton probe `{v}` splits the other vertices into neighbours and
//! non-neighbours, so `{v}` pins someone down to fewer than `k` candidates
//! exactly when `1 <= deg(v) < k` or `n-k-1 < deg(v) <= n-2`. Those two
//! degree ranges are the repair targets L and H.

use serde::Serialize;

use crate::antiresolving::anonymity_value;
use crate::bits::BitSet;
use crate::edit::EditScript;
use crate::error::{EditPhase, Error};
use crate::graph::Graph;
use crate::probe::Flavor;

/// Edit-count bounds bracketing the two repair phases.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EditBounds {
    /// Total degree deficit of low vertices in the input.
    pub missing_initial: usize,
    pub added_lower: usize,
    pub added_upper: usize,
    /// Total degree surplus of the (originally) high vertices, measured
    /// after the addition phase.
    pub excess_after_additions: usize,
    pub removed_lower: usize,
    pub removed_upper: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct K1Report {
    /// Adjacency anonymity value of the input for a single probe.
    pub k0: usize,
    pub k: usize,
    /// Vertices with `1 <= deg < k` in the input.
    pub low_set_initial: Vec<usize>,
    /// Vertices with `n-k-1 < deg <= n-2` in the input.
    pub high_set_initial: Vec<usize>,
    pub additions: usize,
    pub removals: usize,
    pub bounds: EditBounds,
}

/// Bounds on the number of edges the addition phase inserts: the aggregate
/// deficit can shrink by at most 2 per edge (both endpoints low) and at
/// least 1 (one endpoint low).
pub fn bounds_added(g: &Graph, k: usize) -> (usize, usize) {
    let missing: usize = (0..g.order())
        .map(|v| {
            let d = g.degree(v);
            if d >= 1 && d < k {
                k - d
            } else {
                0
            }
        })
        .sum();
    (missing.div_ceil(2), missing)
}

/// Bounds on the number of edges the removal phase deletes. Membership in
/// the high set is decided by input degrees; the surplus per vertex is
/// measured on the post-addition graph. Vertices the addition phase pushed
/// to dominant are out of the removal phase's reach and contribute nothing;
/// remaining non-positive terms clamp to zero.
pub fn bounds_removed(g_after_additions: &Graph, g: &Graph, k: usize) -> (usize, usize) {
    let n = g.order();
    let excess: usize = (0..n)
        .map(|v| {
            let d0 = g.degree(v);
            let dt = g_after_additions.degree(v);
            if d0 + k + 1 > n && d0 + 2 <= n && dt + 2 <= n {
                k.saturating_sub(n - dt - 1)
            } else {
                0
            }
        })
        .sum();
    (excess.div_ceil(2), excess)
}

struct Working {
    n: usize,
    adj: Vec<BitSet>,
    degree: Vec<usize>,
}

impl Working {
    fn from_graph(g: &Graph) -> Self {
        Working {
            n: g.order(),
            adj: (0..g.order()).map(|v| g.adjacency_row(v).clone()).collect(),
            degree: (0..g.order()).map(|v| g.degree(v)).collect(),
        }
    }

    fn add(&mut self, u: usize, v: usize) {
        debug_assert!(!self.adj[u].contains(v));
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        self.degree[u] += 1;
        self.degree[v] += 1;
    }

    fn remove(&mut self, u: usize, v: usize) {
        debug_assert!(self.adj[u].contains(v));
        self.adj[u].remove(v);
        self.adj[v].remove(u);
        self.degree[u] -= 1;
        self.degree[v] -= 1;
    }

    fn to_graph(&self) -> Graph {
        let edges = (0..self.n).flat_map(|u| self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v)));
        Graph::build(self.n, edges).expect("working edges are valid")
    }
}

/// First id attaining the maximum degree.
fn argmax_degree(candidates: impl Iterator<Item = usize>, degree: &[usize]) -> Option<usize> {
    let mut best: Option<usize> = None;
    for v in candidates {
        if best.is_none_or(|b| degree[v] > degree[b]) {
            best = Some(v);
        }
    }
    best
}

/// First id attaining the minimum degree.
fn argmin_degree(candidates: impl Iterator<Item = usize>, degree: &[usize]) -> Option<usize> {
    let mut best: Option<usize> = None;
    for v in candidates {
        if best.is_none_or(|b| degree[v] < degree[b]) {
            best = Some(v);
        }
    }
    best
}

/// Run the repair toward target `k`. Returns the transformed graph, the
/// edit script, and the bounds report. Targets at or below the input's own
/// value leave both repair sets empty and the graph untouched.
///
/// All argmax/argmin selections break ties toward the smallest vertex id,
/// so identical inputs always produce identical scripts.
pub fn transform_k1(g: &Graph, k: usize) -> Result<(Graph, EditScript, K1Report), Error> {
    let n = g.order();
    if g.is_complete() || g.is_empty_graph() {
        return Err(Error::DegenerateGraph);
    }
    // Non-complete, non-empty implies n >= 3.
    let cap = (n - 1) / 2;
    if k < 1 || k > cap {
        return Err(Error::TargetOutOfRange { k, max: cap });
    }
    let k0 = anonymity_value(g, 1, Flavor::Adjacency)?.k;

    let low_window = |d: usize| d >= 1 && d < k;
    let high_window = |d: usize| d + k + 1 > n && d + 2 <= n;
    // A final degree is safe for an originally problematic vertex when it
    // sits on an extreme or inside [k, n-k-1].
    let safe_degree = |d: usize| d == 0 || d == n - 1 || (d >= k && d + k < n);

    let mut low = BitSet::new(n);
    let mut low_initial = BitSet::new(n);
    let mut high_initial = BitSet::new(n);
    let mut high_members: Vec<usize> = Vec::new();
    for v in 0..n {
        if low_window(g.degree(v)) {
            low.insert(v);
            low_initial.insert(v);
        }
        if high_window(g.degree(v)) {
            high_members.push(v);
            high_initial.insert(v);
        }
    }
    let low_set_initial: Vec<usize> = low.iter().collect();
    let high_set_initial = high_members.clone();

    let mut work = Working::from_graph(g);
    let mut script = EditScript::new();

    let missing = |work: &Working, low: &BitSet| -> usize {
        low.iter().map(|v| k - work.degree[v]).sum()
    };

    // Raising the degree of an already-repaired low vertex must not push it
    // past the window top (unless it lands on dominant); high-set members
    // may always be raised, the removal phase re-filters them afterwards.
    let increment_safe = |work: &Working, low: &BitSet, y: usize| -> bool {
        if !low_initial.contains(y) || low.contains(y) {
            return true;
        }
        safe_degree(work.degree[y] + 1)
    };

    // Addition phase: prefer edges joining two low vertices, else attach the
    // highest-degree low vertex to the lowest-degree outside vertex.
    while !low.is_empty() {
        let before = missing(&work, &low);
        let pairable = low.iter().filter(|&x| low.any_outside(&work.adj[x], x));
        let (u, v) = match argmax_degree(pairable, &work.degree) {
            Some(u) => {
                let partners = low.iter().filter(|&y| y != u && !work.adj[u].contains(y));
                let v = argmax_degree(partners, &work.degree).expect("pairable vertex has a partner");
                (u, v)
            }
            None => {
                let u = argmax_degree(low.iter(), &work.degree).expect("low set non-empty");
                let outside = (0..n).filter(|&y| {
                    !low.contains(y)
                        && y != u
                        && !work.adj[u].contains(y)
                        && increment_safe(&work, &low, y)
                });
                let v = argmin_degree(outside, &work.degree).ok_or(Error::NoEligiblePartner {
                    vertex: u,
                    phase: EditPhase::Additions,
                })?;
                (u, v)
            }
        };
        work.add(u, v);
        script.push_add(u, v);
        if !low_window(work.degree[u]) {
            low.remove(u);
        }
        if low.contains(v) && !low_window(work.degree[v]) {
            low.remove(v);
        }
        let after = missing(&work, &low);
        debug_assert!(after < before && before - after <= 2);
    }

    let graph_after_additions = work.to_graph();
    let additions = script.len();

    // Removal phase works on the original high set filtered by current
    // degrees; additions may have pushed some members to dominant, which
    // takes them out of reach for good.
    let mut high = BitSet::new(n);
    for &v in &high_members {
        if high_window(work.degree[v]) {
            high.insert(v);
        }
    }

    let excess = |work: &Working, high: &BitSet| -> usize {
        high.iter().map(|v| k - (n - work.degree[v] - 1)).sum()
    };

    // Lowering the degree of an originally problematic vertex that has left
    // the working set must not re-enter a bad zone: a repaired high vertex
    // sitting exactly on the window bottom, or one the additions made
    // dominant, cannot afford an edge loss.
    let decrement_safe = |work: &Working, y: usize| -> bool {
        if !high_initial.contains(y) {
            return true;
        }
        safe_degree(work.degree[y] - 1)
    };

    // Removal phase: prefer edges joining two high vertices, else detach the
    // lowest-degree high vertex from its highest-degree neighbour that is
    // neither high nor originally low.
    while !high.is_empty() {
        let before = excess(&work, &high);
        let pairable = high.iter().filter(|&x| high.intersects(&work.adj[x]));
        let (u, v) = match argmin_degree(pairable, &work.degree) {
            Some(u) => {
                let partners = high.iter().filter(|&y| y != u && work.adj[u].contains(y));
                let v = argmin_degree(partners, &work.degree).expect("pairable vertex has a partner");
                (u, v)
            }
            None => {
                let u = argmin_degree(high.iter(), &work.degree).expect("high set non-empty");
                let neighbours = work.adj[u]
                    .iter()
                    .filter(|&y| {
                        !high.contains(y) && !low_initial.contains(y) && decrement_safe(&work, y)
                    })
                    .collect::<Vec<_>>();
                let v = argmax_degree(neighbours.into_iter(), &work.degree).ok_or(Error::NoEligiblePartner {
                    vertex: u,
                    phase: EditPhase::Removals,
                })?;
                (u, v)
            }
        };
        work.remove(u, v);
        script.push_remove(u, v);
        if !high_window(work.degree[u]) {
            high.remove(u);
        }
        if high.contains(v) && !high_window(work.degree[v]) {
            high.remove(v);
        }
        let after = excess(&work, &high);
        debug_assert!(after < before && before - after <= 2);
    }

    let transformed = work.to_graph();
    let removals = script.len() - additions;

    let (added_lower, added_upper) = bounds_added(g, k);
    let (removed_lower, removed_upper) = bounds_removed(&graph_after_additions, g, k);
    let report = K1Report {
        k0,
        k,
        low_set_initial,
        high_set_initial,
        additions,
        removals,
        bounds: EditBounds {
            missing_initial: added_upper,
            added_lower,
            added_upper,
            excess_after_additions: removed_upper,
            removed_lower,
            removed_upper,
        },
    };
    Ok((transformed, script, report))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::antiresolving::is_transformation;
    use crate::edit::EditOp;
    use crate::fixtures;
    use crate::graph::{complete, cycle, empty, Graph};

    #[test]
    fn two_matchings_fixture_hits_lower_bound() {
        let g = fixtures::fig4a();
        let (out, script, report) = transform_k1(&g, 2).unwrap();
        assert_eq!(report.additions, 2);
        assert_eq!(report.removals, 0);
        assert_eq!(bounds_added(&g, 2), (2, 4));
        // Both added edges join two low vertices.
        for e in script.edits() {
            assert_eq!(e.op, EditOp::Add);
            assert!(report.low_set_initial.contains(&e.u));
            assert!(report.low_set_initial.contains(&e.v));
        }
        // Low vertices all end on degree 2; the isolated vertex is untouched.
        for &v in &report.low_set_initial {
            assert_eq!(out.degree(v), 2);
        }
        assert_eq!(out.degree(0), 0);
        assert!(is_transformation(&g, &out, 2, 1, Flavor::Adjacency).unwrap().holds);
    }

    #[test]
    fn cycle_plus_pendant_pair_hits_upper_bound() {
        let g = fixtures::fig4b();
        let (out, script, report) = transform_k1(&g, 2).unwrap();
        assert_eq!(report.additions, 2);
        assert_eq!(bounds_added(&g, 2), (1, 2));
        // The two low vertices are adjacent, so every addition pairs a low
        // vertex with an outside one.
        for e in script.edits() {
            assert_eq!(e.op, EditOp::Add);
            assert!(report.low_set_initial.contains(&e.u) != report.low_set_initial.contains(&e.v));
        }
        assert!(is_transformation(&g, &out, 2, 1, Flavor::Adjacency).unwrap().holds);
    }

    #[test]
    fn cycle_already_inside_window_is_untouched() {
        let g = cycle(6);
        let (out, script, report) = transform_k1(&g, 2).unwrap();
        assert_eq!(out, g);
        assert!(script.is_empty());
        assert!(report.low_set_initial.is_empty());
        assert!(report.high_set_initial.is_empty());
        // No repair targets, no bounds.
        assert_eq!(bounds_added(&g, 2), (0, 0));
        assert_eq!(bounds_removed(&g, &g, 2), (0, 0));
    }

    #[test]
    fn rejects_degenerate_and_oversized_targets() {
        assert_eq!(transform_k1(&complete(5), 2).unwrap_err(), Error::DegenerateGraph);
        assert_eq!(transform_k1(&empty(5), 2).unwrap_err(), Error::DegenerateGraph);
        let g = fixtures::fig3();
        assert_eq!(
            transform_k1(&g, 6).unwrap_err(),
            Error::TargetOutOfRange { k: 6, max: 5 }
        );
        assert_eq!(
            transform_k1(&g, 0).unwrap_err(),
            Error::TargetOutOfRange { k: 0, max: 5 }
        );
    }

    #[test]
    fn removal_phase_on_two_high_vertices() {
        // Degrees [4, 4, 2, 2, 2, 2]: no low vertices, two high ones joined
        // by an edge, so one removal settles both.
        let g = Graph::build(
            6,
            [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 5), (4, 5)],
        )
        .unwrap();
        let (out, script, report) = transform_k1(&g, 2).unwrap();
        assert_eq!(report.additions, 0);
        assert_eq!(report.removals, 1);
        assert_eq!(bounds_removed(&g, &g, 2), (1, 2));
        assert_eq!(script.edits()[0], Edit { op: EditOp::Remove, u: 0, v: 1 });
        assert!(is_transformation(&g, &out, 2, 1, Flavor::Adjacency).unwrap().holds);
    }

    #[test]
    fn complement_of_two_matchings_mirrors_the_addition_case() {
        // Complement of the two-matchings fixture: removal-only run whose
        // bounds mirror (2, 4) from the addition case.
        let fig = fixtures::fig4a();
        let edges = (0..5)
            .flat_map(|u| (u + 1..5).map(move |v| (u, v)))
            .filter(|&(u, v)| !fig.has_edge(u, v));
        let g = Graph::build(5, edges).unwrap();
        let (out, _, report) = transform_k1(&g, 2).unwrap();
        assert_eq!(report.additions, 0);
        assert_eq!(report.removals, 2);
        assert_eq!(
            (report.bounds.removed_lower, report.bounds.removed_upper),
            (2, 4)
        );
        assert!(is_transformation(&g, &out, 2, 1, Flavor::Adjacency).unwrap().holds);
    }

    #[test]
    fn stuck_removal_raises_structured_error() {
        // Star plus one isolated vertex, k = 2: pairing the leaves repairs
        // the low set without ever touching the hub, whose neighbourhood is
        // then entirely the initial low set; the removal fallback has
        // nowhere to cut.
        let g = Graph::build(6, [(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        let err = transform_k1(&g, 2).unwrap_err();
        assert_eq!(
            err,
            Error::NoEligiblePartner {
                vertex: 0,
                phase: EditPhase::Removals
            }
        );
    }

    #[test]
    fn hub_escapes_through_dominance() {
        // A hub over five low vertices plus a pendant pair: the last low
        // repair can only attach to the hub, which pushes it to dominant,
        // a safe final state the removal phase then ignores.
        let g = Graph::build(7, [(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (1, 6)]).unwrap();
        let (out, script, report) = transform_k1(&g, 3).unwrap();
        assert_eq!(report.removals, 0);
        assert_eq!(out.degree(0), 6);
        assert!(script.edits().iter().all(|e| e.op == EditOp::Add));
        assert!(is_transformation(&g, &out, 3, 1, Flavor::Adjacency).unwrap().holds);
    }

    #[test]
    fn scripts_are_deterministic() {
        let g = fixtures::fig4b();
        let (out1, script1, _) = transform_k1(&g, 2).unwrap();
        let (out2, script2, _) = transform_k1(&g, 2).unwrap();
        assert_eq!(out1, out2);
        assert_eq!(script1, script2);
        // Replaying the script reproduces the output.
        assert_eq!(script1.apply(&g).unwrap(), out1);
    }

    use crate::edit::Edit;
}
