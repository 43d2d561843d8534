//! Representation vectors and the equivalence-class partition they induce
//! on the vertices outside a probe set.

use std::collections::BTreeMap;

use crate::error::Error;
use crate::graph::Graph;
use crate::probe::{Flavor, ProbeSet, Representation};

/// The partition of `V \ S` under "equal representation with respect to S".
/// Two outside vertices land in the same class exactly when every probe
/// member sees them at the same (metric or adjacency) value, so the smallest
/// class size is the antiresolving value of `S`.
#[derive(Debug, Clone)]
pub struct ClassPartition {
    probe: ProbeSet,
    flavor: Flavor,
    /// Classes keyed by their shared representation, in coordinate-lex
    /// order; members ascend within each class.
    classes: Vec<(Representation, Vec<usize>)>,
    k_value: usize,
}

impl ClassPartition {
    pub fn probe(&self) -> &ProbeSet {
        &self.probe
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn classes(&self) -> &[(Representation, Vec<usize>)] {
        &self.classes
    }

    /// Size of the smallest class: the k for which the probe is exactly a
    /// k-(adjacency-)antiresolving set.
    pub fn k_value(&self) -> usize {
        self.k_value
    }

    pub fn class_of(&self, v: usize) -> Option<&[usize]> {
        self.classes
            .iter()
            .find(|(_, members)| members.binary_search(&v).is_ok())
            .map(|(_, members)| members.as_slice())
    }

    pub fn is_singleton_class(&self, v: usize) -> bool {
        self.class_of(v).is_some_and(|c| c.len() == 1)
    }
}

/// Representation of `u` with respect to `s`: coordinate `i` is the distance
/// (metric) or adjacency value of `u` toward the `i`-th probe member.
pub fn representation(g: &Graph, u: usize, s: &ProbeSet, flavor: Flavor) -> Result<Representation, Error> {
    g.check_vertex(u)?;
    for &w in s.members() {
        g.check_vertex(w)?;
    }
    if s.contains(u) {
        return Err(Error::ProbeContainsVertex(u));
    }
    let coords = match flavor {
        Flavor::Metric => {
            let dist = g.bfs_distances(u);
            s.members().iter().map(|&w| dist[w]).collect()
        }
        Flavor::Adjacency => s
            .members()
            .iter()
            .map(|&w| if g.has_edge(w, u) { 1 } else { 2 })
            .collect(),
    };
    Ok(Representation { flavor, coords })
}

/// Group `V \ S` by representation. Requires `S` to be a proper subset so
/// the complement is non-empty.
pub fn partition(g: &Graph, s: &ProbeSet, flavor: Flavor) -> Result<ClassPartition, Error> {
    for &w in s.members() {
        g.check_vertex(w)?;
    }
    if s.len() >= g.order() {
        return Err(Error::ProbeCoversGraph);
    }

    // Metric mode needs one BFS per probe member; adjacency mode reads
    // neighbourhood bits directly.
    let metric_rows: Option<Vec<Vec<u32>>> = match flavor {
        Flavor::Metric => Some(s.members().iter().map(|&w| g.bfs_distances(w)).collect()),
        Flavor::Adjacency => None,
    };

    let mut groups: BTreeMap<Vec<u32>, Vec<usize>> = BTreeMap::new();
    for x in 0..g.order() {
        if s.contains(x) {
            continue;
        }
        let coords: Vec<u32> = match &metric_rows {
            Some(rows) => rows.iter().map(|row| row[x]).collect(),
            None => s
                .members()
                .iter()
                .map(|&w| if g.has_edge(w, x) { 1 } else { 2 })
                .collect(),
        };
        groups.entry(coords).or_default().push(x);
    }

    let k_value = groups.values().map(Vec::len).min().expect("complement is non-empty");
    let classes = groups
        .into_iter()
        .map(|(coords, members)| (Representation { flavor, coords }, members))
        .collect();
    Ok(ClassPartition {
        probe: s.clone(),
        flavor,
        classes,
        k_value,
    })
}
