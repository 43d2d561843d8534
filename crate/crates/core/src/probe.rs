//! Probe sets and the representation vectors they induce.

use serde::Serialize;

use crate::error::Error;

/// Which representation a probe produces: exact hop counts or the
/// adjacency coarsening (1 = neighbour, 2 = anything further).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Flavor {
    Metric,
    Adjacency,
}

impl Flavor {
    pub fn as_str(self) -> &'static str {
        match self {
            Flavor::Metric => "metric",
            Flavor::Adjacency => "adjacency",
        }
    }
}

/// Ordered probe set: non-empty, strictly increasing vertex ids. The id
/// order doubles as the coordinate order of every representation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct ProbeSet {
    members: Vec<usize>,
}

impl ProbeSet {
    pub fn new(members: impl Into<Vec<usize>>) -> Result<Self, Error> {
        let mut members = members.into();
        if members.is_empty() {
            return Err(Error::EmptyProbeSet);
        }
        members.sort_unstable();
        for w in members.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateProbeVertex(w[0]));
            }
        }
        Ok(ProbeSet { members })
    }

    pub fn singleton(v: usize) -> Self {
        ProbeSet { members: vec![v] }
    }

    /// Members must already be strictly increasing.
    pub(crate) fn from_sorted(members: Vec<usize>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(!members.is_empty());
        ProbeSet { members }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    #[allow(clippy::len_without_is_empty)] // probe sets are never empty
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }
}

/// Distance vector of one vertex toward an ordered probe set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    pub flavor: Flavor,
    /// Metric flavor: hop counts with [`crate::graph::INF`] for unreachable
    /// probes. Adjacency flavor: values in `{1, 2}`.
    pub coords: Vec<u32>,
}
