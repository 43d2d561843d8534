//! Error types shared across the crate.

use std::fmt;

use crate::probe::ProbeSet;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("vertex id {id} out of range for graph of order {n}")]
    IdOutOfRange { id: usize, n: usize },
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({u}, {v})")]
    DuplicateEdge { u: usize, v: usize },
    #[error("edge ({u}, {v}) already present")]
    EdgeExists { u: usize, v: usize },
    #[error("edge ({u}, {v}) not present")]
    EdgeMissing { u: usize, v: usize },
    #[error("probe set must not be empty")]
    EmptyProbeSet,
    #[error("duplicate vertex {0} in probe set")]
    DuplicateProbeVertex(usize),
    #[error("probe set must be a proper subset of the vertex set")]
    ProbeCoversGraph,
    #[error("vertex {0} cannot be represented against a probe set containing it")]
    ProbeContainsVertex(usize),
    #[error("ell={ell} out of range; need 1 <= ell < {n}")]
    InvalidEll { ell: usize, n: usize },
    #[error("graph of order {n} too small; need at least {min} vertices")]
    GraphTooSmall { n: usize, min: usize },
    #[error("graph must be neither complete nor empty")]
    DegenerateGraph,
    #[error("target k={k} out of range; admissible targets are 1..={max}")]
    TargetOutOfRange { k: usize, max: usize },
    #[error("no admissible edit partner for vertex {vertex} during the {phase} phase")]
    NoEligiblePartner { vertex: usize, phase: EditPhase },
    #[error("no admissible candidate edge left; {} set(s) remain 1-adjacency antiresolving", residual.len())]
    Stuck {
        residual: Vec<ProbeSet>,
        /// Graph as perturbed up to the point the pool ran dry.
        partial: Box<crate::graph::Graph>,
        /// Guard counters accumulated before the refusal.
        guard: crate::transform_2ell::GuardStats,
    },
    #[error("pruned and exhaustive guard verdicts disagree for candidate edge ({u}, {v})")]
    PruneDisagreement { u: usize, v: usize },
    #[error("graphs have different orders: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("edge probability {0} outside [0, 1]")]
    InvalidProbability(f64),
}

/// Which half of the degree repair an edit belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EditPhase {
    Additions,
    Removals,
}

impl fmt::Display for EditPhase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EditPhase::Additions => f.write_str("addition"),
            EditPhase::Removals => f.write_str("removal"),
        }
    }
}
