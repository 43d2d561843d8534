//! Resistance analysis and perturbation of social graphs against active
//! (sybil-based) re-identification.
//!
//! An adversary who enrols a probe set `S` of fake vertices learns, for
//! every other vertex, its vector of distances (metric) or adjacencies
//! toward `S`. The vertices outside `S` fall into equivalence classes of
//! equal vectors; the smallest class size is the antiresolving value of
//! `S`, and the minimum over all probe sets of size at most `ell` is the
//! graph's `(k, ell)`-anonymity value. This crate computes those
//! quantities exactly and perturbs graphs by edge edits so that every probe
//! set that was dangerous in the original is harmless in the output:
//!
//! - [`transform_k1`]: degree-window repair for single-probe adversaries,
//!   with proven bounds on the number of edits.
//! - [`transform_2ell`]: greedy scored edge addition fixing every
//!   1-adjacency antiresolving set of size at most `ell`.
//!
//! Everything is deterministic: enumeration runs in (size, lex) order,
//! every tie breaks toward the smallest id, and random corpora come from a
//! seeded self-contained generator.

pub mod antiresolving;
mod bits;
pub mod edgelist;
pub mod edit;
pub mod error;
pub mod fixtures;
pub mod generate;
pub mod graph;
pub mod loss;
pub mod partition;
pub mod probe;
mod subsets;
pub mod transform_2ell;
pub mod transform_k1;

pub use antiresolving::{
    anonymity_value, anonymity_value_with_threads, antidimension, antiresolving_k,
    enumerate_bad_sets, is_transformation, k1_upper_bound, k1_value_formula, AnonymityReport,
    Counterexample, K1Bound, TransformationCheck,
};
pub use edgelist::{parse_edge_list, write_edge_list, ParseError, ParseErrorKind};
pub use edit::{Edit, EditOp, EditScript};
pub use error::{EditPhase, Error};
pub use generate::erdos_renyi;
pub use graph::{Graph, VertexClassReport, INF};
pub use loss::{compute_loss, LossReport};
pub use partition::{partition, representation, ClassPartition};
pub use probe::{Flavor, ProbeSet, Representation};
pub use transform_2ell::{
    candidate_pairs, score_pair, transform_2ell, CandidatePool, GreedyState, GuardStats,
    PruneMode, ScoredPair, TwoEllReport,
};
pub use transform_k1::{bounds_added, bounds_removed, transform_k1, EditBounds, K1Report};
