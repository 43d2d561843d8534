//! JSON report payloads. Field order is fixed by struct order and the
//! schema version bumps on breaking changes, so downstream scripts can rely
//! on the bytes. `elapsed_ms` is the only non-deterministic field.

use antiresolve_core::{
    Counterexample, EditBounds, EditScript, GuardStats, LossReport, PruneMode,
};
use serde::Serialize;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Serialize)]
pub struct AnalyzeReport {
    pub schema: u32,
    pub mode: &'static str,
    pub ell: usize,
    pub k: usize,
    pub witness: Vec<usize>,
    pub sets_examined: u64,
    pub elapsed_ms: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct TransformK1Report {
    pub schema: u32,
    pub op: &'static str,
    pub n: usize,
    pub k0: usize,
    pub k: usize,
    pub low_set_initial: Vec<usize>,
    pub high_set_initial: Vec<usize>,
    pub additions: usize,
    pub removals: usize,
    pub bounds: EditBounds,
    pub edits: EditScript,
    pub loss: LossReport,
    pub verified: bool,
    pub elapsed_ms: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct Transform2EllReport {
    pub schema: u32,
    pub op: &'static str,
    pub n: usize,
    pub ell: usize,
    pub prune: PruneMode,
    pub bad_initial: usize,
    pub pool_initial: usize,
    pub additions: usize,
    pub guard: GuardStats,
    /// Fraction of guard evaluations the distance filter skipped.
    pub prune_skip_fraction: f64,
    pub edits: EditScript,
    pub loss: LossReport,
    pub verified: bool,
    pub elapsed_ms: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub schema: u32,
    pub mode: &'static str,
    pub k: usize,
    pub ell: usize,
    pub holds: bool,
    pub counterexample: Option<Counterexample>,
}

#[derive(Debug, Clone, Serialize)]
pub struct LossJson {
    pub schema: u32,
    #[serde(flatten)]
    pub loss: LossReport,
}

pub fn skip_fraction(stats: &GuardStats) -> f64 {
    let total = stats.checked + stats.skipped;
    if total == 0 {
        0.0
    } else {
        stats.skipped as f64 / total as f64
    }
}
