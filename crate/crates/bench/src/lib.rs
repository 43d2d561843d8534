//! Shared corpus builders for the benchmarks.

use antiresolve_core::{erdos_renyi, Graph};

/// A fixed, seeded graph per (n, p) so benchmark runs are comparable.
pub fn bench_graph(n: usize, p: f64) -> Graph {
    erdos_renyi(n, p, 0xBE7C_0DE5).expect("valid probability")
}
