//! Seeded random-graph generation for test corpora.
//!
//! The generator is a self-contained SplitMix64 so that a given seed yields
//! the same graph on every platform and toolchain, which the deterministic
//! test corpora depend on.

use crate::error::Error;
use crate::graph::Graph;

/// SplitMix64 (Vigna). Small, fast, and fully specified by its constants.
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform draw from [0, 1).
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }
}

/// Erdős–Rényi G(n, p): each of the C(n, 2) pairs is drawn independently,
/// in lexicographic pair order, so the seed fully determines the graph.
pub fn erdos_renyi(n: usize, p: f64, seed: u64) -> Result<Graph, Error> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidProbability(p));
    }
    let mut rng = SplitMix64::new(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.next_f64() < p {
                edges.push((u, v));
            }
        }
    }
    Ok(Graph::build(n, edges).expect("generated edges are valid"))
}
