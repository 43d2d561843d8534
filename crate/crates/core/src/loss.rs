//! Information-loss accounting for a graph perturbation. The default cost
//! is the edge edit distance |E Δ E'|, the quantity the edit-count bounds
//! of the transformations are stated in.

use serde::Serialize;

use crate::error::Error;
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LossReport {
    /// |E Δ E'|, the default loss.
    pub edge_edit_distance: usize,
    /// Edges present in the published graph only.
    pub additions: usize,
    /// Edges present in the original graph only.
    pub removals: usize,
    /// L1 distance between the sorted degree sequences.
    pub degree_shift: usize,
    /// Signed density change, published minus original.
    pub density_delta: f64,
}

/// Compare two graphs over the same vertex set.
pub fn compute_loss(original: &Graph, published: &Graph) -> Result<LossReport, Error> {
    let n = original.order();
    if n != published.order() {
        return Err(Error::OrderMismatch {
            left: n,
            right: published.order(),
        });
    }

    // Both edge lists are sorted; count the two one-sided differences.
    let mut additions = 0;
    let mut removals = 0;
    let (mut i, mut j) = (0, 0);
    let (ea, eb) = (original.edges(), published.edges());
    while i < ea.len() || j < eb.len() {
        match (ea.get(i), eb.get(j)) {
            (Some(a), Some(b)) if a == b => {
                i += 1;
                j += 1;
            }
            (Some(a), Some(b)) if a < b => {
                removals += 1;
                i += 1;
            }
            (Some(_), Some(_)) => {
                additions += 1;
                j += 1;
            }
            (Some(_), None) => {
                removals += 1;
                i += 1;
            }
            (None, Some(_)) => {
                additions += 1;
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }

    let mut da: Vec<usize> = (0..n).map(|v| original.degree(v)).collect();
    let mut db: Vec<usize> = (0..n).map(|v| published.degree(v)).collect();
    da.sort_unstable();
    db.sort_unstable();
    let degree_shift = da.iter().zip(&db).map(|(&a, &b)| a.abs_diff(b)).sum();

    let pairs = n * n.saturating_sub(1) / 2;
    let density_delta = if pairs == 0 {
        0.0
    } else {
        (published.size() as f64 - original.size() as f64) / pairs as f64
    };

    Ok(LossReport {
        edge_edit_distance: additions + removals,
        additions,
        removals,
        degree_shift,
        density_delta,
    })
}
