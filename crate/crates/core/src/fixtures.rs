//! Built-in example graphs used across the test-suites and runnable from
//! the CLI by name.
//!
//! The `fig2_*` trio lives on one shared 7-vertex universe: vertex 0 plays
//! the role common to all three graphs, ids 1..=3 only carry edges in
//! `fig2_g1`, and ids 4..=6 only in `fig2_g2`/`fig2_g3`. Ids outside a
//! graph's own role stay isolated, so transformation checks between any two
//! of the trio see exactly one structurally shared vertex.

use crate::graph::Graph;

pub const NAMES: [&str; 6] = ["fig2_g1", "fig2_g2", "fig2_g3", "fig3", "fig4a", "fig4b"];

/// Look a fixture up by name.
pub fn get(name: &str) -> Option<Graph> {
    match name {
        "fig2_g1" => Some(fig2_g1()),
        "fig2_g2" => Some(fig2_g2()),
        "fig2_g3" => Some(fig2_g3()),
        "fig3" => Some(fig3()),
        "fig4a" => Some(fig4a()),
        "fig4b" => Some(fig4b()),
        _ => None,
    }
}

/// Star: 0 adjacent to 1, 2, 3; ids 4..=6 isolated.
pub fn fig2_g1() -> Graph {
    Graph::build(7, [(0, 1), (0, 2), (0, 3)]).expect("fixture edges valid")
}

/// 0 adjacent to 4, 5, 6; 6 adjacent to 4 and 5; ids 1..=3 isolated.
pub fn fig2_g2() -> Graph {
    Graph::build(7, [(0, 4), (0, 5), (0, 6), (4, 6), (5, 6)]).expect("fixture edges valid")
}

/// 0 pendant on 6; triangle 4-5-6; ids 1..=3 isolated.
pub fn fig2_g3() -> Graph {
    Graph::build(7, [(0, 6), (4, 5), (4, 6), (5, 6)]).expect("fixture edges valid")
}

/// Hub 0 joined to the four endpoints of two 5-vertex paths
/// (1-2-3-4-5 and 6-7-8-9-10). Degrees: hub 4, everyone else 2.
pub fn fig3() -> Graph {
    Graph::build(
        11,
        [
            (0, 1),
            (0, 5),
            (0, 6),
            (0, 10),
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 5),
            (6, 7),
            (7, 8),
            (8, 9),
            (9, 10),
        ],
    )
    .expect("fixture edges valid")
}

/// Two disjoint edges (1-3, 2-4) plus the isolated vertex 0.
pub fn fig4a() -> Graph {
    Graph::build(5, [(1, 3), (2, 4)]).expect("fixture edges valid")
}

/// 4-cycle 0-2-5-3-0 plus the disjoint edge 1-4.
pub fn fig4b() -> Graph {
    Graph::build(6, [(0, 2), (0, 3), (1, 4), (2, 5), (3, 5)]).expect("fixture edges valid")
}
