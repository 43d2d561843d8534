//! Immutable undirected simple graph with dense integer vertex ids.
//!
//! Vertices are `0..n`. Every operation is a pure function of its inputs;
//! edits return fresh graphs, so concurrent readers need no coordination.

use std::collections::VecDeque;
use std::fmt;

use serde::Serialize;

use crate::bits::BitSet;
use crate::error::Error;

/// Sentinel hop count for vertex pairs with no connecting path.
pub const INF: u32 = u32::MAX;

#[derive(Clone)]
pub struct Graph {
    n: usize,
    adj: Vec<BitSet>,
    degree: Vec<usize>,
    /// Canonical edge list: `u < v`, lexicographically sorted.
    edges: Vec<(usize, usize)>,
}

/// Degree-extreme classification: isolated (degree 0) and dominant
/// (degree `n-1`) vertices, plus the degree range.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VertexClassReport {
    pub isolated: Vec<usize>,
    pub dominant: Vec<usize>,
    pub min_degree: usize,
    pub max_degree: usize,
}

impl Graph {
    /// Build a graph of order `n` from an edge list. Edges are normalised to
    /// `u < v`; out-of-range ids, self-loops and duplicates are rejected.
    pub fn build(n: usize, edge_list: impl IntoIterator<Item = (usize, usize)>) -> Result<Graph, Error> {
        let mut adj = vec![BitSet::new(n); n];
        let mut edges = Vec::new();
        for (a, b) in edge_list {
            if a >= n {
                return Err(Error::IdOutOfRange { id: a, n });
            }
            if b >= n {
                return Err(Error::IdOutOfRange { id: b, n });
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            let (u, v) = if a < b { (a, b) } else { (b, a) };
            if adj[u].contains(v) {
                return Err(Error::DuplicateEdge { u, v });
            }
            adj[u].insert(v);
            adj[v].insert(u);
            edges.push((u, v));
        }
        edges.sort_unstable();
        let degree = adj.iter().map(BitSet::count).collect();
        Ok(Graph { n, adj, degree, edges })
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Canonical edge list (`u < v`, sorted).
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degree(&self, v: usize) -> usize {
        self.degree[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && u < self.n && self.adj[u].contains(v)
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<(), Error> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::IdOutOfRange { id: v, n: self.n })
        }
    }

    pub(crate) fn adjacency_row(&self, v: usize) -> &BitSet {
        &self.adj[v]
    }

    /// Adjacency value: 0 for `u = v`, 1 for neighbours, 2 otherwise
    /// (equivalently `min(2, d(u, v))`, with unreachable mapping to 2).
    pub fn adjacency_value(&self, u: usize, v: usize) -> Result<u8, Error> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        Ok(if u == v {
            0
        } else if self.adj[u].contains(v) {
            1
        } else {
            2
        })
    }

    /// Shortest-path hop count, [`INF`] when `u` and `v` lie in different
    /// components.
    pub fn distance(&self, u: usize, v: usize) -> Result<u32, Error> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Ok(0);
        }
        Ok(self.bfs_distances(u)[v])
    }

    /// One BFS row: distances from `source` to every vertex.
    pub fn bfs_distances(&self, source: usize) -> Vec<u32> {
        debug_assert!(source < self.n);
        let mut dist = vec![INF; self.n];
        dist[source] = 0;
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u];
            for v in self.adj[u].iter() {
                if dist[v] == INF {
                    dist[v] = du + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// Full distance matrix. Graphs are immutable, so callers that hit
    /// distances repeatedly can hold on to this as a cache.
    pub fn all_pairs_distances(&self) -> Vec<Vec<u32>> {
        (0..self.n).map(|v| self.bfs_distances(v)).collect()
    }

    /// Subgraph induced by `vertices` (set semantics: ids are deduplicated).
    /// Returns the subgraph and the mapping from new ids to original ids.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<(Graph, Vec<usize>), Error> {
        for &v in vertices {
            self.check_vertex(v)?;
        }
        let mut keep = vertices.to_vec();
        keep.sort_unstable();
        keep.dedup();
        let mut index = vec![usize::MAX; self.n];
        for (new, &old) in keep.iter().enumerate() {
            index[old] = new;
        }
        let edges = self
            .edges
            .iter()
            .filter(|(u, v)| index[*u] != usize::MAX && index[*v] != usize::MAX)
            .map(|&(u, v)| (index[u], index[v]));
        let sub = Graph::build(keep.len(), edges).expect("induced edges are valid by construction");
        Ok((sub, keep))
    }

    /// Isolated/dominant vertex sets and the degree range. For `n = 1` the
    /// single vertex is both isolated and dominant.
    pub fn classify_vertices(&self) -> VertexClassReport {
        let isolated = (0..self.n).filter(|&v| self.degree[v] == 0).collect();
        let dominant = (0..self.n)
            .filter(|&v| self.n > 0 && self.degree[v] == self.n - 1)
            .collect();
        VertexClassReport {
            isolated,
            dominant,
            min_degree: self.degree.iter().copied().min().unwrap_or(0),
            max_degree: self.degree.iter().copied().max().unwrap_or(0),
        }
    }

    pub fn is_complete(&self) -> bool {
        self.edges.len() == self.n * self.n.saturating_sub(1) / 2
    }

    pub fn is_empty_graph(&self) -> bool {
        self.edges.is_empty()
    }

    /// New graph with the edge `(u, v)` added.
    pub fn add_edge(&self, a: usize, b: usize) -> Result<Graph, Error> {
        self.check_vertex(a)?;
        self.check_vertex(b)?;
        if a == b {
            return Err(Error::SelfLoop(a));
        }
        let (u, v) = if a < b { (a, b) } else { (b, a) };
        if self.adj[u].contains(v) {
            return Err(Error::EdgeExists { u, v });
        }
        let mut g = self.clone();
        g.adj[u].insert(v);
        g.adj[v].insert(u);
        g.degree[u] += 1;
        g.degree[v] += 1;
        let pos = g.edges.binary_search(&(u, v)).unwrap_err();
        g.edges.insert(pos, (u, v));
        Ok(g)
    }

    /// New graph with the edge `(u, v)` removed.
    pub fn remove_edge(&self, a: usize, b: usize) -> Result<Graph, Error> {
        self.check_vertex(a)?;
        self.check_vertex(b)?;
        if a == b {
            return Err(Error::SelfLoop(a));
        }
        let (u, v) = if a < b { (a, b) } else { (b, a) };
        if !self.adj[u].contains(v) {
            return Err(Error::EdgeMissing { u, v });
        }
        let mut g = self.clone();
        g.adj[u].remove(v);
        g.adj[v].remove(u);
        g.degree[u] -= 1;
        g.degree[v] -= 1;
        let pos = g.edges.binary_search(&(u, v)).expect("edge present");
        g.edges.remove(pos);
        Ok(g)
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edges == other.edges
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges)
            .finish()
    }
}

/// Complete graph on `n` vertices.
pub fn complete(n: usize) -> Graph {
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Graph::build(n, edges).expect("complete graph edges are valid")
}

/// Empty graph on `n` vertices.
pub fn empty(n: usize) -> Graph {
    Graph::build(n, []).expect("empty edge list is valid")
}

/// Path `0 - 1 - ... - n-1`.
pub fn path(n: usize) -> Graph {
    let edges = (1..n).map(|v| (v - 1, v));
    Graph::build(n, edges).expect("path edges are valid")
}

/// Cycle on `n >= 3` vertices.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    let edges = (0..n).map(|u| (u, (u + 1) % n));
    Graph::build(n, edges).expect("cycle edges are valid")
}

/// Star with centre 0 and `leaves` leaves.
pub fn star(leaves: usize) -> Graph {
    let edges = (1..=leaves).map(|v| (0, v));
    Graph::build(leaves + 1, edges).expect("star edges are valid")
}
