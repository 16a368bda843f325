//! Immutable simple undirected graphs in canonical edge order.
//!
//! Edges are stored with `u < v` and sorted lexicographically, so the
//! position of an edge in [`Graph::edges`] is its identity. Labelings,
//! certificates and the solver all index edges by that position.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

/// Errors raised while building a graph or addressing its elements.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("index {index} out of range (limit {limit})")]
    IndexOutOfRange { index: usize, limit: usize },
    #[error("complete bipartite graph needs two non-empty parts")]
    ZeroPart,
}

/// Undirected edge with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
}

impl Edge {
    /// Canonical edge on the unordered pair `{a, b}`.
    pub fn new(a: usize, b: usize) -> Result<Self, GraphError> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Ok(Edge { u: a, v: b }),
            std::cmp::Ordering::Greater => Ok(Edge { u: b, v: a }),
            std::cmp::Ordering::Equal => Err(GraphError::LoopEdge(a)),
        }
    }

    pub fn touches(&self, w: usize) -> bool {
        self.u == w || self.v == w
    }

    pub fn shares_endpoint(&self, other: &Edge) -> bool {
        self.touches(other.u) || self.touches(other.v)
    }

    /// The endpoint that is not `w`.
    pub fn other(&self, w: usize) -> usize {
        if self.u == w {
            self.v
        } else {
            self.u
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

/// Structural fingerprint of a graph.
///
/// Two graphs with the same vertex count and canonical edge list share an
/// id, so a labeling read back from disk binds to a re-parsed graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GraphId(u64);

impl GraphId {
    fn of(n_vertices: usize, edges: &[Edge]) -> Self {
        const OFFSET: u64 = 0xcbf2_9ce4_8422_2325;
        const PRIME: u64 = 0x0000_0100_0000_01b3;
        let mut h = OFFSET;
        let mut eat = |x: u64| {
            for b in x.to_le_bytes() {
                h ^= u64::from(b);
                h = h.wrapping_mul(PRIME);
            }
        };
        eat(n_vertices as u64);
        eat(edges.len() as u64);
        for e in edges {
            eat(e.u as u64);
            eat(e.v as u64);
        }
        GraphId(h)
    }
}

/// Finite simple undirected graph. Isolated vertices are allowed.
#[derive(Debug, Clone)]
pub struct Graph {
    n_vertices: usize,
    edges: Vec<Edge>,
    incidence: Vec<Vec<usize>>,
    id: GraphId,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n_vertices == other.n_vertices && self.edges == other.edges
    }
}

impl Eq for Graph {}

impl Graph {
    /// Builds the canonical graph on `n_vertices` vertices from unordered
    /// vertex pairs. Loops and repeated pairs are rejected.
    pub fn build(n_vertices: usize, edge_pairs: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut seen = BTreeSet::new();
        for &(a, b) in edge_pairs {
            for w in [a, b] {
                if w >= n_vertices {
                    return Err(GraphError::IndexOutOfRange { index: w, limit: n_vertices });
                }
            }
            let e = Edge::new(a, b)?;
            if !seen.insert(e) {
                return Err(GraphError::DuplicateEdge(e.u, e.v));
            }
        }
        Ok(Self::from_canonical(n_vertices, seen.into_iter().collect()))
    }

    /// `edges` must already be canonical: sorted, deduplicated, in range.
    pub(crate) fn from_canonical(n_vertices: usize, edges: Vec<Edge>) -> Self {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(edges.iter().all(|e| e.u < e.v && e.v < n_vertices));
        let mut incidence = vec![Vec::new(); n_vertices];
        for (i, e) in edges.iter().enumerate() {
            incidence[e.u].push(i);
            incidence[e.v].push(i);
        }
        let id = GraphId::of(n_vertices, &edges);
        Graph { n_vertices, edges, incidence, id }
    }

    /// `K_{m,n}`: part X is `0..m`, part Y is `m..m+n`.
    pub fn complete_bipartite(m: usize, n: usize) -> Result<Self, GraphError> {
        if m == 0 || n == 0 {
            return Err(GraphError::ZeroPart);
        }
        let edges = (0..m)
            .flat_map(|i| (0..n).map(move |j| Edge { u: i, v: m + j }))
            .collect();
        Ok(Self::from_canonical(m + n, edges))
    }

    /// Complete graph on `n` vertices.
    pub fn complete(n: usize) -> Self {
        let edges = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| Edge { u, v }))
            .collect();
        Self::from_canonical(n, edges)
    }

    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        let pairs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::build(n, &pairs)
    }

    pub fn path(n: usize) -> Self {
        let edges = (1..n).map(|i| Edge { u: i - 1, v: i }).collect();
        Self::from_canonical(n, edges)
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn id(&self) -> GraphId {
        self.id
    }

    pub fn edge(&self, e: usize) -> Result<Edge, GraphError> {
        self.edges
            .get(e)
            .copied()
            .ok_or(GraphError::IndexOutOfRange { index: e, limit: self.edges.len() })
    }

    /// Indices of the edges incident with `v`, i.e. `E(v)`.
    pub fn incident(&self, v: usize) -> &[usize] {
        &self.incidence[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.incidence[v].len()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.incidence[v].iter().map(move |&i| self.edges[i].other(v))
    }

    /// Position of the edge `{a, b}` in canonical order.
    pub fn edge_index(&self, a: usize, b: usize) -> Option<usize> {
        let e = Edge::new(a, b).ok()?;
        self.edges.binary_search(&e).ok()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edge_index(a, b).is_some()
    }

    pub fn is_complete(&self) -> bool {
        let n = self.n_vertices;
        self.edges.len() == n * n.saturating_sub(1) / 2
    }

    /// Closed neighborhood `N[e]`: every edge sharing an endpoint with `e`,
    /// `e` included, in ascending index order.
    pub fn closed_neighborhood(&self, e: usize) -> Result<Vec<usize>, GraphError> {
        let edge = self.edge(e)?;
        let mut out: Vec<usize> = self.incidence[edge.u]
            .iter()
            .chain(&self.incidence[edge.v])
            .copied()
            .collect();
        out.sort_unstable();
        out.dedup();
        Ok(out)
    }

    /// Graph on the same vertex set with `extra` isolated vertices appended.
    pub fn with_isolated(&self, extra: usize) -> Self {
        Self::from_canonical(self.n_vertices + extra, self.edges.clone())
    }
}
