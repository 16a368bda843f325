//! Explicit graph families and labelings.

pub mod kmn;
pub mod lgraph;

use thiserror::Error;

use crate::graph::{Graph, GraphError};

/// Largest graph a construction will materialize.
pub const MAX_CONSTRUCTION_VERTICES: usize = 20_000;
pub const MAX_CONSTRUCTION_EDGES: usize = 5_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("parameters must be positive")]
    ZeroParameter,
    #[error("construction would need {vertices} vertices and {edges} edges, above the configured maximum")]
    OverflowGuard { vertices: u128, edges: u128 },
    #[error("graph is not an L-graph produced by this crate")]
    NotAnLGraph,
    #[error("construction {id} does not apply to K_{{{m},{n}}}: {reason}")]
    CaseRangeViolation { id: String, m: usize, n: usize, reason: &'static str },
    #[error("unknown construction id {0:?}")]
    UnknownConstruction(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Which family a [`PartitionedGraph`] belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// Clique `V_1` of size `mn+m+1` joined to `n` independent blocks by
    /// `m` disjoint perfect matchings each.
    LGraph { m: usize, n: usize },
    /// `K_{m,n}` in the caller's orientation.
    CompleteBipartite { m: usize, n: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Part {
    pub name: String,
    pub vertices: Vec<usize>,
}

/// A graph together with the named vertex blocks its construction uses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionedGraph {
    pub graph: Graph,
    pub family: Family,
    /// Top-level partition: disjoint and covering all vertices.
    pub parts: Vec<Part>,
    /// Sub-blocks named by a construction (`X_1`, `Y_3`, ...). Each family
    /// of sub-blocks partitions its parent part.
    pub blocks: Vec<Part>,
}

impl PartitionedGraph {
    pub fn part(&self, name: &str) -> Option<&[usize]> {
        self.parts.iter().chain(&self.blocks).find(|p| p.name == name).map(|p| p.vertices.as_slice())
    }

    /// True when the top-level parts are pairwise disjoint and cover every
    /// vertex exactly once.
    pub fn parts_partition_vertices(&self) -> bool {
        let mut seen = vec![false; self.graph.n_vertices()];
        for p in &self.parts {
            for &v in &p.vertices {
                if v >= seen.len() || seen[v] {
                    return false;
                }
                seen[v] = true;
            }
        }
        seen.into_iter().all(|x| x)
    }

    /// `# part NAME: v1 v2 ...` lines for the edge-list header.
    pub fn annotations(&self) -> Vec<String> {
        let mut out = vec![match self.family {
            Family::LGraph { m, n } => format!("family L m={m} n={n}"),
            Family::CompleteBipartite { m, n } => format!("family K m={m} n={n}"),
        }];
        for (kind, p) in self.parts.iter().map(|p| ("part", p)).chain(self.blocks.iter().map(|p| ("block", p))) {
            let list: Vec<String> = p.vertices.iter().map(ToString::to_string).collect();
            out.push(format!("{kind} {}: {}", p.name, list.join(" ")));
        }
        out
    }
}

pub(crate) fn guard(vertices: u128, edges: u128) -> Result<(), ConstructionError> {
    if vertices > MAX_CONSTRUCTION_VERTICES as u128 || edges > MAX_CONSTRUCTION_EDGES as u128 {
        Err(ConstructionError::OverflowGuard { vertices, edges })
    } else {
        Ok(())
    }
}
