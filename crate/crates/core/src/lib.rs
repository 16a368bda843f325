//! Signed edge domination functions (SEDFs) of finite simple graphs.
//!
//! An SEDF labels every edge `+1` or `-1` so that the labels on each closed
//! edge neighborhood sum to at least 1. The crate verifies SEDFs, computes
//! the signed edge domination number `γ'_s` exactly with a certificate,
//! builds the clique-plus-matchings family that drives `γ'_s` far below
//! zero, gives closed forms and explicit optimal labelings for complete
//! bipartite graphs, and evaluates the elementary-subgraph lower bounds.

pub mod bounds;
pub mod connectivity;
pub mod constructions;
pub mod domination;
pub mod graph;
pub mod io;
pub mod labeling;
pub mod solver;

pub use bounds::{
    cycle_sum_check, elementary_lower_bound, g_bounds, max_elementary_subgraph, order_lower_bound,
    BoundsError, BoundsReport, ElementarySubgraph, Rational,
};
pub use connectivity::{vertex_connectivity, vertex_connectivity_at_least};
pub use constructions::kmn::{
    kmn_case, kmn_construction, kmn_sedn, kmn_witness, ConstructionId, KmnCase, ParityCase,
};
pub use constructions::lgraph::{counterexample, l_graph, l_graph_sedf, remark_bound};
pub use constructions::{ConstructionError, PartitionedGraph};
pub use domination::{edge_domination_sum, edge_domination_sums, is_sedf, labeling_weight};
pub use graph::{Edge, Graph, GraphError, GraphId};
pub use labeling::{vertex_sum, vertex_sums, EdgeLabeling, LabelingError};
pub use solver::{exact_sedn, SearchLimits, SednCertificate, SolveError};
