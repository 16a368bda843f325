//! SEDF verification.
//!
//! For an edge `e = uv` the closed-neighborhood sum equals
//! `s_u + s_v - f(e)`, since `e` is counted at both endpoints. `f` is an
//! SEDF iff that quantity is at least 1 on every edge.

use crate::graph::Graph;
use crate::labeling::{vertex_sum_unchecked, EdgeLabeling, LabelingError};

/// `Σ_{e' ∈ N[e]} f(e')`, computed as `s_u + s_v - f(e)`.
pub fn edge_domination_sum(g: &Graph, f: &EdgeLabeling, e: usize) -> Result<i64, LabelingError> {
    f.check_bound(g)?;
    let edge = g.edge(e)?;
    Ok(vertex_sum_unchecked(g, f, edge.u) + vertex_sum_unchecked(g, f, edge.v) - i64::from(f.get(e)))
}

/// Domination sums for every edge, in canonical edge order.
pub fn edge_domination_sums(g: &Graph, f: &EdgeLabeling) -> Result<Vec<i64>, LabelingError> {
    f.check_bound(g)?;
    let s: Vec<i64> = (0..g.n_vertices()).map(|v| vertex_sum_unchecked(g, f, v)).collect();
    Ok(g.edges()
        .iter()
        .enumerate()
        .map(|(i, e)| s[e.u] + s[e.v] - i64::from(f.get(i)))
        .collect())
}

/// True iff every edge has domination sum at least 1. Edgeless graphs pass
/// vacuously.
pub fn is_sedf(g: &Graph, f: &EdgeLabeling) -> Result<bool, LabelingError> {
    Ok(edge_domination_sums(g, f)?.into_iter().all(|x| x >= 1))
}

/// First edge whose domination sum is below 1, if any.
pub fn first_violation(g: &Graph, f: &EdgeLabeling) -> Result<Option<usize>, LabelingError> {
    Ok(edge_domination_sums(g, f)?.into_iter().position(|x| x < 1))
}

pub fn labeling_weight(f: &EdgeLabeling) -> i64 {
    f.weight()
}

/// Direct sum over `N[e]`. Kept separate from [`edge_domination_sum`] so
/// the two routes can be compared.
pub fn naive_neighborhood_sum(g: &Graph, f: &EdgeLabeling, e: usize) -> Result<i64, LabelingError> {
    f.check_bound(g)?;
    let hood = g.closed_neighborhood(e)?;
    Ok(hood.into_iter().map(|i| i64::from(f.get(i))).sum())
}
