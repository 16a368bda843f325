//! Edge labelings `f: E(G) -> {-1, +1}` bound to one graph.

use thiserror::Error;

use crate::graph::{Graph, GraphError, GraphId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LabelingError {
    #[error("labeling has {got} entries but the graph has {expected} edges")]
    LengthMismatch { expected: usize, got: usize },
    #[error("label {value} at edge {edge} is not -1 or +1")]
    InvalidLabel { edge: usize, value: i64 },
    #[error("labeling is bound to a different graph")]
    LabelingGraphMismatch,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// One `±1` label per edge, in the bound graph's canonical edge order.
///
/// Labelings order lexicographically on their value vectors with `-1 < +1`;
/// the solver uses that order to break ties between optimal witnesses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeLabeling {
    graph_id: GraphId,
    values: Vec<i8>,
}

impl EdgeLabeling {
    pub fn new(g: &Graph, values: Vec<i8>) -> Result<Self, LabelingError> {
        if values.len() != g.n_edges() {
            return Err(LabelingError::LengthMismatch { expected: g.n_edges(), got: values.len() });
        }
        if let Some((edge, &v)) = values.iter().enumerate().find(|(_, &v)| v != 1 && v != -1) {
            return Err(LabelingError::InvalidLabel { edge, value: i64::from(v) });
        }
        Ok(EdgeLabeling { graph_id: g.id(), values })
    }

    pub fn all_positive(g: &Graph) -> Self {
        EdgeLabeling { graph_id: g.id(), values: vec![1; g.n_edges()] }
    }

    /// Labels each edge by `rule(edge_index)`; anything positive maps to
    /// `+1`, everything else to `-1`.
    pub fn from_fn(g: &Graph, mut rule: impl FnMut(usize) -> bool) -> Self {
        let values = (0..g.n_edges()).map(|e| if rule(e) { 1 } else { -1 }).collect();
        EdgeLabeling { graph_id: g.id(), values }
    }

    pub fn values(&self) -> &[i8] {
        &self.values
    }

    pub fn get(&self, e: usize) -> i8 {
        self.values[e]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn is_bound_to(&self, g: &Graph) -> bool {
        self.graph_id == g.id() && self.values.len() == g.n_edges()
    }

    pub fn check_bound(&self, g: &Graph) -> Result<(), LabelingError> {
        if self.is_bound_to(g) {
            Ok(())
        } else {
            Err(LabelingError::LabelingGraphMismatch)
        }
    }

    /// Sum of all labels.
    pub fn weight(&self) -> i64 {
        self.values.iter().map(|&v| i64::from(v)).sum()
    }

    pub fn negatives(&self) -> usize {
        self.values.iter().filter(|&&v| v < 0).count()
    }
}

impl PartialOrd for EdgeLabeling {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for EdgeLabeling {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.values.cmp(&other.values)
    }
}

/// `s_v`: sum of the labels on edges incident with `v`. Isolated vertices
/// give 0.
pub fn vertex_sum(g: &Graph, f: &EdgeLabeling, v: usize) -> Result<i64, LabelingError> {
    f.check_bound(g)?;
    if v >= g.n_vertices() {
        return Err(GraphError::IndexOutOfRange { index: v, limit: g.n_vertices() }.into());
    }
    Ok(vertex_sum_unchecked(g, f, v))
}

pub(crate) fn vertex_sum_unchecked(g: &Graph, f: &EdgeLabeling, v: usize) -> i64 {
    g.incident(v).iter().map(|&e| i64::from(f.values[e])).sum()
}

/// All vertex sums at once.
pub fn vertex_sums(g: &Graph, f: &EdgeLabeling) -> Result<Vec<i64>, LabelingError> {
    f.check_bound(g)?;
    Ok((0..g.n_vertices()).map(|v| vertex_sum_unchecked(g, f, v)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vertex_sums_small() {
        let c3 = Graph::cycle(3).unwrap();
        let f = EdgeLabeling::all_positive(&c3);
        for v in 0..3 {
            assert_eq!(vertex_sum(&c3, &f, v).unwrap(), 2);
        }

        // K_{2,2} edges in order: 0-2, 0-3, 1-2, 1-3. Negate 0-2.
        let k22 = Graph::complete_bipartite(2, 2).unwrap();
        let f = EdgeLabeling::new(&k22, vec![-1, 1, 1, 1]).unwrap();
        assert_eq!(vertex_sum(&k22, &f, 0).unwrap(), 0);
        assert_eq!(vertex_sum(&k22, &f, 2).unwrap(), 0);
        assert_eq!(vertex_sum(&k22, &f, 1).unwrap(), 2);

        let g = Graph::build(3, &[(0, 1)]).unwrap();
        let f = EdgeLabeling::all_positive(&g);
        assert_eq!(vertex_sum(&g, &f, 2).unwrap(), 0);
    }

    #[test]
    fn rejects_foreign_labeling() {
        let a = Graph::path(3);
        let b = Graph::cycle(3).unwrap();
        let f = EdgeLabeling::all_positive(&a);
        assert_eq!(vertex_sum(&b, &f, 0), Err(LabelingError::LabelingGraphMismatch));
    }

    #[test]
    fn rejects_bad_values() {
        let g = Graph::path(3);
        assert_eq!(
            EdgeLabeling::new(&g, vec![1, 0]),
            Err(LabelingError::InvalidLabel { edge: 1, value: 0 })
        );
        assert_eq!(
            EdgeLabeling::new(&g, vec![1]),
            Err(LabelingError::LengthMismatch { expected: 2, got: 1 })
        );
    }

    #[test]
    fn weight_counts() {
        let g = Graph::complete(5);
        assert_eq!(EdgeLabeling::all_positive(&g).weight(), 10);
        let g = Graph::path(5);
        let f = EdgeLabeling::new(&g, vec![1, -1, 1, 1]).unwrap();
        assert_eq!(f.weight(), 2);
        let empty = Graph::build(3, &[]).unwrap();
        assert_eq!(EdgeLabeling::all_positive(&empty).weight(), 0);
    }
}
