//! The clique-plus-matchings family `L_(m,n)`.
//!
//! Vertices split into `n + 1` blocks of size `r = mn + m + 1`. Block `V_1`
//! is a clique, the other blocks are independent, and vertex `j` of `V_1`
//! is joined to vertex `(j + k) mod r` of every other block for
//! `k = 0..m`. Those `m` cyclic shifts are disjoint perfect matchings
//! because `m < r`.
//!
//! Labeling `V_1`-internal edges `+1` and every other edge `-1` gives each
//! clique vertex sum `m` and every other vertex sum `-m`, an SEDF of weight
//! `r(m - mn)/2`. With `n = 2` that is `-(m/6)|V|` on an `m`-connected
//! graph.

use crate::graph::{Edge, Graph};
use crate::labeling::EdgeLabeling;

use super::{guard, ConstructionError, Family, Part, PartitionedGraph};
use crate::bounds::Rational;

/// Block size `mn + m + 1`.
pub fn block_size(m: usize, n: usize) -> usize {
    m * n + m + 1
}

/// Builds `L_(m,n)`. Block `V_i` occupies vertices `(i-1)r .. ir`.
pub fn l_graph(m: usize, n: usize) -> Result<PartitionedGraph, ConstructionError> {
    if m == 0 || n == 0 {
        return Err(ConstructionError::ZeroParameter);
    }
    let (m128, n128) = (m as u128, n as u128);
    let r128 = m128 * n128 + m128 + 1;
    guard((n128 + 1) * r128, r128 * (r128 - 1) / 2 + n128 * m128 * r128)?;

    let r = block_size(m, n);
    let mut edges = Vec::with_capacity(r * (r - 1) / 2 + n * m * r);
    for j in 0..r {
        for j2 in j + 1..r {
            edges.push(Edge { u: j, v: j2 });
        }
        for block in 1..=n {
            for k in 0..m {
                edges.push(Edge { u: j, v: block * r + (j + k) % r });
            }
        }
    }
    edges.sort_unstable();
    let graph = Graph::from_canonical((n + 1) * r, edges);
    let parts = (0..=n)
        .map(|b| Part { name: format!("V{}", b + 1), vertices: (b * r..(b + 1) * r).collect() })
        .collect();
    Ok(PartitionedGraph { graph, family: Family::LGraph { m, n }, parts, blocks: Vec::new() })
}

/// `+1` on edges inside `V_1`, `-1` elsewhere.
pub fn l_graph_sedf(lg: &PartitionedGraph) -> Result<EdgeLabeling, ConstructionError> {
    let Family::LGraph { m, n } = lg.family else {
        return Err(ConstructionError::NotAnLGraph);
    };
    let r = block_size(m, n);
    let g = &lg.graph;
    let fits = g.n_vertices() == (n + 1) * r
        && g.n_edges() == r * (r - 1) / 2 + n * m * r
        && lg.part("V1").is_some_and(|v1| v1.len() == r && v1.iter().enumerate().all(|(i, &x)| i == x));
    if !fits {
        return Err(ConstructionError::NotAnLGraph);
    }
    Ok(EdgeLabeling::from_fn(g, |e| g.edges()[e].v < r))
}

/// Weight of [`l_graph_sedf`]: `(mn + m + 1)(m - mn) / 2`.
pub fn l_graph_sedf_weight(m: usize, n: usize) -> i128 {
    let (m, n) = (m as i128, n as i128);
    (m * n + m + 1) * (m - m * n) / 2
}

/// `|V(L_(m,n))| = (n + 1)(mn + m + 1)`.
pub fn l_graph_order(m: usize, n: usize) -> i128 {
    let (m, n) = (m as i128, n as i128);
    (n + 1) * (m * n + m + 1)
}

/// Per-vertex coefficient `-m(n-1) / (2(n+1))` of the `L_(m,n)` labeling
/// weight. Equals `weight / |V|` exactly.
pub fn remark_bound(m: usize, n: usize) -> Rational {
    let coefficient = Rational::new(-(m as i64) * (n as i64 - 1), 2 * (n as i64 + 1));
    debug_assert_eq!(
        coefficient,
        Rational::new(l_graph_sedf_weight(m, n) as i64, l_graph_order(m, n) as i64)
    );
    coefficient
}

/// `L_(m,2)` and its labeling: an `m`-connected graph whose labeling weight
/// equals `-(m/6)|V|`.
pub fn counterexample(m: usize) -> Result<(PartitionedGraph, EdgeLabeling), ConstructionError> {
    let lg = l_graph(m, 2)?;
    let f = l_graph_sedf(&lg)?;
    Ok((lg, f))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domination::is_sedf;
    use crate::labeling::vertex_sums;

    #[test]
    fn sizes() {
        let lg = l_graph(2, 1).unwrap();
        assert_eq!((lg.graph.n_vertices(), lg.graph.n_edges()), (10, 20));
        let lg = l_graph(1, 1).unwrap();
        assert_eq!((lg.graph.n_vertices(), lg.graph.n_edges()), (6, 6));
        let lg = l_graph(2, 2).unwrap();
        assert_eq!((lg.graph.n_vertices(), lg.graph.n_edges()), (21, 49));
    }

    #[test]
    fn structure_l11() {
        // K_3 on {0,1,2} and the identity matching onto {3,4,5}.
        let lg = l_graph(1, 1).unwrap();
        let pairs: Vec<(usize, usize)> = lg.graph.edges().iter().map(|e| (e.u, e.v)).collect();
        assert_eq!(pairs, vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 4), (2, 5)]);
    }

    #[test]
    fn labeling_weights_and_sums() {
        for (m, n, w) in [(2, 1, 0), (1, 1, 0), (2, 2, -7)] {
            let lg = l_graph(m, n).unwrap();
            let f = l_graph_sedf(&lg).unwrap();
            assert_eq!(f.weight(), w);
            assert_eq!(l_graph_sedf_weight(m, n), i128::from(w));
            assert!(is_sedf(&lg.graph, &f).unwrap());
            let r = block_size(m, n);
            for (v, s) in vertex_sums(&lg.graph, &f).unwrap().into_iter().enumerate() {
                assert_eq!(s, if v < r { m as i64 } else { -(m as i64) });
            }
        }
    }

    #[test]
    fn rejects_foreign_graphs() {
        let lg = l_graph(1, 1).unwrap();
        let mut bad = lg.clone();
        bad.family = Family::CompleteBipartite { m: 3, n: 3 };
        assert_eq!(l_graph_sedf(&bad), Err(ConstructionError::NotAnLGraph));
        let mut bad = lg.clone();
        bad.family = Family::LGraph { m: 2, n: 1 };
        assert_eq!(l_graph_sedf(&bad), Err(ConstructionError::NotAnLGraph));
        assert_eq!(l_graph(0, 3), Err(ConstructionError::ZeroParameter));
        assert!(matches!(l_graph(1000, 1000), Err(ConstructionError::OverflowGuard { .. })));
    }

    #[test]
    fn counterexample_weights() {
        for (m, order, w) in [(1, 12, -2), (2, 21, -7), (3, 30, -15)] {
            let (lg, f) = counterexample(m).unwrap();
            assert_eq!(lg.graph.n_vertices(), order);
            assert_eq!(f.weight(), w);
            assert_eq!(Rational::from_integer(w), Rational::new(-(m as i64), 6) * order as i64);
        }
    }

    #[test]
    fn remark_coefficients() {
        for m in 1..8 {
            assert_eq!(remark_bound(m, 2), Rational::new(-(m as i64), 6));
            assert_eq!(remark_bound(m, 1), Rational::from_integer(0));
        }
        assert_eq!(remark_bound(2, 3), Rational::new(-1, 2));
    }
}
