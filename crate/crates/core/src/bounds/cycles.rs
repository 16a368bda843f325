use crate::domination::is_sedf;
use crate::graph::Graph;
use crate::labeling::{vertex_sums, EdgeLabeling};

use super::BoundsError;

/// `Σ s_v` over the vertices of `cycle`, for an SEDF `f`.
///
/// Each cycle edge `uv` has `s_u + s_v >= 0` under an SEDF, so the sum is
/// never negative; a negative value is reported as an error.
pub fn cycle_sum_check(g: &Graph, f: &EdgeLabeling, cycle: &[usize]) -> Result<i64, BoundsError> {
    if !is_sedf(g, f)? {
        return Err(BoundsError::NotAnSedf);
    }
    check_cycle(g, cycle)?;
    let s = vertex_sums(g, f)?;
    let total: i64 = cycle.iter().map(|&v| s[v]).sum();
    if total < 0 {
        return Err(BoundsError::NegativeCycleSum(total));
    }
    Ok(total)
}

pub(crate) fn check_cycle(g: &Graph, cycle: &[usize]) -> Result<(), BoundsError> {
    if cycle.len() < 3 {
        return Err(BoundsError::NotACycle(format!("length {} < 3", cycle.len())));
    }
    let mut seen = vec![false; g.n_vertices()];
    for &v in cycle {
        if v >= g.n_vertices() {
            return Err(BoundsError::NotACycle(format!("vertex {v} out of range")));
        }
        if std::mem::replace(&mut seen[v], true) {
            return Err(BoundsError::NotACycle(format!("vertex {v} repeated")));
        }
    }
    for (i, &a) in cycle.iter().enumerate() {
        let b = cycle[(i + 1) % cycle.len()];
        if !g.has_edge(a, b) {
            return Err(BoundsError::NotACycle(format!("missing edge {a}-{b}")));
        }
    }
    Ok(())
}

/// Up to `limit` distinct simple cycles of `g`, each listed once starting
/// from its smallest vertex. Enumeration order is deterministic.
pub fn sample_cycles(g: &Graph, limit: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut on_path = vec![false; g.n_vertices()];
    for start in 0..g.n_vertices() {
        if out.len() >= limit {
            break;
        }
        let mut path = vec![start];
        on_path[start] = true;
        extend(g, start, &mut path, &mut on_path, &mut out, limit);
        on_path[start] = false;
    }
    out
}

fn extend(
    g: &Graph,
    start: usize,
    path: &mut Vec<usize>,
    on_path: &mut [bool],
    out: &mut Vec<Vec<usize>>,
    limit: usize,
) {
    let last = *path.last().expect("non-empty path");
    let mut next: Vec<usize> = g.neighbors(last).collect();
    next.sort_unstable();
    for w in next {
        if out.len() >= limit {
            return;
        }
        // Each cycle is reported in the direction where the second vertex
        // is smaller than the last one.
        if w == start && path.len() >= 3 && path[1] < last {
            out.push(path.clone());
        } else if w > start && !on_path[w] {
            on_path[w] = true;
            path.push(w);
            extend(g, start, path, on_path, out, limit);
            path.pop();
            on_path[w] = false;
        }
    }
}
