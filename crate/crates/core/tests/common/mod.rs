#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use sedf::{EdgeLabeling, Graph};

/// Random simple graph on `n` vertices with exactly `m` edges (capped at
/// the number of available pairs).
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, m: usize) -> Graph {
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    pairs.shuffle(rng);
    pairs.truncate(m);
    Graph::build(n, &pairs).unwrap()
}

/// Random graph on `n` (even) vertices containing a perfect matching, with
/// `extra` further random edges.
pub fn random_matchable_graph<R: Rng>(rng: &mut R, n: usize, extra: usize) -> Graph {
    assert!(n.is_multiple_of(2));
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut pairs: Vec<(usize, usize)> = perm.chunks(2).map(|c| (c[0].min(c[1]), c[0].max(c[1]))).collect();
    let mut rest: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|p| !pairs.contains(p))
        .collect();
    rest.shuffle(rng);
    pairs.extend(rest.into_iter().take(extra));
    Graph::build(n, &pairs).unwrap()
}

pub fn random_labeling<R: Rng>(rng: &mut R, g: &Graph) -> EdgeLabeling {
    let values = (0..g.n_edges()).map(|_| if rng.gen_bool(0.5) { 1 } else { -1 }).collect();
    EdgeLabeling::new(g, values).unwrap()
}

/// Independent oracle: the most vertices covered by an edge subset whose
/// components are single edges or cycles (even cycles allowed), by
/// enumerating all edge subsets.
pub fn brute_force_max_elementary_cover(g: &Graph) -> usize {
    let m = g.n_edges();
    assert!(m <= 20);
    let n = g.n_vertices();
    let mut best = 0;
    for mask in 0u32..(1 << m) {
        let mut deg = vec![0usize; n];
        let chosen: Vec<_> = (0..m).filter(|i| mask >> i & 1 == 1).map(|i| g.edges()[i]).collect();
        for e in &chosen {
            deg[e.u] += 1;
            deg[e.v] += 1;
        }
        if deg.iter().any(|&d| d > 2) {
            continue;
        }
        // Components must be K_2 (both degree 1) or cycles (all degree 2):
        // reject any component mixing degrees, i.e. a path on >= 3 vertices.
        let mut comp: Vec<usize> = (0..n).collect();
        fn find(c: &mut Vec<usize>, x: usize) -> usize {
            if c[x] != x {
                let r = find(c, c[x]);
                c[x] = r;
            }
            c[x]
        }
        for e in &chosen {
            let (a, b) = (find(&mut comp, e.u), find(&mut comp, e.v));
            comp[a] = b;
        }
        let mut has1 = vec![false; n];
        let mut has2 = vec![false; n];
        for (v, &d) in deg.iter().enumerate() {
            let r = find(&mut comp, v);
            match d {
                1 => has1[r] = true,
                2 => has2[r] = true,
                _ => {}
            }
        }
        if (0..n).any(|r| has1[r] && has2[r]) {
            continue;
        }
        best = best.max(deg.iter().filter(|&&d| d > 0).count());
    }
    best
}

/// Independent oracle for k-connectivity by deleting every vertex subset of
/// size < k and checking connectivity of what remains.
pub fn brute_force_k_connected(g: &Graph, k: usize) -> bool {
    let n = g.n_vertices();
    if k == 0 {
        return true;
    }
    if n <= k {
        return g.is_complete();
    }
    assert!(n <= 20);
    for mask in 0u32..(1 << n) {
        if (mask.count_ones() as usize) >= k {
            continue;
        }
        let alive: Vec<usize> = (0..n).filter(|v| mask >> v & 1 == 0).collect();
        let mut seen = vec![false; n];
        let mut stack = vec![alive[0]];
        seen[alive[0]] = true;
        while let Some(x) = stack.pop() {
            for y in g.neighbors(x) {
                if mask >> y & 1 == 0 && !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        if alive.iter().any(|&v| !seen[v]) {
            return false;
        }
    }
    true
}
