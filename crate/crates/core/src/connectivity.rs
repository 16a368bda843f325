//! Vertex connectivity via Menger: unit-capacity max-flow on the
//! vertex-split graph.

use std::collections::VecDeque;

use crate::graph::Graph;

/// Whether `g` is `k`-connected: more than `k` vertices and no set of fewer
/// than `k` vertices disconnects it.
///
/// Graphs with at most `k` vertices are reported `k`-connected exactly when
/// they are complete. `k = 0` is always satisfied.
pub fn vertex_connectivity_at_least(g: &Graph, k: usize) -> bool {
    if k == 0 {
        return true;
    }
    let n = g.n_vertices();
    if n <= k {
        return g.is_complete();
    }
    // The connectivity of a non-complete graph is the minimum local
    // connectivity over non-adjacent pairs.
    let mut net = SplitNetwork::new(g);
    for s in 0..n {
        for t in s + 1..n {
            if !g.has_edge(s, t) && net.disjoint_paths(s, t, k) < k {
                return false;
            }
        }
    }
    true
}

/// Exact vertex connectivity `κ(G)` (`n - 1` for complete graphs).
pub fn vertex_connectivity(g: &Graph) -> usize {
    let n = g.n_vertices();
    if g.is_complete() {
        return n.saturating_sub(1);
    }
    let mut net = SplitNetwork::new(g);
    let mut best = n.saturating_sub(1);
    for s in 0..n {
        for t in s + 1..n {
            if !g.has_edge(s, t) {
                best = best.min(net.disjoint_paths(s, t, best));
            }
        }
    }
    best
}

/// Vertex `v` becomes `v_in = 2v` and `v_out = 2v + 1` joined by a unit arc;
/// each undirected edge `uv` becomes arcs `u_out -> v_in` and
/// `v_out -> u_in`.
struct SplitNetwork {
    head: Vec<usize>,
    cap: Vec<u32>,
    base_cap: Vec<u32>,
    adj: Vec<Vec<usize>>,
}

impl SplitNetwork {
    fn new(g: &Graph) -> Self {
        let mut net = SplitNetwork {
            head: Vec::new(),
            cap: Vec::new(),
            base_cap: Vec::new(),
            adj: vec![Vec::new(); 2 * g.n_vertices()],
        };
        for v in 0..g.n_vertices() {
            net.add_arc(2 * v, 2 * v + 1, 1);
        }
        for e in g.edges() {
            // Capacity n is effectively infinite for unit vertex capacities.
            let big = g.n_vertices() as u32;
            net.add_arc(2 * e.u + 1, 2 * e.v, big);
            net.add_arc(2 * e.v + 1, 2 * e.u, big);
        }
        net
    }

    fn add_arc(&mut self, from: usize, to: usize, cap: u32) {
        self.adj[from].push(self.head.len());
        self.head.push(to);
        self.cap.push(cap);
        self.adj[to].push(self.head.len());
        self.head.push(from);
        self.cap.push(0);
    }

    /// Number of internally vertex-disjoint `s`–`t` paths, stopping once
    /// `limit` are found.
    fn disjoint_paths(&mut self, s: usize, t: usize, limit: usize) -> usize {
        if self.base_cap.is_empty() {
            self.base_cap = self.cap.clone();
        } else {
            self.cap.copy_from_slice(&self.base_cap);
        }
        let source = 2 * s + 1;
        let sink = 2 * t;
        let mut flow = 0;
        let mut parent_arc = vec![usize::MAX; self.adj.len()];
        while flow < limit {
            parent_arc.fill(usize::MAX);
            let mut queue = VecDeque::from([source]);
            let mut reached = false;
            while let Some(x) = queue.pop_front() {
                for &a in &self.adj[x] {
                    let y = self.head[a];
                    if self.cap[a] > 0 && y != source && parent_arc[y] == usize::MAX {
                        parent_arc[y] = a;
                        if y == sink {
                            reached = true;
                            break;
                        }
                        queue.push_back(y);
                    }
                }
                if reached {
                    break;
                }
            }
            if !reached {
                break;
            }
            let mut y = sink;
            while y != source {
                let a = parent_arc[y];
                self.cap[a] -= 1;
                self.cap[a ^ 1] += 1;
                y = self.head[a ^ 1];
            }
            flow += 1;
        }
        flow
    }
}
