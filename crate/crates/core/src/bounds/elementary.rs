//! Maximum elementary subgraphs: vertex-disjoint edges and odd cycles
//! covering as many vertices as possible.
//!
//! An even cycle of length `2k` can always be swapped for `k` disjoint
//! edges, so only odd cycles are ever produced.

use crate::graph::Graph;

use super::cycles::check_cycle;
use super::{BoundsError, Rational};

pub const DEFAULT_ELEMENTARY_NODES: u64 = 50_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ElementaryLimits {
    pub max_nodes: u64,
}

impl Default for ElementaryLimits {
    fn default() -> Self {
        ElementaryLimits { max_nodes: DEFAULT_ELEMENTARY_NODES }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementarySubgraph {
    /// Edge indices of the single-edge components.
    pub matching_edges: Vec<usize>,
    /// Odd cycles as vertex sequences, each starting at its smallest vertex.
    pub odd_cycles: Vec<Vec<usize>>,
    pub covered: usize,
    /// Vertices left uncovered.
    pub alpha: usize,
    /// Set when the search proved no elementary subgraph covers more.
    pub maximum: bool,
}

impl ElementarySubgraph {
    /// Checks the structural invariants against `g`.
    pub fn validate(&self, g: &Graph) -> Result<(), BoundsError> {
        let invalid = |msg: String| Err(BoundsError::InvalidSubgraph(msg));
        let mut used = vec![false; g.n_vertices()];
        let mut take = |v: usize| -> bool { !std::mem::replace(&mut used[v], true) };
        for &e in &self.matching_edges {
            let Ok(edge) = g.edge(e) else {
                return invalid(format!("edge index {e} out of range"));
            };
            if !take(edge.u) || !take(edge.v) {
                return invalid(format!("edge {edge} overlaps another component"));
            }
        }
        for c in &self.odd_cycles {
            check_cycle(g, c).map_err(|e| BoundsError::InvalidSubgraph(e.to_string()))?;
            if c.len() % 2 == 0 {
                return invalid(format!("cycle of even length {}", c.len()));
            }
            if !c.iter().all(|&v| take(v)) {
                return invalid("cycle overlaps another component".into());
            }
        }
        let covered = used.iter().filter(|&&x| x).count();
        if covered != self.covered || self.covered + self.alpha != g.n_vertices() {
            return invalid(format!(
                "counts covered={} alpha={} do not match ({} covered of {})",
                self.covered,
                self.alpha,
                covered,
                g.n_vertices()
            ));
        }
        Ok(())
    }

    pub fn covered_vertices(&self, g: &Graph) -> Vec<bool> {
        let mut used = vec![false; g.n_vertices()];
        for &e in &self.matching_edges {
            let edge = g.edges()[e];
            used[edge.u] = true;
            used[edge.v] = true;
        }
        for v in self.odd_cycles.iter().flatten() {
            used[*v] = true;
        }
        used
    }
}

/// Backtracking search for an elementary subgraph covering the most
/// vertices.
///
/// The lowest undecided vertex is either matched to an undecided neighbor,
/// closed into an odd cycle through undecided vertices, or left uncovered.
/// Branches that cannot beat the incumbent even by covering every remaining
/// vertex are cut. On budget exhaustion the best subgraph found is returned
/// inside the error with `maximum == false`.
pub fn max_elementary_subgraph(g: &Graph, limits: ElementaryLimits) -> Result<ElementarySubgraph, BoundsError> {
    let n = g.n_vertices();
    let mut search = Search {
        g,
        adj: (0..n)
            .map(|v| {
                let mut a: Vec<usize> = g.neighbors(v).collect();
                a.sort_unstable();
                a
            })
            .collect(),
        state: vec![State::Undecided; n],
        undecided: n,
        covered: 0,
        matching: Vec::new(),
        cycles: Vec::new(),
        best: None,
        nodes: 0,
        max_nodes: limits.max_nodes,
        exhausted: false,
    };
    search.descend();
    let exhausted = search.exhausted;
    let mut best = search.best.unwrap_or_else(|| ElementarySubgraph {
        matching_edges: Vec::new(),
        odd_cycles: Vec::new(),
        covered: 0,
        alpha: n,
        maximum: false,
    });
    best.maximum = !exhausted;
    if exhausted {
        Err(BoundsError::BudgetExhausted(Box::new(best)))
    } else {
        Ok(best)
    }
}

/// `-α(n - α)/4` for a maximum elementary subgraph `h` of `g`.
///
/// Only maximality bounds the degree of an uncovered vertex by the number
/// of matching edges, so `h` must carry `maximum == true`.
pub fn elementary_lower_bound(g: &Graph, h: &ElementarySubgraph) -> Result<Rational, BoundsError> {
    h.validate(g)?;
    if !h.maximum {
        return Err(BoundsError::InvalidSubgraph("subgraph is not certified maximum".into()));
    }
    let n = g.n_vertices() as i64;
    let alpha = h.alpha as i64;
    Ok(Rational::new(-alpha * (n - alpha), 4))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum State {
    Undecided,
    Covered,
    Uncovered,
}

struct Search<'a> {
    g: &'a Graph,
    adj: Vec<Vec<usize>>,
    state: Vec<State>,
    undecided: usize,
    covered: usize,
    matching: Vec<usize>,
    cycles: Vec<Vec<usize>>,
    best: Option<ElementarySubgraph>,
    nodes: u64,
    max_nodes: u64,
    exhausted: bool,
}

impl Search<'_> {
    fn best_covered(&self) -> Option<usize> {
        self.best.as_ref().map(|b| b.covered)
    }

    fn done(&self) -> bool {
        self.exhausted || self.best_covered() == Some(self.g.n_vertices())
    }

    fn descend(&mut self) {
        if self.done() {
            return;
        }
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            self.exhausted = true;
            return;
        }
        if self.best_covered().is_some_and(|b| self.covered + self.undecided <= b) {
            return;
        }
        let Some(v) = self.state.iter().position(|&s| s == State::Undecided) else {
            self.record();
            return;
        };

        for w in self.adj[v].clone() {
            if self.state[w] != State::Undecided {
                continue;
            }
            let e = self.g.edge_index(v, w).expect("adjacent");
            self.set(&[v, w], State::Covered);
            self.matching.push(e);
            self.descend();
            self.matching.pop();
            self.set(&[v, w], State::Undecided);
            if self.done() {
                return;
            }
        }

        let mut path = vec![v];
        self.set(&[v], State::Covered);
        self.cycles_from(v, &mut path);
        self.set(&[v], State::Undecided);
        if self.done() {
            return;
        }

        self.set(&[v], State::Uncovered);
        self.descend();
        self.set(&[v], State::Undecided);
    }

    /// Extends `path` (all marked covered) towards odd cycles closing at
    /// `path[0]`; each closed cycle is explored as a component.
    fn cycles_from(&mut self, start: usize, path: &mut Vec<usize>) {
        let last = *path.last().expect("non-empty");
        for w in self.adj[last].clone() {
            if self.done() {
                return;
            }
            if w == start && path.len() >= 3 && path.len() % 2 == 1 && path[1] < last {
                self.cycles.push(path.clone());
                self.descend();
                self.cycles.pop();
            } else if self.state[w] == State::Undecided {
                self.set(&[w], State::Covered);
                path.push(w);
                self.nodes += 1;
                if self.nodes > self.max_nodes {
                    self.exhausted = true;
                } else {
                    self.cycles_from(start, path);
                }
                path.pop();
                self.set(&[w], State::Undecided);
            }
        }
    }

    fn set(&mut self, vs: &[usize], to: State) {
        for &v in vs {
            let from = self.state[v];
            match from {
                State::Undecided => self.undecided -= 1,
                State::Covered => self.covered -= 1,
                State::Uncovered => {}
            }
            match to {
                State::Undecided => self.undecided += 1,
                State::Covered => self.covered += 1,
                State::Uncovered => {}
            }
            self.state[v] = to;
        }
    }

    fn record(&mut self) {
        if self.best_covered().is_some_and(|b| b >= self.covered) {
            return;
        }
        let mut matching_edges = self.matching.clone();
        matching_edges.sort_unstable();
        let mut odd_cycles = self.cycles.clone();
        odd_cycles.sort();
        self.best = Some(ElementarySubgraph {
            matching_edges,
            odd_cycles,
            covered: self.covered,
            alpha: self.g.n_vertices() - self.covered,
            maximum: false,
        });
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn solve(g: &Graph) -> ElementarySubgraph {
        let h = max_elementary_subgraph(g, ElementaryLimits::default()).unwrap();
        h.validate(g).unwrap();
        h
    }

    #[test]
    fn triangle_is_one_odd_cycle() {
        let h = solve(&Graph::cycle(3).unwrap());
        assert_eq!(h.odd_cycles, vec![vec![0, 1, 2]]);
        assert!(h.matching_edges.is_empty());
        assert_eq!((h.covered, h.alpha), (3, 0));
    }

    #[test]
    fn path_three_leaves_one() {
        let h = solve(&Graph::path(3));
        assert_eq!(h.matching_edges.len(), 1);
        assert_eq!((h.covered, h.alpha), (2, 1));
    }

    #[test]
    fn c4_is_two_edges() {
        let h = solve(&Graph::cycle(4).unwrap());
        assert_eq!(h.matching_edges.len(), 2);
        assert!(h.odd_cycles.is_empty());
        assert_eq!((h.covered, h.alpha), (4, 0));
    }

    #[test]
    fn star_and_pentagon() {
        let star = Graph::complete_bipartite(1, 5).unwrap();
        assert_eq!(solve(&star).alpha, 4);
        let c5 = Graph::cycle(5).unwrap();
        let h = solve(&c5);
        assert_eq!(h.odd_cycles.len(), 1);
        assert_eq!(h.alpha, 0);
    }

    #[test]
    fn lower_bound_values() {
        let g = Graph::cycle(4).unwrap();
        let h = solve(&g);
        assert_eq!(elementary_lower_bound(&g, &h).unwrap(), Rational::from_integer(0));

        // Triangle plus a star with six leaves: n = 10, alpha = 5.
        let g = Graph::build(10, &[(0, 1), (1, 2), (0, 2), (3, 4), (3, 5), (3, 6), (3, 7), (3, 8), (3, 9)])
            .unwrap();
        let h = solve(&g);
        assert_eq!(h.alpha, 5);
        let bound = elementary_lower_bound(&g, &h).unwrap();
        assert_eq!(bound, Rational::new(-25, 4));
        assert!(bound >= Rational::new(-100, 16));
    }

    #[test]
    fn rejects_invalid_subgraphs() {
        let g = Graph::cycle(4).unwrap();
        let mut h = solve(&g);
        h.alpha = 1;
        assert!(matches!(elementary_lower_bound(&g, &h), Err(BoundsError::InvalidSubgraph(_))));
        let mut h = solve(&g);
        h.maximum = false;
        assert!(matches!(elementary_lower_bound(&g, &h), Err(BoundsError::InvalidSubgraph(_))));
        let h = ElementarySubgraph {
            matching_edges: vec![],
            odd_cycles: vec![vec![0, 1, 2, 3]],
            covered: 4,
            alpha: 0,
            maximum: true,
        };
        assert!(matches!(h.validate(&g), Err(BoundsError::InvalidSubgraph(_))));
    }

    #[test]
    fn tiny_budget_flags_non_maximum() {
        let g = Graph::complete_bipartite(3, 5).unwrap();
        match max_elementary_subgraph(&g, ElementaryLimits { max_nodes: 2 }) {
            Err(BoundsError::BudgetExhausted(best)) => assert!(!best.maximum),
            other => panic!("expected budget exhaustion, got {other:?}"),
        }
    }
}
