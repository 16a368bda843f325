//! Exact signed edge domination number by branch and bound.
//!
//! The search runs in two passes:
//!
//! 1. *Value pass.* Edges are branched in descending order of endpoint
//!    degree sum, `-1` before `+1`, starting from the all-`+1` incumbent.
//!    A node is cut when some edge can no longer reach a neighborhood sum
//!    of 1 even if every undecided edge around it turns `+1`, or when the
//!    decided weight minus the number of undecided edges cannot beat the
//!    incumbent by 2 (weights share the parity of `|E|`).
//! 2. *Witness pass.* With the optimum known, a depth-first search in
//!    canonical edge order, `-1` first, returns the first SEDF of optimal
//!    weight. That is the lexicographically smallest optimal labeling.
//!
//! Both passes can be split into independent subtrees by fixing a prefix of
//! the branching order. The value pass reduces with `min` and the witness
//! pass takes the first hit in prefix order, so the certificate does not
//! depend on the thread schedule.

use std::sync::atomic::{AtomicBool, AtomicI64, AtomicU64, Ordering};

use rayon::prelude::*;
use thiserror::Error;

use crate::domination::is_sedf;
use crate::graph::Graph;
use crate::labeling::EdgeLabeling;

/// Default node budget shared by both passes.
pub const DEFAULT_MAX_NODES: u64 = 200_000_000;

/// Search limits. The budget is a node count so runs are reproducible.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchLimits {
    pub max_nodes: u64,
    /// Worker threads; 0 or 1 runs on the calling thread.
    pub threads: usize,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits { max_nodes: DEFAULT_MAX_NODES, threads: 1 }
    }
}

impl SearchLimits {
    pub fn with_max_nodes(max_nodes: u64) -> Self {
        SearchLimits { max_nodes, ..Self::default() }
    }
}

/// Result of [`exact_sedn`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SednCertificate {
    /// Weight of `witness`; equals `γ'_s` when `optimal` is set.
    pub value: i64,
    pub witness: EdgeLabeling,
    /// The search closed: no SEDF is lighter than `value`, and `witness` is
    /// the lexicographically smallest labeling of that weight.
    pub optimal: bool,
    pub nodes_explored: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    /// The node budget ran out. Carries the best certificate found, with
    /// `optimal == false`.
    #[error("search budget exhausted after {} nodes (best weight {})", .0.nodes_explored, .0.value)]
    BudgetExhausted(Box<SednCertificate>),
}

impl SolveError {
    pub fn best(&self) -> &SednCertificate {
        match self {
            SolveError::BudgetExhausted(c) => c,
        }
    }
}

/// Computes `γ'_s(g)` with a certificate.
///
/// Edgeless graphs have value 0 and an empty witness.
pub fn exact_sedn(g: &Graph, limits: SearchLimits) -> Result<SednCertificate, SolveError> {
    let m = g.n_edges();
    if m == 0 {
        return Ok(SednCertificate {
            value: 0,
            witness: EdgeLabeling::all_positive(g),
            optimal: true,
            nodes_explored: 0,
        });
    }
    let ctx = Context::new(g, limits.max_nodes);
    let run = |ctx: &Context| -> (Outcome, Option<Vec<i8>>) {
        let outcome = ctx.value_pass(limits.threads);
        if outcome.exhausted {
            return (outcome, None);
        }
        let witness = ctx.witness_pass(outcome.value, limits.threads);
        (outcome, witness)
    };
    let (outcome, witness) = if limits.threads > 1 {
        match rayon::ThreadPoolBuilder::new().num_threads(limits.threads).build() {
            Ok(pool) => pool.install(|| run(&ctx)),
            Err(_) => run(&ctx),
        }
    } else {
        run(&ctx)
    };
    let nodes_explored = ctx.nodes.load(Ordering::Relaxed);
    let (values, optimal) = match witness {
        Some(w) => (w, true),
        None => (outcome.labels, false),
    };
    let witness = EdgeLabeling::new(g, values).expect("solver emits one ±1 label per edge");
    debug_assert!(is_sedf(g, &witness).unwrap_or(false));
    let cert = SednCertificate { value: witness.weight(), witness, optimal, nodes_explored };
    if optimal {
        Ok(cert)
    } else {
        Err(SolveError::BudgetExhausted(Box::new(cert)))
    }
}

/// Plain enumeration of all `2^|E|` labelings, keeping the lightest SEDF
/// and, among those, the lexicographically smallest. No pruning; only
/// usable for small edge counts.
pub fn brute_force_sedn(g: &Graph) -> Option<(i64, EdgeLabeling)> {
    let m = g.n_edges();
    assert!(m < 31, "brute force is limited to fewer than 31 edges");
    let mut best: Option<(i64, EdgeLabeling)> = None;
    for mask in 0u32..(1u32 << m) {
        // Bit (m-1-i) set means edge i is +1, so increasing masks walk the
        // labelings in lexicographic order.
        let values: Vec<i8> =
            (0..m).map(|i| if mask >> (m - 1 - i) & 1 == 1 { 1 } else { -1 }).collect();
        let f = EdgeLabeling::new(g, values).expect("valid labels");
        if !is_sedf(g, &f).expect("bound labeling") {
            continue;
        }
        let w = f.weight();
        if best.as_ref().is_none_or(|(bw, _)| w < *bw) {
            best = Some((w, f));
        }
    }
    best
}

/// Branching order for the value pass: descending endpoint degree sum,
/// ties by canonical index.
pub fn branch_order(g: &Graph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.n_edges()).collect();
    order.sort_by_key(|&i| {
        let e = g.edges()[i];
        (std::cmp::Reverse(g.degree(e.u) + g.degree(e.v)), i)
    });
    order
}

struct Outcome {
    value: i64,
    labels: Vec<i8>,
    exhausted: bool,
}

/// Immutable per-graph data shared by all workers.
struct Context {
    /// `N[e]` for every edge.
    hood: Vec<Vec<usize>>,
    max_nodes: u64,
    /// Nodes a worker counts locally before publishing; at most `max_nodes`.
    flush_every: u64,
    nodes: AtomicU64,
    stop: AtomicBool,
    /// Best weight found so far by any worker in the value pass.
    incumbent: AtomicI64,
    heuristic_order: Vec<usize>,
}

impl Context {
    fn new(g: &Graph, max_nodes: u64) -> Self {
        let hood = (0..g.n_edges())
            .map(|e| g.closed_neighborhood(e).expect("edge index in range"))
            .collect();
        Context {
            hood,
            max_nodes,
            flush_every: FLUSH_EVERY.min(max_nodes.max(1)),
            nodes: AtomicU64::new(0),
            stop: AtomicBool::new(false),
            incumbent: AtomicI64::new(g.n_edges() as i64),
            heuristic_order: branch_order(g),
        }
    }

    fn n_edges(&self) -> usize {
        self.hood.len()
    }

    fn value_pass(&self, threads: usize) -> Outcome {
        let m = self.n_edges();
        let prefixes = self.prefixes(&self.heuristic_order, threads);
        let initial = Outcome { value: m as i64, labels: vec![1; m], exhausted: false };
        let solve_prefix = |prefix: &Vec<i8>| -> Outcome {
            let mut state = PartialLabeling::new(self);
            let mut best = Outcome { value: i64::MAX, labels: Vec::new(), exhausted: false };
            if state.replay(self, &self.heuristic_order, prefix) {
                let mut worker = ValueWorker { ctx: self, state, best: &mut best, local_nodes: 0 };
                worker.descend(prefix.len());
                worker.flush();
            }
            best.exhausted = self.stop.load(Ordering::Relaxed);
            best
        };
        let reduce = |a: Outcome, b: Outcome| -> Outcome {
            let exhausted = a.exhausted || b.exhausted;
            let mut keep = if (b.value, &b.labels) < (a.value, &a.labels) { b } else { a };
            keep.exhausted = exhausted;
            keep
        };
        if threads > 1 {
            prefixes.par_iter().map(solve_prefix).reduce(|| initial_clone(&initial), reduce)
        } else {
            prefixes.iter().map(solve_prefix).fold(initial_clone(&initial), reduce)
        }
    }

    fn witness_pass(&self, target: i64, threads: usize) -> Option<Vec<i8>> {
        let canonical: Vec<usize> = (0..self.n_edges()).collect();
        let prefixes = self.prefixes(&canonical, threads);
        let solve_prefix = |prefix: &Vec<i8>| -> Option<Vec<i8>> {
            let mut state = PartialLabeling::new(self);
            if !state.replay(self, &canonical, prefix) {
                return None;
            }
            let mut worker = WitnessWorker { ctx: self, state, target, local_nodes: 0 };
            let found = worker.descend(prefix.len());
            worker.flush();
            found
        };
        let hit = if threads > 1 {
            prefixes.par_iter().find_map_first(solve_prefix)
        } else {
            prefixes.iter().find_map(solve_prefix)
        };
        if self.stop.load(Ordering::Relaxed) {
            return None;
        }
        hit
    }

    /// All feasible assignments of the first `depth` edges of `order`, in
    /// lexicographic order (`-1` first). One empty prefix when sequential.
    fn prefixes(&self, order: &[usize], threads: usize) -> Vec<Vec<i8>> {
        if threads <= 1 {
            return vec![Vec::new()];
        }
        let want = threads * 16;
        let mut depth = 0;
        while depth < order.len() && (1usize << depth) < want {
            depth += 1;
        }
        let mut out = Vec::new();
        let mut state = PartialLabeling::new(self);
        let mut current = Vec::with_capacity(depth);
        collect_prefixes(self, order, depth, &mut state, &mut current, &mut out);
        out
    }
}

fn initial_clone(o: &Outcome) -> Outcome {
    Outcome { value: o.value, labels: o.labels.clone(), exhausted: false }
}

fn collect_prefixes(
    ctx: &Context,
    order: &[usize],
    depth: usize,
    state: &mut PartialLabeling,
    current: &mut Vec<i8>,
    out: &mut Vec<Vec<i8>>,
) {
    if current.len() == depth {
        out.push(current.clone());
        return;
    }
    let e = order[current.len()];
    for sign in [-1i8, 1] {
        if state.assign(ctx, e, sign) {
            current.push(sign);
            collect_prefixes(ctx, order, depth, state, current, out);
            current.pop();
        }
        state.unassign(ctx, e, sign);
    }
}

/// Incremental bookkeeping for a partial labeling.
struct PartialLabeling {
    labels: Vec<i8>,
    /// Sum of decided labels in `N[e]`.
    decided: Vec<i32>,
    /// Number of undecided labels in `N[e]`.
    open: Vec<i32>,
    weight: i64,
    undecided: i64,
}

impl PartialLabeling {
    fn new(ctx: &Context) -> Self {
        let m = ctx.n_edges();
        PartialLabeling {
            labels: vec![0; m],
            decided: vec![0; m],
            open: ctx.hood.iter().map(|h| h.len() as i32).collect(),
            weight: 0,
            undecided: m as i64,
        }
    }

    /// Sets edge `e` to `sign`. Returns false when some neighborhood can no
    /// longer reach sum 1; the caller must still call [`Self::unassign`].
    fn assign(&mut self, ctx: &Context, e: usize, sign: i8) -> bool {
        self.labels[e] = sign;
        self.weight += i64::from(sign);
        self.undecided -= 1;
        let mut feasible = true;
        for &x in &ctx.hood[e] {
            self.decided[x] += i32::from(sign);
            self.open[x] -= 1;
            // Only a -1 can lower the optimistic sum decided + open.
            if self.decided[x] + self.open[x] < 1 {
                feasible = false;
            }
        }
        feasible
    }

    fn unassign(&mut self, ctx: &Context, e: usize, sign: i8) {
        self.labels[e] = 0;
        self.weight -= i64::from(sign);
        self.undecided += 1;
        for &x in &ctx.hood[e] {
            self.decided[x] -= i32::from(sign);
            self.open[x] += 1;
        }
    }

    fn replay(&mut self, ctx: &Context, order: &[usize], prefix: &[i8]) -> bool {
        for (&e, &sign) in order.iter().zip(prefix) {
            if !self.assign(ctx, e, sign) {
                return false;
            }
        }
        true
    }

    /// Smallest weight any completion can reach.
    fn weight_floor(&self) -> i64 {
        self.weight - self.undecided
    }
}

const FLUSH_EVERY: u64 = 4096;

fn tick(ctx: &Context, local: &mut u64) -> bool {
    *local += 1;
    if *local >= ctx.flush_every {
        let total = ctx.nodes.fetch_add(*local, Ordering::Relaxed) + *local;
        *local = 0;
        if total >= ctx.max_nodes {
            ctx.stop.store(true, Ordering::Relaxed);
        }
    }
    !ctx.stop.load(Ordering::Relaxed)
}

fn flush(ctx: &Context, local: &mut u64) {
    ctx.nodes.fetch_add(*local, Ordering::Relaxed);
    *local = 0;
}

struct ValueWorker<'a> {
    ctx: &'a Context,
    state: PartialLabeling,
    best: &'a mut Outcome,
    local_nodes: u64,
}

impl ValueWorker<'_> {
    fn descend(&mut self, depth: usize) {
        if !tick(self.ctx, &mut self.local_nodes) {
            return;
        }
        let order = &self.ctx.heuristic_order;
        if depth == order.len() {
            let w = self.state.weight;
            if w < self.best.value {
                self.best.value = w;
                self.best.labels = self.state.labels.clone();
            }
            self.ctx.incumbent.fetch_min(w, Ordering::Relaxed);
            return;
        }
        // Completions share the parity of |E|, so an improvement is at
        // least 2 below the incumbent.
        let incumbent = self.ctx.incumbent.load(Ordering::Relaxed);
        if self.state.weight_floor() > incumbent - 2 {
            return;
        }
        let e = order[depth];
        for sign in [-1i8, 1] {
            if self.state.assign(self.ctx, e, sign) {
                self.descend(depth + 1);
            }
            self.state.unassign(self.ctx, e, sign);
        }
    }

    fn flush(&mut self) {
        flush(self.ctx, &mut self.local_nodes);
    }
}

struct WitnessWorker<'a> {
    ctx: &'a Context,
    state: PartialLabeling,
    target: i64,
    local_nodes: u64,
}

impl WitnessWorker<'_> {
    fn descend(&mut self, depth: usize) -> Option<Vec<i8>> {
        if !tick(self.ctx, &mut self.local_nodes) {
            return None;
        }
        if depth == self.ctx.n_edges() {
            debug_assert!(self.state.weight >= self.target);
            return (self.state.weight == self.target).then(|| self.state.labels.clone());
        }
        if self.state.weight_floor() > self.target {
            return None;
        }
        for sign in [-1i8, 1] {
            let found = if self.state.assign(self.ctx, depth, sign) { self.descend(depth + 1) } else { None };
            self.state.unassign(self.ctx, depth, sign);
            if found.is_some() {
                return found;
            }
        }
        None
    }

    fn flush(&mut self) {
        flush(self.ctx, &mut self.local_nodes);
    }
}
