//! End-to-end acceptance checks. Each criterion prints one PASS/FAIL line;
//! the test fails if any criterion fails.

mod common;

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sedf::bounds::{sample_cycles, ElementaryLimits};
use sedf::constructions::kmn::ConstructionId;
use sedf::constructions::lgraph::block_size;
use sedf::domination::naive_neighborhood_sum;
use sedf::{
    counterexample, cycle_sum_check, edge_domination_sum, elementary_lower_bound, exact_sedn, g_bounds,
    is_sedf, kmn_construction, kmn_sedn, kmn_witness, l_graph, l_graph_sedf, max_elementary_subgraph,
    order_lower_bound, vertex_connectivity_at_least, vertex_sums, EdgeLabeling, Graph, Rational,
    SearchLimits,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn(&mut Witnesses) -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

/// Optimal witnesses collected by criteria 1-3 for the cycle probe.
#[derive(Default)]
struct Witnesses(Vec<(String, Graph, EdgeLabeling)>);

fn within(limit: Duration, start: Instant) -> Result<(), String> {
    let t = start.elapsed();
    if t <= limit {
        Ok(())
    } else {
        Err(format!("took {t:?}, limit {limit:?}"))
    }
}

fn l21_value(w: &mut Witnesses) -> Outcome {
    let start = Instant::now();
    let lg = l_graph(2, 1).map_err(|e| e.to_string())?;
    let g = &lg.graph;
    ensure!(g.n_vertices() == 10 && g.n_edges() == 20, "L(2,1) has {} vertices, {} edges", g.n_vertices(), g.n_edges());
    let cert = exact_sedn(g, SearchLimits::default()).map_err(|e| e.to_string())?;
    ensure!(cert.optimal, "search did not close");
    ensure!(cert.value == 0, "value {} != 0", cert.value);
    ensure!(is_sedf(g, &cert.witness).unwrap(), "witness is not an SEDF");
    ensure!(cert.witness.weight() == 0, "witness weight {}", cert.witness.weight());
    within(Duration::from_secs(60), start)?;
    w.0.push(("L(2,1)".into(), g.clone(), cert.witness));
    Ok(format!("gamma = 0, {} nodes, {:?}", cert.nodes_explored, start.elapsed()))
}

fn refutation(_: &mut Witnesses) -> Outcome {
    let start = Instant::now();
    let (lg, f) = counterexample(2).map_err(|e| e.to_string())?;
    let g = &lg.graph;
    ensure!(g.n_vertices() == 21, "order {}", g.n_vertices());
    ensure!(vertex_connectivity_at_least(g, 2), "not 2-connected");
    ensure!(is_sedf(g, &f).unwrap(), "labeling is not an SEDF");
    ensure!(f.weight() == -7, "weight {}", f.weight());
    let bound = Rational::new(-2, 6) * g.n_vertices() as i64;
    ensure!(Rational::from_integer(f.weight()) <= bound, "weight above -(m/6)|V| = {bound}");
    within(Duration::from_secs(10), start)?;
    Ok(format!("2-connected, 21 vertices, weight -7 <= {bound}"))
}

fn kmn_exactness(w: &mut Witnesses) -> Outcome {
    let start = Instant::now();
    let mut count = 0;
    let mut parities = std::collections::BTreeSet::new();
    for m in 1..=20usize {
        for n in m..=20usize {
            if m * n > 20 {
                continue;
            }
            let g = Graph::complete_bipartite(m, n).unwrap();
            let cert = exact_sedn(&g, SearchLimits::default()).map_err(|e| e.to_string())?;
            let formula = kmn_sedn(m, n);
            ensure!(cert.optimal && cert.value == formula, "K_{{{m},{n}}}: solver {} vs closed form {formula}", cert.value);
            let f = kmn_witness(m, n).map_err(|e| e.to_string())?;
            ensure!(is_sedf(&g, &f).unwrap(), "K_{{{m},{n}}}: witness is not an SEDF");
            ensure!(f.weight() == formula, "K_{{{m},{n}}}: witness weight {} vs {formula}", f.weight());
            parities.insert((m % 2, n % 2));
            w.0.push((format!("K_{{{m},{n}}}"), g, cert.witness));
            count += 1;
        }
    }
    ensure!(parities.len() == 4, "only {} parity classes covered", parities.len());
    within(Duration::from_secs(600), start)?;
    Ok(format!("{count} instances agree, {:?}", start.elapsed()))
}

fn construction_sweep(_: &mut Witnesses) -> Outcome {
    let start = Instant::now();
    let mut count = 0;
    for m in 1..=12usize {
        for n in m..=25usize {
            let g = Graph::complete_bipartite(m, n).unwrap();
            for id in ConstructionId::ALL {
                if id.check_range(m, n).is_err() {
                    continue;
                }
                let f = kmn_construction(m, n, id).map_err(|e| e.to_string())?;
                ensure!(is_sedf(&g, &f).unwrap(), "{id} on K_{{{m},{n}}} is not an SEDF");
                ensure!(f.weight() == id.weight(m, n), "{id} on K_{{{m},{n}}}: weight {} vs {}", f.weight(), id.weight(m, n));
                count += 1;
            }
        }
    }
    within(Duration::from_secs(120), start)?;
    Ok(format!("{count} labelings verified"))
}

fn l_graph_identity(_: &mut Witnesses) -> Outcome {
    let start = Instant::now();
    for m in 1..=6usize {
        for n in 1..=6usize {
            let lg = l_graph(m, n).map_err(|e| e.to_string())?;
            let f = l_graph_sedf(&lg).map_err(|e| e.to_string())?;
            ensure!(is_sedf(&lg.graph, &f).unwrap(), "L({m},{n}) labeling is not an SEDF");
            let (mi, ni) = (m as i64, n as i64);
            let expected = (mi * ni + mi + 1) * (mi - mi * ni) / 2;
            ensure!(f.weight() == expected, "L({m},{n}) weight {} vs {expected}", f.weight());
            let r = block_size(m, n);
            let s = vertex_sums(&lg.graph, &f).unwrap();
            ensure!(s[..r].iter().all(|&x| x == mi), "L({m},{n}): V1 sums not all {m}");
            ensure!(s[r..].iter().all(|&x| x == -mi), "L({m},{n}): outer sums not all -{m}");
        }
    }
    within(Duration::from_secs(60), start)?;
    Ok("36 pairs".into())
}

fn lower_bound_chain(_: &mut Witnesses) -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for i in 0..200 {
        let n = rng.gen_range(2..=10);
        let m = rng.gen_range(0..=(n * (n - 1) / 2).min(10));
        let g = common::random_graph(&mut rng, n, m);
        let value = exact_sedn(&g, SearchLimits::default()).map_err(|e| e.to_string())?.value;
        let h = max_elementary_subgraph(&g, ElementaryLimits::default()).map_err(|e| e.to_string())?;
        let chain = elementary_lower_bound(&g, &h).map_err(|e| e.to_string())?;
        ensure!(Rational::from_integer(value) >= chain, "graph {i}: value {value} < {chain}");
        ensure!(chain >= order_lower_bound(n), "graph {i}: {chain} < -n^2/16");
    }
    for i in 0..100 {
        let n = 2 * rng.gen_range(1..=6);
        let extra = rng.gen_range(0..=(20 - n / 2).min(n * (n - 1) / 2 - n / 2));
        let g = common::random_matchable_graph(&mut rng, n, extra);
        let h = max_elementary_subgraph(&g, ElementaryLimits::default()).map_err(|e| e.to_string())?;
        ensure!(h.alpha == 0, "matchable graph {i} has alpha {}", h.alpha);
        let value = exact_sedn(&g, SearchLimits::default()).map_err(|e| e.to_string())?.value;
        ensure!(value >= 0, "matchable graph {i}: value {value} < 0");
    }
    within(Duration::from_secs(600), start)?;
    Ok(format!("300 graphs, 0 violations, {:?}", start.elapsed()))
}

fn neighborhood_identity(_: &mut Witnesses) -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(500);
    let mut edges = 0;
    for _ in 0..500 {
        let n = rng.gen_range(1..=12);
        let m = rng.gen_range(0..=n * (n - 1) / 2);
        let g = common::random_graph(&mut rng, n, m);
        let f = common::random_labeling(&mut rng, &g);
        for e in 0..g.n_edges() {
            let fast = edge_domination_sum(&g, &f, e).unwrap();
            let naive = naive_neighborhood_sum(&g, &f, e).unwrap();
            ensure!(fast == naive, "edge {e}: {fast} vs {naive}");
            edges += 1;
        }
    }
    within(Duration::from_secs(10), start)?;
    Ok(format!("{edges} edges checked"))
}

fn cycle_probe(w: &mut Witnesses) -> Outcome {
    let mut cycles = 0;
    for (name, g, f) in &w.0 {
        for c in sample_cycles(g, 50) {
            let sum = cycle_sum_check(g, f, &c).map_err(|e| format!("{name}: {e}"))?;
            ensure!(sum >= 0, "{name}: cycle {c:?} sums to {sum}");
            cycles += 1;
        }
    }
    ensure!(cycles > 0, "no cycles sampled");
    Ok(format!("{cycles} cycles over {} witnesses", w.0.len()))
}

fn g_table(_: &mut Witnesses) -> Outcome {
    let r = g_bounds(12);
    ensure!(r.lower == Rational::from_integer(-9), "g(12) lower {}", r.lower);
    ensure!(r.upper == Some(Rational::new(-2, 9)), "g(12) upper {:?}", r.upper);
    let r = g_bounds(21);
    ensure!(r.sharper_upper == Some(Rational::from_integer(-7)), "g(21) sharper {:?}", r.sharper_upper);
    Ok("g(12) in [-9, -2/9], g(21) <= -7".into())
}

#[test]
fn acceptance_criteria() {
    let criteria: [Criterion; 9] = [
        ("1 L(2,1) has gamma = 0", l21_value),
        ("2 m-connected L(2,2) certificate", refutation),
        ("3 K_{m,n} exactness sweep", kmn_exactness),
        ("4 construction validity sweep", construction_sweep),
        ("5 L(m,n) labeling identity", l_graph_identity),
        ("6 lower-bound chain", lower_bound_chain),
        ("7 neighborhood-sum identity", neighborhood_identity),
        ("8 cycle-sum probe", cycle_probe),
        ("9 g(k) table", g_table),
    ];
    let mut witnesses = Witnesses::default();
    let mut failed = Vec::new();
    for (name, run) in criteria {
        match run(&mut witnesses) {
            Ok(detail) => println!("PASS [{name}] {detail}"),
            Err(why) => {
                println!("FAIL [{name}] {why}");
                failed.push(name);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
