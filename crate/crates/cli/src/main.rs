//! `sedf`: signed edge domination on the command line.
//!
//! Exit codes: 0 success, 1 a checked constraint does not hold, 2 usage or
//! input errors, 3 search budget exhausted.

mod report;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use sedf::bounds::{ElementaryLimits, DEFAULT_ELEMENTARY_NODES};
use sedf::constructions::kmn::kmn_partitioned;
use sedf::io::{parse_graph, parse_labeling, write_graph, write_labeling};
use sedf::solver::DEFAULT_MAX_NODES;
use sedf::{
    counterexample, edge_domination_sums, elementary_lower_bound, exact_sedn, g_bounds, is_sedf,
    kmn_case, kmn_construction, kmn_sedn, l_graph, l_graph_sedf, max_elementary_subgraph,
    order_lower_bound, vertex_connectivity_at_least, BoundsError, ConstructionId, EdgeLabeling,
    Graph, PartitionedGraph, Rational, SearchLimits, SolveError,
};

use report::Report;

#[derive(Parser)]
#[command(name = "sedf", version, about = "Signed edge domination: verify, solve, construct, bound")]
struct Cli {
    /// Print one JSON object instead of `key: value` lines.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a labeling and print every edge's domination sum.
    Verify {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        labeling: PathBuf,
    },
    /// Compute the signed edge domination number exactly.
    Solve {
        #[arg(long)]
        graph: PathBuf,
        #[command(flatten)]
        budget: Budget,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        /// Write the witness labeling here.
        #[arg(long)]
        witness: Option<PathBuf>,
    },
    /// Closed form and explicit labelings for K_{m,n}.
    Kmn {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        /// Use this construction (e.g. ii-g, iv-case2) instead of the optimal one.
        #[arg(long)]
        construction: Option<String>,
        #[arg(long)]
        witness: Option<PathBuf>,
        /// Write K_{m,n} with its part annotations.
        #[arg(long)]
        graph_out: Option<PathBuf>,
    },
    /// Build the graph L_(m,n).
    Lgraph {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write its signed edge dominating function here.
        #[arg(long)]
        sedf: Option<PathBuf>,
    },
    /// Emit the m-connected graph L_(m,2) with weight -(m/6)|V|.
    Counterexample {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        sedf: Option<PathBuf>,
        /// Skip the connectivity check above this many vertices.
        #[arg(long, default_value_t = 400)]
        connectivity_limit: usize,
    },
    /// Bounds on g(k), or the lower-bound chain for one graph.
    Bounds {
        #[arg(long, conflicts_with = "graph", required_unless_present = "graph")]
        k: Option<usize>,
        #[arg(long)]
        graph: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_ELEMENTARY_NODES)]
        elementary_budget: u64,
    },
    /// Maximum elementary subgraph (disjoint edges and odd cycles).
    Elementary {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, default_value_t = DEFAULT_ELEMENTARY_NODES)]
        elementary_budget: u64,
    },
}

#[derive(Args)]
struct Budget {
    /// Search node budget.
    #[arg(long = "budget", env = "SEDF_MAX_NODES", default_value_t = DEFAULT_MAX_NODES)]
    max_nodes: u64,
}

struct Failure {
    exit: u8,
    code: &'static str,
    msg: String,
}

impl Failure {
    fn input(code: &'static str, msg: impl ToString) -> Self {
        Failure { exit: 2, code, msg: msg.to_string() }
    }
}

/// What a command produced: the report, and an exit code if it is not 0.
type Outcome = Result<(Report, u8), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok((report, exit)) => {
            print!("{}", report.render(cli.json));
            ExitCode::from(exit)
        }
        Err(f) => {
            if cli.json {
                eprintln!("{}", json!({"error": f.code, "message": f.msg}));
            } else {
                eprintln!("error[{}]: {}", f.code, f.msg);
            }
            ExitCode::from(f.exit)
        }
    }
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Verify { graph, labeling } => verify(&graph, &labeling),
        Command::Solve { graph, budget, threads, witness } => solve(&graph, budget.max_nodes, threads, witness.as_deref()),
        Command::Kmn { m, n, construction, witness, graph_out } => {
            kmn(m, n, construction.as_deref(), witness.as_deref(), graph_out.as_deref())
        }
        Command::Lgraph { m, n, out, sedf } => lgraph(m, n, out.as_deref(), sedf.as_deref()),
        Command::Counterexample { m, out, sedf, connectivity_limit } => {
            refutation(m, out.as_deref(), sedf.as_deref(), connectivity_limit)
        }
        Command::Bounds { k: Some(k), .. } => Ok((g_table(k), 0)),
        Command::Bounds { graph, elementary_budget, .. } => {
            chain(&graph.expect("clap enforces --k or --graph"), elementary_budget)
        }
        Command::Elementary { graph, elementary_budget } => elementary(&graph, elementary_budget),
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::input("io", format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::input("io", format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<Graph, Failure> {
    parse_graph(&read(path)?).map_err(|e| Failure::input("parse", format!("{}: {e}", path.display())))
}

fn save_labeling(path: &Path, g: &Graph, f: &EdgeLabeling, comments: &[String]) -> Result<(), Failure> {
    let text = write_labeling(g, f, comments).map_err(|e| Failure::input("labeling", e))?;
    write(path, &text)
}

fn rat(r: Rational) -> Value {
    Value::String(r.to_string())
}

fn verify(graph: &Path, labeling: &Path) -> Outcome {
    let g = load_graph(graph)?;
    let f = parse_labeling(&g, &read(labeling)?)
        .map_err(|e| Failure::input("parse", format!("{}: {e}", labeling.display())))?;
    let sums = edge_domination_sums(&g, &f).map_err(|e| Failure::input("labeling", e))?;
    let edges: Vec<Value> = g
        .edges()
        .iter()
        .zip(&sums)
        .map(|(e, &s)| json!({"u": e.u, "v": e.v, "sum": s}))
        .collect();
    let ok = sums.iter().all(|&s| s >= 1);
    let mut r = Report::new();
    r.put("edge", edges).put("weight", f.weight()).put("sedf", ok);
    Ok((r, if ok { 0 } else { 1 }))
}

fn solve(graph: &Path, max_nodes: u64, threads: usize, witness: Option<&Path>) -> Outcome {
    let g = load_graph(graph)?;
    let (cert, exit) = match exact_sedn(&g, SearchLimits { max_nodes, threads }) {
        Ok(c) => (c, 0),
        Err(e @ SolveError::BudgetExhausted(_)) => {
            eprintln!("error[budget]: {e}");
            (e.best().clone(), 3)
        }
    };
    if let Some(path) = witness {
        let note = if cert.optimal { "optimal" } else { "best found, not proven optimal" };
        save_labeling(path, &g, &cert.witness, &[format!("weight {} ({note})", cert.value)])?;
    }
    let mut r = Report::new();
    r.put("vertices", g.n_vertices())
        .put("edges", g.n_edges())
        .put("value", cert.value)
        .put("optimal", cert.optimal)
        .put("nodes", cert.nodes_explored)
        .put("witness", cert.witness.values().iter().map(|&x| i64::from(x)).collect::<Vec<_>>());
    Ok((r, exit))
}

fn construction_failure(e: impl ToString) -> Failure {
    Failure::input("construction", e)
}

fn kmn(m: usize, n: usize, construction: Option<&str>, witness: Option<&Path>, graph_out: Option<&Path>) -> Outcome {
    let case = kmn_case(m, n).map_err(construction_failure)?;
    let id = match construction {
        Some(s) => s.parse::<ConstructionId>().map_err(construction_failure)?,
        None => case.construction,
    };
    let f = kmn_construction(m, n, id).map_err(construction_failure)?;
    let pg = kmn_partitioned(m, n, id).map_err(construction_failure)?;
    let ok = is_sedf(&pg.graph, &f).map_err(|e| Failure::input("labeling", e))?;
    if let Some(path) = graph_out {
        write(path, &write_graph(&pg.graph, &pg.annotations()))?;
    }
    if let Some(path) = witness {
        save_labeling(path, &pg.graph, &f, &[format!("{id} on K_{{{m},{n}}}, weight {}", f.weight())])?;
    }
    let mut r = Report::new();
    r.put("value", kmn_sedn(m, n))
        .put("case", format!("{} {:?}", case.parity_case.roman(), case.sub_case))
        .put("transposed", case.transposed)
        .put("construction", id.as_str())
        .put("construction_weight", f.weight())
        .put("sedf", ok);
    Ok((r, if ok { 0 } else { 1 }))
}

fn emit(pg: &PartitionedGraph, f: &EdgeLabeling, out: Option<&Path>, sedf: Option<&Path>) -> Result<(), Failure> {
    let notes = pg.annotations();
    if let Some(path) = out {
        write(path, &write_graph(&pg.graph, &notes))?;
    }
    if let Some(path) = sedf {
        save_labeling(path, &pg.graph, f, &[format!("weight {}", f.weight())])?;
    }
    Ok(())
}

fn lgraph(m: usize, n: usize, out: Option<&Path>, sedf: Option<&Path>) -> Outcome {
    let pg = l_graph(m, n).map_err(construction_failure)?;
    let f = l_graph_sedf(&pg).map_err(construction_failure)?;
    let ok = is_sedf(&pg.graph, &f).map_err(|e| Failure::input("labeling", e))?;
    emit(&pg, &f, out, sedf)?;
    let mut r = Report::new();
    r.put("vertices", pg.graph.n_vertices())
        .put("edges", pg.graph.n_edges())
        .put("weight", f.weight())
        .put("weight_per_vertex", rat(Rational::new(f.weight(), pg.graph.n_vertices() as i64)))
        .put("sedf", ok);
    Ok((r, if ok { 0 } else { 1 }))
}

fn refutation(m: usize, out: Option<&Path>, sedf: Option<&Path>, connectivity_limit: usize) -> Outcome {
    let (pg, f) = counterexample(m).map_err(construction_failure)?;
    let g = &pg.graph;
    let ok = is_sedf(g, &f).map_err(|e| Failure::input("labeling", e))?;
    emit(&pg, &f, out, sedf)?;
    let bound = Rational::new(-(m as i64), 6) * g.n_vertices() as i64;
    let meets = Rational::from_integer(f.weight()) <= bound;
    let connected = (g.n_vertices() <= connectivity_limit).then(|| vertex_connectivity_at_least(g, m));
    let mut r = Report::new();
    r.put("m", m)
        .put("vertices", g.n_vertices())
        .put("edges", g.n_edges())
        .put("weight", f.weight())
        .put("bound", rat(bound))
        .put("weight_at_most_bound", meets)
        .put("sedf", ok)
        .put("m_connected", connected.map_or(Value::Null, Value::Bool));
    let holds = ok && meets && connected != Some(false);
    Ok((r, if holds { 0 } else { 1 }))
}

fn g_table(k: usize) -> Report {
    let b = g_bounds(k);
    let mut r = Report::new();
    r.put("k", k)
        .put("lower", rat(b.lower))
        .put("lower_source", b.lower_source)
        .put("upper", b.upper.map_or(Value::Null, rat))
        .put("upper_source", b.upper_source.map_or(Value::Null, Value::from))
        .put("sharper_upper", b.sharper_upper.map_or(Value::Null, rat));
    r
}

fn max_elementary(g: &Graph, budget: u64) -> Result<sedf::ElementarySubgraph, Failure> {
    max_elementary_subgraph(g, ElementaryLimits { max_nodes: budget }).map_err(|e| match e {
        BoundsError::BudgetExhausted(_) => Failure { exit: 3, code: "budget", msg: e.to_string() },
        other => Failure { exit: 1, code: "bounds", msg: other.to_string() },
    })
}

fn chain(graph: &Path, budget: u64) -> Outcome {
    let g = load_graph(graph)?;
    let h = max_elementary(&g, budget)?;
    let lower = elementary_lower_bound(&g, &h).map_err(|e| Failure { exit: 1, code: "bounds", msg: e.to_string() })?;
    let mut r = Report::new();
    r.put("vertices", g.n_vertices())
        .put("alpha", h.alpha)
        .put("elementary_bound", rat(lower))
        .put("order_bound", rat(order_lower_bound(g.n_vertices())));
    Ok((r, 0))
}

fn elementary(graph: &Path, budget: u64) -> Outcome {
    let g = load_graph(graph)?;
    let h = max_elementary(&g, budget)?;
    let matching: Vec<String> = h
        .matching_edges
        .iter()
        .map(|&e| g.edges()[e].to_string())
        .collect();
    let cycles: Vec<String> = h
        .odd_cycles
        .iter()
        .map(|c| c.iter().map(ToString::to_string).collect::<Vec<_>>().join("-"))
        .collect();
    let mut r = Report::new();
    r.put("vertices", g.n_vertices())
        .put("covered", h.covered)
        .put("alpha", h.alpha)
        .put("matching", matching)
        .put("odd_cycles", cycles)
        .put("maximum", h.maximum);
    Ok((r, 0))
}
