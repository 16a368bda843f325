//! Plain-text formats.
//!
//! Edge list: the first data line is `n_vertices n_edges`, followed by one
//! `u v` pair per edge (0-based, whitespace separated). Labeling: one
//! `u v w` line per edge with `w` one of `-1`, `1`, `+1`; every edge of the
//! graph appears exactly once. In both formats `#` starts a comment and
//! blank lines are ignored.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{Graph, GraphError};
use crate::labeling::{EdgeLabeling, LabelingError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("missing header line `n_vertices n_edges`")]
    MissingHeader,
    #[error("header announces {expected} edges but {found} were listed")]
    EdgeCount { expected: usize, found: usize },
    #[error("line {line}: edge {u}-{v} is not in the graph")]
    UnknownEdge { line: usize, u: usize, v: usize },
    #[error("line {line}: edge {u}-{v} labeled twice")]
    RepeatedEdge { line: usize, u: usize, v: usize },
    #[error("edge {u}-{v} has no label")]
    MissingEdge { u: usize, v: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Labeling(#[from] LabelingError),
}

/// Non-empty, comment-stripped lines with their 1-based line numbers.
fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn parse_fields<const N: usize>(line: usize, s: &str) -> Result<[&str; N], ParseError> {
    let fields: Vec<&str> = s.split_whitespace().collect();
    fields.try_into().map_err(|f: Vec<&str>| ParseError::Syntax {
        line,
        msg: format!("expected {N} fields, found {}", f.len()),
    })
}

fn parse_index(line: usize, s: &str) -> Result<usize, ParseError> {
    s.parse().map_err(|_| ParseError::Syntax { line, msg: format!("invalid index {s:?}") })
}

pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut lines = data_lines(text);
    let (hline, header) = lines.next().ok_or(ParseError::MissingHeader)?;
    let [n, m] = parse_fields::<2>(hline, header)?;
    let (n, m) = (parse_index(hline, n)?, parse_index(hline, m)?);
    let mut pairs = Vec::with_capacity(m);
    for (line, s) in lines {
        let [u, v] = parse_fields::<2>(line, s)?;
        pairs.push((parse_index(line, u)?, parse_index(line, v)?));
    }
    if pairs.len() != m {
        return Err(ParseError::EdgeCount { expected: m, found: pairs.len() });
    }
    Ok(Graph::build(n, &pairs)?)
}

/// Writes `g` in canonical edge order, with optional `#` header lines.
pub fn write_graph(g: &Graph, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        let _ = writeln!(out, "# {c}");
    }
    let _ = writeln!(out, "{} {}", g.n_vertices(), g.n_edges());
    for e in g.edges() {
        let _ = writeln!(out, "{} {}", e.u, e.v);
    }
    out
}

pub fn parse_labeling(g: &Graph, text: &str) -> Result<EdgeLabeling, ParseError> {
    let mut values = vec![0i8; g.n_edges()];
    for (line, s) in data_lines(text) {
        let [u, v, w] = parse_fields::<3>(line, s)?;
        let (u, v) = (parse_index(line, u)?, parse_index(line, v)?);
        let w = match w {
            "-1" => -1,
            "1" | "+1" => 1,
            other => {
                return Err(ParseError::Syntax { line, msg: format!("label {other:?} is not -1, 1 or +1") })
            }
        };
        let e = g.edge_index(u, v).ok_or(ParseError::UnknownEdge { line, u, v })?;
        if values[e] != 0 {
            return Err(ParseError::RepeatedEdge { line, u, v });
        }
        values[e] = w;
    }
    if let Some(e) = values.iter().position(|&x| x == 0) {
        let edge = g.edges()[e];
        return Err(ParseError::MissingEdge { u: edge.u, v: edge.v });
    }
    Ok(EdgeLabeling::new(g, values)?)
}

pub fn write_labeling(g: &Graph, f: &EdgeLabeling, comments: &[String]) -> Result<String, LabelingError> {
    f.check_bound(g)?;
    let mut out = String::new();
    for c in comments {
        let _ = writeln!(out, "# {c}");
    }
    for (e, &w) in g.edges().iter().zip(f.values()) {
        let _ = writeln!(out, "{} {} {}", e.u, e.v, w);
    }
    Ok(out)
}
