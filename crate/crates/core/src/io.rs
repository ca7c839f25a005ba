//! Text formats.
//!
//! Graphs use an edge list: a header line `n m`, then `m` lines `u v` with
//! 1-based vertex ids. Lines starting with `#` and blank lines are skipped.
//! Orderings are a single line holding a permutation of `1..=n`.

use std::collections::HashSet;

use thiserror::Error;

use crate::graph::{EdgePair, Graph, GraphError};
use crate::ordering::{OrderingError, VertexOrdering};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("line {line}: {source}")]
    Graph { line: usize, source: GraphError },
    #[error("missing header line `n m`")]
    MissingHeader,
    #[error("header declares {declared} edges, found {found}")]
    EdgeCount { declared: usize, found: usize },
    #[error("missing ordering line")]
    MissingOrdering,
    #[error("line {line}: {source}")]
    Ordering { line: usize, source: OrderingError },
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_ids(line: usize, text: &str) -> Result<Vec<usize>, ParseError> {
    text.split_whitespace()
        .map(|tok| {
            tok.parse()
                .map_err(|_| ParseError::Malformed { line, message: format!("`{tok}` is not a non-negative integer") })
        })
        .collect()
}

fn parse_two(line: usize, text: &str) -> Result<(usize, usize), ParseError> {
    match parse_ids(line, text)?[..] {
        [a, b] => Ok((a, b)),
        _ => Err(ParseError::Malformed { line, message: format!("expected two integers, got `{text}`") }),
    }
}

/// Parses the edge-list format. Errors carry the 1-based line number.
pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or(ParseError::MissingHeader)?;
    let (n, m) = parse_two(hline, header)?;

    let mut seen = HashSet::with_capacity(m);
    let mut pairs = Vec::with_capacity(m);
    for (line, body) in lines {
        let (u, v) = parse_two(line, body)?;
        let err = |source| ParseError::Graph { line, source };
        for x in [u, v] {
            if x == 0 || x > n {
                return Err(err(GraphError::VertexOutOfRange { vertex: x, n }));
            }
        }
        if u == v {
            return Err(err(GraphError::SelfLoop(u)));
        }
        let e = EdgePair::new(u - 1, v - 1);
        if !seen.insert(e) {
            return Err(err(GraphError::DuplicateEdge(e)));
        }
        pairs.push(e);
    }
    if pairs.len() != m {
        return Err(ParseError::EdgeCount { declared: m, found: pairs.len() });
    }
    Graph::from_pairs(n, pairs).map_err(|source| ParseError::Graph { line: hline, source })
}

/// Canonical edge-list text; edges ascending, 1-based.
pub fn serialize_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for e in g.edges() {
        out.push_str(&format!("{} {}\n", e.u() + 1, e.v() + 1));
    }
    out
}

/// Parses a 1-based permutation on the first non-comment line.
pub fn parse_ordering(text: &str, n: usize) -> Result<VertexOrdering, ParseError> {
    let (line, body) = content_lines(text).next().ok_or(ParseError::MissingOrdering)?;
    let ids = parse_ids(line, body)?;
    let err = |source| ParseError::Ordering { line, source };
    if ids.len() != n {
        return Err(err(OrderingError::WrongLength { expected: n, got: ids.len() }));
    }
    let mut seq = Vec::with_capacity(n);
    for id in ids {
        if id == 0 || id > n {
            return Err(err(OrderingError::OutOfRange { vertex: id, n }));
        }
        seq.push(id - 1);
    }
    VertexOrdering::from_sequence(seq).map_err(|e| match e {
        OrderingError::Repeated(v) => err(OrderingError::Repeated(v + 1)),
        other => err(other),
    })
}

pub fn format_ordering(order: &VertexOrdering) -> String {
    let ids: Vec<String> = order.as_slice().iter().map(|v| (v + 1).to_string()).collect();
    ids.join(" ")
}

/// Sorted, space-separated `u-v` tokens.
pub fn format_pairs<I>(pairs: I) -> String
where
    I: IntoIterator<Item = EdgePair>,
{
    let mut v: Vec<EdgePair> = pairs.into_iter().collect();
    v.sort_unstable();
    v.dedup();
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}
