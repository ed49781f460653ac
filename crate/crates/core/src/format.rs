//! The plain-text arc-list format.
//!
//! ```text
//! # optional comment lines
//! n m
//! u v      (m lines, 0-indexed arc u -> v)
//! ```
//!
//! Output is normalized: arcs sorted and deduplicated, every line
//! newline-terminated. Blank lines and `#` comments are accepted anywhere on
//! input.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::generators::UndirectedGraph;
use crate::graph::Digraph;

/// Result of parsing: the graph and how many duplicate arcs were collapsed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Parsed<G> {
    pub graph: G,
    pub duplicates: usize,
}

pub fn parse_digraph(text: &str) -> Result<Parsed<Digraph>> {
    let (n, pairs) = parse_pairs(text)?;
    for &(line, u, v) in &pairs {
        check_pair(line, n, u, v)?;
    }
    let (graph, duplicates) = Digraph::from_arcs_counting(n, pairs.iter().map(|&(_, u, v)| (u, v)))?;
    Ok(Parsed { graph, duplicates })
}

/// Same grammar, each line read as an undirected edge `{u, v}`.
pub fn parse_undirected(text: &str) -> Result<Parsed<UndirectedGraph>> {
    let (n, pairs) = parse_pairs(text)?;
    for &(line, u, v) in &pairs {
        check_pair(line, n, u, v)?;
    }
    let (graph, duplicates) = UndirectedGraph::from_edges_counting(n, pairs.iter().map(|&(_, u, v)| (u, v)))?;
    Ok(Parsed { graph, duplicates })
}

fn check_pair(line: usize, n: usize, u: usize, v: usize) -> Result<()> {
    let err = |source| Error::AtLine { line, source: Box::new(source) };
    for x in [u, v] {
        if x >= n {
            return Err(err(Error::VertexOutOfRange { vertex: x, n }));
        }
    }
    if u == v {
        return Err(err(Error::SelfLoop { vertex: u }));
    }
    Ok(())
}

type LinePair = (usize, usize, usize);

fn parse_pairs(text: &str) -> Result<(usize, Vec<LinePair>)> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (hline, header) = lines.next().ok_or(Error::Parse { line: 0, message: "missing `n m` header".into() })?;
    let (n, m) = two_numbers(hline, header, "header")?;

    let mut pairs = Vec::with_capacity(m);
    for (line, body) in lines {
        if pairs.len() == m {
            return Err(Error::Parse { line, message: format!("more than the {m} declared arcs") });
        }
        let (u, v) = two_numbers(line, body, "arc")?;
        pairs.push((line, u, v));
    }
    if pairs.len() != m {
        return Err(Error::Parse {
            line: hline,
            message: format!("header declares {m} arcs but {} were given", pairs.len()),
        });
    }
    Ok((n, pairs))
}

fn two_numbers(line: usize, body: &str, what: &str) -> Result<(usize, usize)> {
    let malformed = || Error::Parse { line, message: format!("malformed {what} line `{body}`") };
    let mut it = body.split_ascii_whitespace();
    let a = it.next().and_then(|t| t.parse().ok()).ok_or_else(malformed)?;
    let b = it.next().and_then(|t| t.parse().ok()).ok_or_else(malformed)?;
    if it.next().is_some() {
        return Err(malformed());
    }
    Ok((a, b))
}

pub fn write_arc_list(graph: &Digraph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", graph.vertex_count(), graph.arc_count());
    for (u, v) in graph.arcs() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// Edges written once each as `u v` with `u < v`.
pub fn write_edge_list(graph: &UndirectedGraph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", graph.vertex_count(), graph.edge_count());
    for (u, v) in graph.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}
