//! Edge-list, JSON and DOT encodings of [`Graph`].
//!
//! Edge list: a header line `n m`, then `m` lines `u v`. JSON:
//! `{"n": int, "edges": [[u, v], ...]}`. Writers always emit edges as
//! `u < v` in lexicographic order; readers keep the file order of edges.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    EdgeList,
    Json,
    Dot,
}

#[derive(Serialize, Deserialize)]
struct JsonGraph {
    n: usize,
    edges: Vec<[usize; 2]>,
}

/// Picks JSON when the first non-whitespace byte is `{`, edge list otherwise.
pub fn detect_format(bytes: &[u8]) -> Format {
    match bytes.iter().find(|b| !b.is_ascii_whitespace()) {
        Some(b'{') => Format::Json,
        _ => Format::EdgeList,
    }
}

pub fn parse_graph(bytes: &[u8], format: Format) -> Result<Graph> {
    match format {
        Format::EdgeList => parse_edge_list(bytes),
        Format::Json => parse_json(bytes),
        Format::Dot => Err(Error::Input("DOT is an output-only format".into())),
    }
}

/// Parses with [`detect_format`].
pub fn parse_auto(bytes: &[u8]) -> Result<Graph> {
    parse_graph(bytes, detect_format(bytes))
}

fn parse_pair(line: &str, lineno: usize) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace();
    let field = |tok: Option<&str>, name: &str| -> Result<usize> {
        let tok = tok.ok_or_else(|| Error::Input(format!("line {lineno}: missing field {name}")))?;
        tok.parse::<usize>()
            .map_err(|_| Error::Input(format!("line {lineno}: field {name}: bad integer {tok:?}")))
    };
    let a = field(it.next(), "1")?;
    let b = field(it.next(), "2")?;
    if let Some(extra) = it.next() {
        return Err(Error::Input(format!("line {lineno}: unexpected token {extra:?}")));
    }
    Ok((a, b))
}

fn parse_edge_list(bytes: &[u8]) -> Result<Graph> {
    let text = std::str::from_utf8(bytes).map_err(|_| Error::Input("input is not ASCII text".into()))?;
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hl, header) = lines
        .next()
        .ok_or_else(|| Error::Input("line 1: missing header \"n m\"".into()))?;
    let (n, m) = parse_pair(header, hl)?;
    let mut g = Graph::empty(n);
    let mut seen = 0usize;
    for (lineno, line) in lines {
        let (u, v) = parse_pair(line, lineno)?;
        g.add_edge(u, v)
            .map_err(|e| Error::Input(format!("line {lineno}: {}", strip_prefix(&e))))?;
        seen += 1;
    }
    if seen != m {
        return Err(Error::Input(format!("header declares {m} edges, found {seen}")));
    }
    Ok(g)
}

fn strip_prefix(e: &Error) -> String {
    match e {
        Error::Input(s) => s.clone(),
        other => other.to_string(),
    }
}

fn parse_json(bytes: &[u8]) -> Result<Graph> {
    let raw: JsonGraph = serde_json::from_slice(bytes).map_err(|e| Error::Input(format!("json: {e}")))?;
    let mut g = Graph::empty(raw.n);
    for (i, [u, v]) in raw.edges.into_iter().enumerate() {
        g.add_edge(u, v)
            .map_err(|e| Error::Input(format!("edges[{i}]: {}", strip_prefix(&e))))?;
    }
    Ok(g)
}

pub fn serialize_graph(g: &Graph, format: Format) -> Vec<u8> {
    let edges = g.sorted_edges();
    match format {
        Format::EdgeList => {
            let mut s = format!("{} {}\n", g.vertex_count(), edges.len());
            for (u, v) in edges {
                let _ = writeln!(s, "{u} {v}");
            }
            s.into_bytes()
        }
        Format::Json => {
            let j = JsonGraph {
                n: g.vertex_count(),
                edges: edges.into_iter().map(|(u, v)| [u, v]).collect(),
            };
            serde_json::to_vec(&j).expect("plain struct serializes")
        }
        Format::Dot => {
            let mut s = String::from("graph G {\n");
            for v in 0..g.vertex_count() {
                let _ = writeln!(s, "  {v};");
            }
            for (u, v) in edges {
                let _ = writeln!(s, "  {u} -- {v};");
            }
            s.push_str("}\n");
            s.into_bytes()
        }
    }
}
