use std::fmt::Write;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet, MAX_VERTICES};

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

/// Content lines with comments stripped, paired with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap().trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn two_numbers(line_no: usize, line: &str) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace();
    let mut next = || -> Result<usize> {
        let tok = it
            .next()
            .ok_or_else(|| parse_err(line_no, "expected two integers"))?;
        tok.parse()
            .map_err(|_| parse_err(line_no, format!("invalid integer {tok:?}")))
    };
    let pair = (next()?, next()?);
    if it.next().is_some() {
        return Err(parse_err(line_no, "trailing tokens"));
    }
    Ok(pair)
}

/// Parses the `n m` header followed by `m` lines `u v` (0-based).
///
/// `#` starts a comment anywhere on a line.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (header_line, header) = lines.next().ok_or_else(|| parse_err(1, "missing header"))?;
    let (n, m) = two_numbers(header_line, header)?;
    if n > MAX_VERTICES {
        return Err(parse_err(
            header_line,
            format!("{n} vertices exceeds the limit of {MAX_VERTICES}"),
        ));
    }
    let mut adj = vec![VertexSet::new(); n];
    let mut edges = Vec::with_capacity(m);
    let mut last_line = header_line;
    for (line_no, line) in lines {
        last_line = line_no;
        let (u, v) = two_numbers(line_no, line)?;
        if edges.len() == m {
            return Err(parse_err(line_no, format!("more than {m} edges")));
        }
        if u >= n || v >= n {
            return Err(parse_err(
                line_no,
                format!("vertex {} out of range", u.max(v)),
            ));
        }
        if u == v {
            return Err(parse_err(line_no, "self-loop"));
        }
        if adj[u].contains(v) {
            return Err(parse_err(line_no, format!("duplicate edge ({u}, {v})")));
        }
        adj[u].insert(v);
        adj[v].insert(u);
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(parse_err(
            last_line,
            format!("expected {m} edges, found {}", edges.len()),
        ));
    }
    Graph::from_edges(n, edges)
}

/// Writes the header and edges in ascending canonical order, LF endings.
pub fn serialize_graph(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "{} {}", g.n(), g.m()).unwrap();
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

/// Whitespace-separated non-negative integers, one per vertex.
pub fn parse_charges(text: &str, n: usize) -> Result<Vec<u32>> {
    let mut out = Vec::with_capacity(n);
    for (line_no, line) in content_lines(text) {
        for tok in line.split_whitespace() {
            let c = tok
                .parse()
                .map_err(|_| parse_err(line_no, format!("invalid charge {tok:?}")))?;
            out.push(c);
        }
    }
    if out.len() != n {
        return Err(parse_err(
            text.lines().count().max(1),
            format!("expected {n} charges, found {}", out.len()),
        ));
    }
    Ok(out)
}
