//! Plain-text edge lists.
//!
//! ```text
//! n m
//! u v      (m lines, 0-indexed, u < v)
//! ```

use std::io::{BufRead, Write};

use super::Graph;
use crate::error::{Error, Result};

pub fn write_edge_list<W: Write>(g: &Graph, mut out: W) -> Result<()> {
    writeln!(out, "{} {}", g.n(), g.m())?;
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}")?;
    }
    Ok(())
}

pub fn read_edge_list<R: BufRead>(input: R) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for (idx, line) in input.lines().enumerate() {
        let line_no = idx + 1;
        let line = line?;
        let text = line.trim();
        if text.is_empty() {
            continue;
        }
        let fields = parse_pair(text, line_no)?;
        match header {
            None => header = Some(fields),
            Some((n, m)) => {
                let (u, v) = fields;
                if edges.len() == m {
                    return Err(parse_err(line_no, format!("more than the declared {m} edges")));
                }
                if v >= n {
                    return Err(parse_err(line_no, format!("vertex {v} out of range for n = {n}")));
                }
                if u >= v {
                    return Err(parse_err(line_no, format!("expected u < v, got {u} {v}")));
                }
                if !seen.insert((u, v)) {
                    return Err(parse_err(line_no, format!("duplicate edge {u} {v}")));
                }
                edges.push((u, v));
            }
        }
    }
    let (n, m) = header.ok_or_else(|| parse_err(1, "missing header line \"n m\"".into()))?;
    if edges.len() != m {
        return Err(parse_err(
            m + 1,
            format!("header declares {m} edges, found {}", edges.len()),
        ));
    }
    Graph::from_edge_list(n, &edges)
}

fn parse_pair(text: &str, line: usize) -> Result<(usize, usize)> {
    let mut it = text.split_whitespace();
    let mut next = || -> Result<usize> {
        let tok = it
            .next()
            .ok_or_else(|| parse_err(line, "expected two integers".into()))?;
        tok.parse()
            .map_err(|_| parse_err(line, format!("not a non-negative integer: {tok:?}")))
    };
    let a = next()?;
    let b = next()?;
    if it.next().is_some() {
        return Err(parse_err(line, "trailing fields".into()));
    }
    Ok((a, b))
}

fn parse_err(line: usize, msg: String) -> Error {
    Error::Parse { line, msg }
}
