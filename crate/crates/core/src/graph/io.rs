//! Edge-list text format: a header line `n m`, then `m` lines `u v`.
//!
//! The writer emits edges in ascending lexicographic order. The reader
//! accepts any order and skips blank lines and `#` comments.

use std::fmt::Write as _;

use super::SimpleGraph;
use crate::error::{Error, Result};

/// Yields `(line_number, content)` for the non-empty, non-comment lines.
pub(crate) fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let content = match line.find('#') {
            Some(p) => &line[..p],
            None => line,
        }
        .trim();
        (!content.is_empty()).then_some((i + 1, content))
    })
}

pub(crate) fn parse_fields<const K: usize>(line: usize, content: &str) -> Result<[usize; K]> {
    let mut out = [0usize; K];
    let mut it = content.split_whitespace();
    for slot in out.iter_mut() {
        let tok = it
            .next()
            .ok_or_else(|| Error::parse(line, format!("expected {K} integers")))?;
        *slot = tok
            .parse()
            .map_err(|_| Error::parse(line, format!("not a non-negative integer: {tok:?}")))?;
    }
    if it.next().is_some() {
        return Err(Error::parse(line, format!("expected exactly {K} integers")));
    }
    Ok(out)
}

pub fn read_edge_list(text: &str) -> Result<SimpleGraph> {
    let mut lines = data_lines(text);
    let (hl, header) = lines.next().ok_or_else(|| Error::parse(1, "missing header"))?;
    let [n, m] = parse_fields::<2>(hl, header)?;
    let mut edges = Vec::with_capacity(m);
    for (ln, content) in lines.by_ref() {
        let [u, v] = parse_fields::<2>(ln, content)?;
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(Error::parse(
            hl,
            format!("header announces {m} edges, found {}", edges.len()),
        ));
    }
    SimpleGraph::from_edges(n, edges)
}

pub fn write_edge_list(g: &SimpleGraph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", g.n(), g.edge_count());
    for e in g.edges() {
        let _ = writeln!(out, "{} {}", e.u, e.v);
    }
    out
}
