//! DIMACS-like text format.
//!
//! ```text
//! c optional comment lines
//! p edge <n> <m>
//! e <u> <v>        (m lines, 1 <= u, v <= n, u != v)
//! ```
//!
//! Vertices are 1-based in the file and 0-based in memory. Writing normalizes
//! every edge to `u < v` and sorts the edge lines lexicographically.

use std::collections::HashSet;
use std::fmt::Write as _;

use crate::error::{ParseError, ParseErrorKind};
use crate::graph::Graph;

pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut edges = Vec::new();
    let mut seen = HashSet::new();
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('c') {
            continue;
        }
        let err = |kind| ParseError { line, kind };
        let fields: Vec<&str> = trimmed.split_whitespace().collect();
        match fields[0] {
            "p" => {
                if header.is_some() {
                    return Err(err(ParseErrorKind::DuplicateHeader));
                }
                if fields.len() != 4 || fields[1] != "edge" {
                    return Err(err(ParseErrorKind::Malformed(trimmed.to_string())));
                }
                let n = fields[2].parse().map_err(|_| err(ParseErrorKind::Malformed(trimmed.to_string())))?;
                let m = fields[3].parse().map_err(|_| err(ParseErrorKind::Malformed(trimmed.to_string())))?;
                header = Some((n, m, line));
            }
            "e" => {
                let (n, _, _) = header.ok_or_else(|| err(ParseErrorKind::MissingHeader))?;
                if fields.len() != 3 {
                    return Err(err(ParseErrorKind::Malformed(trimmed.to_string())));
                }
                let mut ends = [0usize; 2];
                for (slot, field) in ends.iter_mut().zip(&fields[1..]) {
                    *slot = field.parse().map_err(|_| err(ParseErrorKind::Malformed(trimmed.to_string())))?;
                    if *slot == 0 || *slot > n {
                        return Err(err(ParseErrorKind::VertexOutOfRange(*slot, n)));
                    }
                }
                let (u, v) = (ends[0].min(ends[1]), ends[0].max(ends[1]));
                if u == v {
                    return Err(err(ParseErrorKind::SelfLoop(u)));
                }
                if !seen.insert((u, v)) {
                    return Err(err(ParseErrorKind::DuplicateEdge(u, v)));
                }
                edges.push((u - 1, v - 1));
            }
            _ => return Err(err(ParseErrorKind::Malformed(trimmed.to_string()))),
        }
    }

    let (n, m, header_line) = header.ok_or(ParseError { line: last_line.max(1), kind: ParseErrorKind::MissingHeader })?;
    if edges.len() != m {
        let line = if edges.len() > m { header_line } else { last_line };
        return Err(ParseError { line, kind: ParseErrorKind::EdgeCountMismatch { declared: m, found: edges.len() } });
    }
    Ok(Graph::from_edges(n, edges).expect("edges were validated while parsing"))
}

/// Serializes `g` using local indices (`v` is written as `v + 1`).
pub fn to_dimacs(g: &Graph) -> String {
    let mut out = String::with_capacity(16 + 12 * g.m());
    let _ = writeln!(out, "p edge {} {}", g.n(), g.m());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    out
}
