//! Plain-text edge lists.
//!
//! One edge per line as two whitespace-separated non-negative integer labels.
//! Lines whose first non-blank character is `#` are comments; blank lines are
//! ignored. Isolated vertices cannot be expressed.

use std::fmt::Write as _;
use std::io::{self, Write};
use std::path::Path;

use super::Graph;
use crate::error::{Error, Result};

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut fields = line.split_whitespace();
        let (Some(a), Some(b), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(Error::Parse {
                line: line_no,
                message: format!("expected two vertex labels, got {line:?}"),
            });
        };
        let parse = |s: &str| {
            s.parse::<u64>().map_err(|_| Error::Parse {
                line: line_no,
                message: format!("{s:?} is not a non-negative integer label"),
            })
        };
        let (u, v) = (parse(a)?, parse(b)?);
        if u == v {
            return Err(Error::Parse {
                line: line_no,
                message: format!("self-loop ({u}, {v}) is not allowed in a simple graph"),
            });
        }
        edges.push((u, v));
    }
    Graph::from_edges(edges)
}

pub fn read_edge_list(path: impl AsRef<Path>) -> io::Result<Result<Graph>> {
    let text = std::fs::read_to_string(path)?;
    Ok(parse_edge_list(&text))
}

/// Canonical text form: name comments (if any), then edges in index order.
pub fn to_edge_list_string(g: &Graph) -> String {
    let mut out = String::new();
    if let Some(names) = g.names() {
        for (v, name) in names.iter().enumerate() {
            let _ = writeln!(out, "# {} {}", g.label(v), name);
        }
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{} {}", g.label(u), g.label(v));
    }
    out
}

pub fn write_edge_list<W: Write>(g: &Graph, mut w: W) -> io::Result<()> {
    w.write_all(to_edge_list_string(g).as_bytes())
}
