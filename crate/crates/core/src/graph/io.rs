//! Edge-list text format.
//!
//! ```text
//! n m
//! u v      (m lines, 0 <= u < v < n, sorted lexicographically on output)
//! ```

use std::fmt::Write as _;

use super::Graph;
use crate::error::{Error, Result};

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    let edges = g.edges();
    writeln!(out, "{} {}", g.n(), edges.len()).unwrap();
    for (u, v) in edges {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn read_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines.next().ok_or_else(|| Error::Parse("empty input".into()))?;
    let [n, m] = parse_pair(header)?;
    let mut edges = Vec::with_capacity(m);
    for line in lines.by_ref().take(m) {
        let [u, v] = parse_pair(line)?;
        if u >= v || v >= n {
            return Err(Error::Parse(format!("edge '{line}' violates 0 <= u < v < {n}")));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(Error::Parse(format!("expected {m} edges, found {}", edges.len())));
    }
    if lines.next().is_some() {
        return Err(Error::Parse("trailing lines after edge list".into()));
    }
    let g = Graph::from_edges(n, edges)?;
    if g.m() != m {
        return Err(Error::Parse("duplicate edges".into()));
    }
    Ok(g)
}

/// Sidecar listing `vertex-index<TAB>label`, one line per labelled vertex.
pub fn write_labels(g: &Graph) -> Option<String> {
    let labels = g.labels()?;
    let mut out = String::new();
    for (i, l) in labels.iter().enumerate() {
        writeln!(out, "{i}\t{l}").unwrap();
    }
    Some(out)
}

fn parse_pair(line: &str) -> Result<[usize; 2]> {
    let fields: Vec<&str> = line.split_ascii_whitespace().collect();
    if fields.len() != 2 {
        return Err(Error::Parse(format!("expected two integers, got '{line}'")));
    }
    let parse = |s: &str| s.parse::<usize>().map_err(|e| Error::Parse(format!("'{s}': {e}")));
    Ok([parse(fields[0])?, parse(fields[1])?])
}
