//! Text formats.
//!
//! Graph files: a header line `n m`, then `m` lines `u v w` with 0-based
//! vertex ids and a decimal weight. Seed files: lines `v l` with `l >= 1`;
//! unlisted vertices are unlabeled. Blank lines and lines starting with `#`
//! are ignored in both.

use std::fmt::Write as _;

use super::{Graph, GraphBuilder, SeedMap};
use crate::error::{Error, Result};

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn fields<const N: usize>(line: usize, text: &str) -> Result<[&str; N]> {
    let parts: Vec<&str> = text.split_whitespace().collect();
    parts
        .try_into()
        .map_err(|p: Vec<&str>| parse_err(line, format!("expected {N} fields, found {}", p.len())))
}

fn parse_num<T: std::str::FromStr>(line: usize, what: &str, s: &str) -> Result<T> {
    s.parse()
        .map_err(|_| parse_err(line, format!("invalid {what} `{s}`")))
}

/// Parses and validates a graph file.
pub fn load_graph(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (header_line, header) = lines.next().ok_or_else(|| parse_err(1, "missing `n m` header"))?;
    let [n, m] = fields::<2>(header_line, header)?;
    let n: usize = parse_num(header_line, "vertex count", n)?;
    let m: usize = parse_num(header_line, "edge count", m)?;

    let mut builder = GraphBuilder::new(n);
    let mut read = 0;
    for (line, text) in lines {
        if read == m {
            return Err(parse_err(line, format!("more than the declared {m} edges")));
        }
        let [u, v, w] = fields::<3>(line, text)?;
        let u: usize = parse_num(line, "vertex id", u)?;
        let v: usize = parse_num(line, "vertex id", v)?;
        let w: f64 = parse_num(line, "weight", w)?;
        builder.add_edge(u, v, w).map_err(|e| parse_err(line, e))?;
        read += 1;
    }
    if read != m {
        return Err(parse_err(
            header_line,
            format!("header declares {m} edges, found {read}"),
        ));
    }
    builder.build()
}

pub fn write_graph(graph: &Graph) -> String {
    let mut out = format!("{} {}\n", graph.vertex_count(), graph.edge_count());
    for e in graph.edges() {
        writeln!(out, "{} {} {}", e.u, e.v, e.weight).unwrap();
    }
    out
}

/// Parses a seed file for a graph with `n` vertices.
pub fn parse_seeds(text: &str, n: usize) -> Result<SeedMap> {
    let mut labels = vec![0u32; n];
    for (line, text) in content_lines(text) {
        let [v, l] = fields::<2>(line, text)?;
        let v: usize = parse_num(line, "vertex id", v)?;
        let l: u32 = parse_num(line, "label", l)?;
        if v >= n {
            return Err(parse_err(
                line,
                format!("vertex {v} out of range for {n} vertices"),
            ));
        }
        if l == 0 {
            return Err(parse_err(line, "seed labels start at 1"));
        }
        if labels[v] != 0 && labels[v] != l {
            return Err(parse_err(
                line,
                format!("vertex {v} already seeded with label {}", labels[v]),
            ));
        }
        labels[v] = l;
    }
    SeedMap::new(labels)
}
