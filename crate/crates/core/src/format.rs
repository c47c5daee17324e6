//! Line-oriented text formats for digraphs and partitioned graphs.
//!
//! Digraph file: the first line is the vertex count `k`; every further
//! non-empty line is `i j`, an arc from `i` to `j` with 1-based ids (`i i` is a
//! loop). Duplicate arcs are rejected.
//!
//! Partitioned graph file: a graph6 line, a line with `k`, then one line of
//! space-separated 1-based class ids in graph6 vertex order.

use std::fmt::Write as _;

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::graph6::{parse_graph6, write_graph6};
use crate::partitioned::PartitionedGraph;

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

fn parse_usize(line: usize, tok: &str) -> Result<usize> {
    tok.parse::<usize>()
        .map_err(|_| parse_err(line, format!("expected a nonnegative integer, found {tok:?}")))
}

pub fn parse_digraph(text: &str) -> Result<Digraph> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim()));
    let (first_no, first) = lines
        .find(|(_, l)| !l.is_empty())
        .ok_or_else(|| parse_err(1, "missing vertex count"))?;
    let k = parse_usize(first_no, first)?;
    let mut d = Digraph::new(k);
    for (no, line) in lines {
        if line.is_empty() {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(parse_err(no, format!("expected `i j`, found {line:?}")));
        }
        let (i, j) = (parse_usize(no, toks[0])?, parse_usize(no, toks[1])?);
        if i == 0 || j == 0 || i > k || j > k {
            return Err(parse_err(no, format!("arc ({i},{j}) outside 1..={k}")));
        }
        if d.has_arc(i - 1, j - 1) {
            return Err(parse_err(no, format!("duplicate arc ({i},{j})")));
        }
        d.add_arc(i - 1, j - 1);
    }
    Ok(d)
}

pub fn write_digraph(d: &Digraph) -> String {
    let mut out = format!("{}\n", d.vertex_count());
    for (u, v) in d.arcs() {
        writeln!(out, "{} {}", u + 1, v + 1).unwrap();
    }
    out
}

pub fn parse_partitioned(text: &str) -> Result<PartitionedGraph> {
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty())
        .collect();
    let (g_no, g_line) = *lines.first().ok_or_else(|| parse_err(1, "missing graph6 line"))?;
    let graph = parse_graph6(g_line).map_err(|e| parse_err(g_no, e.to_string()))?;
    let n = graph.vertex_count();
    let (k_no, k_line) = *lines.get(1).ok_or_else(|| parse_err(g_no + 1, "missing class count"))?;
    let k = parse_usize(k_no, k_line)?;
    if k == 0 {
        return Err(parse_err(k_no, "class count must be positive"));
    }
    let classes: Vec<usize> = match lines.get(2) {
        Some(&(c_no, c_line)) => c_line
            .split_whitespace()
            .map(|t| parse_usize(c_no, t))
            .collect::<Result<_>>()?,
        // With no vertices the class line is blank and gets filtered out.
        None if n == 0 => Vec::new(),
        None => return Err(parse_err(k_no + 1, "missing class line")),
    };
    if lines.len() > 3 {
        return Err(parse_err(lines[3].0, "unexpected trailing content"));
    }
    if classes.len() != n {
        return Err(parse_err(
            lines.get(2).map_or(k_no + 1, |l| l.0),
            format!("{} class ids for {n} vertices", classes.len()),
        ));
    }
    if let Some(&bad) = classes.iter().find(|&&c| c == 0 || c > k) {
        return Err(parse_err(lines[2].0, format!("class {bad} outside 1..={k}")));
    }
    PartitionedGraph::new(graph, k, classes)
}

pub fn write_partitioned(t: &PartitionedGraph) -> String {
    let classes: Vec<String> = t.classes().iter().map(|c| c.to_string()).collect();
    format!("{}\n{}\n{}\n", write_graph6(t.graph()), t.class_count(), classes.join(" "))
}
