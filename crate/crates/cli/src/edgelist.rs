//! The canonical edge-list interchange format.
//!
//! First line `n m`, then exactly `m` lines `u v` with 0-based endpoints,
//! `u < v`, lexicographically ascending, newline-terminated. Writing a graph
//! and re-reading it is the identity; the writer's output is byte-stable.

use std::fmt::Write as _;

use molirr_core::Graph;

pub fn render(g: &Graph) -> String {
    let mut out = String::with_capacity(16 + 12 * g.m());
    let _ = writeln!(out, "{} {}", g.n(), g.m());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn parse(text: &str) -> Result<Graph, String> {
    let mut lines = text.lines();
    let header = lines.next().ok_or("empty input")?;
    let (n, m) = split_pair(header)?;
    let n = n as usize;

    let mut edges: Vec<(u32, u32)> = Vec::with_capacity(m as usize);
    for (idx, line) in lines.by_ref().enumerate() {
        if idx as u64 >= m as u64 {
            if line.trim().is_empty() {
                continue;
            }
            return Err(format!("more than {m} edge lines"));
        }
        let (u, v) = split_pair(line)?;
        if u >= v {
            return Err(format!("edge {u} {v} violates u < v"));
        }
        if let Some(&(pu, pv)) = edges.last() {
            if (u, v) <= (pu, pv) {
                return Err(format!("edge {u} {v} out of ascending order"));
            }
        }
        edges.push((u, v));
    }
    if edges.len() != m as usize {
        return Err(format!("expected {m} edges, found {}", edges.len()));
    }
    Graph::from_edges(n, &edges).map_err(|e| e.to_string())
}

fn split_pair(line: &str) -> Result<(u32, u32), String> {
    let mut it = line.split_whitespace();
    let a = it.next().ok_or_else(|| format!("malformed line {line:?}"))?;
    let b = it.next().ok_or_else(|| format!("malformed line {line:?}"))?;
    if it.next().is_some() {
        return Err(format!("malformed line {line:?}"));
    }
    let a = a.parse::<u32>().map_err(|_| format!("not a number: {a:?}"))?;
    let b = b.parse::<u32>().map_err(|_| format!("not a number: {b:?}"))?;
    Ok((a, b))
}
