//! Graph and coloring file formats.
//!
//! DIMACS: `c` comment lines, one `p edge <n> <m>` header, `e <u> <v>`
//! edge lines with 1-based vertices. Edge list: one `u v` pair per line,
//! 0-based, `#` comments. Coloring files: one `vertex color` pair per
//! line (0-based vertices, 1-based colors). Duplicate edges and
//! self-loops are rejected everywhere.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    Dimacs,
    EdgeList,
}

impl GraphFormat {
    /// Picks the format from a file extension: `.col` is DIMACS,
    /// everything else an edge list.
    pub fn from_path(path: &Path) -> GraphFormat {
        match path.extension().and_then(|e| e.to_str()) {
            Some("col") | Some("dimacs") => GraphFormat::Dimacs,
            _ => GraphFormat::EdgeList,
        }
    }
}

/// A parsed graph plus the original vertex labels (dense indices map to
/// the labels the file used).
#[derive(Debug, Clone)]
pub struct LoadedGraph {
    pub graph: Graph,
    pub labels: Vec<u64>,
}

pub fn parse_graph_file(path: &Path, format: GraphFormat) -> Result<LoadedGraph> {
    let text = fs::read_to_string(path)?;
    parse_graph_str(&text, format, &path.display().to_string())
}

pub fn parse_graph_str(text: &str, format: GraphFormat, origin: &str) -> Result<LoadedGraph> {
    match format {
        GraphFormat::Dimacs => parse_dimacs(text, origin),
        GraphFormat::EdgeList => parse_edgelist(text, origin),
    }
}

fn parse_error(origin: &str, line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        path: origin.to_string(),
        line,
        msg: msg.into(),
    }
}

fn parse_dimacs(text: &str, origin: &str) -> Result<LoadedGraph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<(VertexId, VertexId)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let fields: Vec<&str> = line.split_ascii_whitespace().collect();
        match fields[0] {
            "p" => {
                if header.is_some() {
                    return Err(parse_error(origin, lineno, "duplicate problem line"));
                }
                if fields.len() != 4 || fields[1] != "edge" {
                    return Err(parse_error(
                        origin,
                        lineno,
                        "expected header `p edge <n> <m>`",
                    ));
                }
                let n = fields[2]
                    .parse::<usize>()
                    .map_err(|_| parse_error(origin, lineno, "bad vertex count"))?;
                let m = fields[3]
                    .parse::<usize>()
                    .map_err(|_| parse_error(origin, lineno, "bad edge count"))?;
                header = Some((n, m));
            }
            "e" => {
                let Some((n, _)) = header else {
                    return Err(parse_error(origin, lineno, "edge before `p edge` header"));
                };
                if fields.len() != 3 {
                    return Err(parse_error(origin, lineno, "expected `e <u> <v>`"));
                }
                let u = fields[1]
                    .parse::<usize>()
                    .map_err(|_| parse_error(origin, lineno, "bad endpoint"))?;
                let v = fields[2]
                    .parse::<usize>()
                    .map_err(|_| parse_error(origin, lineno, "bad endpoint"))?;
                if u == 0 || v == 0 || u > n || v > n {
                    return Err(parse_error(
                        origin,
                        lineno,
                        format!("vertex out of range 1..={n}"),
                    ));
                }
                if u == v {
                    return Err(parse_error(origin, lineno, "self-loop"));
                }
                edges.push((u - 1, v - 1));
            }
            other => {
                return Err(parse_error(
                    origin,
                    lineno,
                    format!("unknown record type {other:?}"),
                ));
            }
        }
    }
    let Some((n, m)) = header else {
        return Err(parse_error(origin, 1, "missing `p edge` header"));
    };
    if edges.len() != m {
        return Err(parse_error(
            origin,
            text.lines().count(),
            format!("header promises {m} edges, found {}", edges.len()),
        ));
    }
    let graph = build_graph(n, &edges, origin)?;
    Ok(LoadedGraph {
        graph,
        labels: (1..=n as u64).collect(),
    })
}

fn parse_edgelist(text: &str, origin: &str) -> Result<LoadedGraph> {
    let mut raw_edges: Vec<(u64, u64, usize)> = Vec::new();
    let mut seen_labels: Vec<u64> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_ascii_whitespace().collect();
        if fields.len() != 2 {
            return Err(parse_error(origin, lineno, "expected `u v`"));
        }
        let u = fields[0]
            .parse::<u64>()
            .map_err(|_| parse_error(origin, lineno, "bad endpoint"))?;
        let v = fields[1]
            .parse::<u64>()
            .map_err(|_| parse_error(origin, lineno, "bad endpoint"))?;
        if u == v {
            return Err(parse_error(origin, lineno, "self-loop"));
        }
        raw_edges.push((u, v, lineno));
        seen_labels.push(u);
        seen_labels.push(v);
    }
    seen_labels.sort_unstable();
    seen_labels.dedup();
    // Dense 0-based inputs keep their indexing; anything else is remapped
    // onto [0, n) with the label table retained.
    let labels: Vec<u64> = seen_labels;
    let index: BTreeMap<u64, VertexId> = labels.iter().enumerate().map(|(i, &l)| (l, i)).collect();
    let mut edges = Vec::with_capacity(raw_edges.len());
    for (u, v, lineno) in raw_edges {
        let iu = index[&u];
        let iv = index[&v];
        let key = (iu.min(iv), iu.max(iv));
        if edges.contains(&key) {
            return Err(parse_error(
                origin,
                lineno,
                format!("duplicate edge {u} {v}"),
            ));
        }
        edges.push(key);
    }
    let graph = build_graph(labels.len(), &edges, origin)?;
    Ok(LoadedGraph { graph, labels })
}

fn build_graph(n: usize, edges: &[(VertexId, VertexId)], origin: &str) -> Result<Graph> {
    Graph::from_edges(n, edges).map_err(|e| match e {
        Error::DuplicateEdge(u, v) => parse_error(origin, 0, format!("duplicate edge {u}-{v}")),
        other => other,
    })
}

/// Serializes a graph; `parse(write(g))` reproduces `g` in either format.
pub fn write_graph(g: &Graph, format: GraphFormat) -> String {
    let mut out = String::new();
    match format {
        GraphFormat::Dimacs => {
            let _ = writeln!(out, "p edge {} {}", g.n(), g.m());
            for (u, v) in g.edges() {
                let _ = writeln!(out, "e {} {}", u + 1, v + 1);
            }
        }
        GraphFormat::EdgeList => {
            for (u, v) in g.edges() {
                let _ = writeln!(out, "{u} {v}");
            }
        }
    }
    out
}

/// Parses a coloring file of `vertex color` pairs against a known graph
/// order; the palette is the largest color named unless a larger one is
/// forced with `palette`.
pub fn parse_coloring_str(
    text: &str,
    n: usize,
    palette: Option<usize>,
    origin: &str,
) -> Result<Coloring> {
    let mut pairs: Vec<(VertexId, usize)> = Vec::new();
    let mut max_color = 0;
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_ascii_whitespace().collect();
        if fields.len() != 2 {
            return Err(parse_error(origin, lineno, "expected `vertex color`"));
        }
        let v = fields[0]
            .parse::<usize>()
            .map_err(|_| parse_error(origin, lineno, "bad vertex"))?;
        let c = fields[1]
            .parse::<usize>()
            .map_err(|_| parse_error(origin, lineno, "bad color"))?;
        if v >= n {
            return Err(parse_error(
                origin,
                lineno,
                format!("vertex {v} out of range"),
            ));
        }
        if c == 0 {
            return Err(parse_error(origin, lineno, "colors are 1-based"));
        }
        if pairs.iter().any(|&(w, _)| w == v) {
            return Err(parse_error(
                origin,
                lineno,
                format!("vertex {v} colored twice"),
            ));
        }
        max_color = max_color.max(c);
        pairs.push((v, c));
    }
    let palette = palette.unwrap_or(max_color).max(max_color).max(1);
    let mut col = Coloring::empty(n, palette);
    for (v, c) in pairs {
        col.set(v, c)?;
    }
    Ok(col)
}

pub fn parse_coloring_file(path: &Path, n: usize, palette: Option<usize>) -> Result<Coloring> {
    let text = fs::read_to_string(path)?;
    parse_coloring_str(&text, n, palette, &path.display().to_string())
}

/// Writes the assigned vertices as `vertex color` lines, ascending.
pub fn write_coloring(col: &Coloring) -> String {
    let mut out = String::new();
    for v in 0..col.n() {
        if let Some(c) = col.get(v) {
            let _ = writeln!(out, "{v} {c}");
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    #[test]
    fn dimacs_round_trip() {
        let text = "c a triangle\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n";
        let loaded = parse_graph_str(text, GraphFormat::Dimacs, "test").unwrap();
        assert_eq!(loaded.graph, generators::complete(3));
        let written = write_graph(&loaded.graph, GraphFormat::Dimacs);
        let again = parse_graph_str(&written, GraphFormat::Dimacs, "test").unwrap();
        assert_eq!(again.graph, loaded.graph);
    }

    #[test]
    fn edgelist_round_trip() {
        let text = "# path\n0 1\n1 2\n";
        let loaded = parse_graph_str(text, GraphFormat::EdgeList, "test").unwrap();
        assert_eq!(loaded.graph, generators::path(3));
        let written = write_graph(&loaded.graph, GraphFormat::EdgeList);
        let again = parse_graph_str(&written, GraphFormat::EdgeList, "test").unwrap();
        assert_eq!(again.graph, loaded.graph);
    }

    #[test]
    fn edgelist_remaps_sparse_labels() {
        let text = "10 30\n30 500\n";
        let loaded = parse_graph_str(text, GraphFormat::EdgeList, "test").unwrap();
        assert_eq!(loaded.graph.n(), 3);
        assert_eq!(loaded.labels, vec![10, 30, 500]);
        assert!(loaded.graph.has_edge(0, 1));
        assert!(loaded.graph.has_edge(1, 2));
    }

    #[test]
    fn rejects_malformed_inputs() {
        let self_loop = "p edge 2 1\ne 1 1\n";
        let err = parse_graph_str(self_loop, GraphFormat::Dimacs, "t").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");

        let out_of_range = "p edge 2 1\ne 1 5\n";
        assert!(parse_graph_str(out_of_range, GraphFormat::Dimacs, "t").is_err());

        let dup = "p edge 3 2\ne 1 2\ne 2 1\n";
        assert!(parse_graph_str(dup, GraphFormat::Dimacs, "t").is_err());

        let bad_header = "p vertex 3 2\n";
        assert!(parse_graph_str(bad_header, GraphFormat::Dimacs, "t").is_err());

        let missing_header = "e 1 2\n";
        assert!(parse_graph_str(missing_header, GraphFormat::Dimacs, "t").is_err());
    }

    #[test]
    fn coloring_files_round_trip() {
        let col = crate::coloring::Coloring::total(&[1, 2, 1], 2).unwrap();
        let text = write_coloring(&col);
        assert_eq!(text, "0 1\n1 2\n2 1\n");
        let parsed = parse_coloring_str(&text, 3, None, "t").unwrap();
        assert_eq!(parsed, col);

        assert!(parse_coloring_str("0 0\n", 2, None, "t").is_err());
        assert!(parse_coloring_str("5 1\n", 2, None, "t").is_err());
        assert!(parse_coloring_str("0 1\n0 2\n", 2, None, "t").is_err());
    }
}
