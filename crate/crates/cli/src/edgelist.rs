//! Edge-list text format.
//!
//! ```text
//! # comment
//! 4
//! 0 1
//! 1 2
//! ```
//!
//! The first non-comment line is the vertex count; every further nonempty
//! line is one edge `u v` with 0-based indices.

use std::fmt::Write as _;

use closed_chroma_core::graphs::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EdgeListError {
    #[error("missing vertex count line")]
    MissingHeader,
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("line {line}: {source}")]
    Graph { line: usize, source: GraphError },
}

/// A parsed graph plus the number of repeated edges that were collapsed.
#[derive(Debug, Clone)]
pub struct ParsedGraph {
    pub graph: Graph,
    pub duplicate_edges: usize,
}

pub fn read_edge_list(text: &str) -> Result<ParsedGraph, EdgeListError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (header_line, header) = lines.next().ok_or(EdgeListError::MissingHeader)?;
    let vertex_count: usize = header.parse().map_err(|_| EdgeListError::Malformed {
        line: header_line,
        message: format!("expected a vertex count, found `{header}`"),
    })?;

    let mut edges = Vec::new();
    for (line, content) in lines {
        let fields: Vec<&str> = content.split_whitespace().collect();
        let [u, v] = fields[..] else {
            return Err(EdgeListError::Malformed { line, message: format!("expected `u v`, found `{content}`") });
        };
        let index = |s: &str| {
            s.parse::<usize>().map_err(|_| EdgeListError::Malformed { line, message: format!("invalid vertex index `{s}`") })
        };
        let (u, v) = (index(u)?, index(v)?);
        // Validate each edge on its own so errors carry the line number.
        Graph::from_edges(vertex_count, [(u, v)]).map_err(|source| EdgeListError::Graph { line, source })?;
        edges.push((u, v));
    }
    let (graph, duplicate_edges) = Graph::from_edges(vertex_count, edges).map_err(|source| EdgeListError::Graph { line: 0, source })?;
    if duplicate_edges > 0 {
        log::warn!("collapsed {duplicate_edges} duplicate edge(s)");
    }
    Ok(ParsedGraph { graph, duplicate_edges })
}

/// Vertex count, then each edge `u v` with `u < v` in lexicographic order.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.vertex_count());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").expect("writing to a String");
    }
    out
}
