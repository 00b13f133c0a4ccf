//! Graph file parsing and rendering.
//!
//! Format: the first non-comment line is `n m`, followed by `m` lines `u v`
//! with 0-based endpoints. Lines starting with `#` and blank lines are ignored.

use std::fmt::Write as _;
use std::path::Path;

use kdinv::Graph;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },

    #[error("missing header: expected a line `n m` before end of input")]
    MissingHeader,

    #[error("line {line}: malformed header `{text}`: expected two non-negative integers `n m`")]
    MalformedHeader { line: usize, text: String },

    #[error("line {line}: bad edge line `{text}`: expected two vertex ids `u v`")]
    BadEdgeLine { line: usize, text: String },

    #[error(
        "line {line}: vertex {vertex} out of range for a graph on {n} vertices (ids are 0..{n})"
    )]
    VertexOutOfRange {
        line: usize,
        vertex: usize,
        n: usize,
    },

    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },

    #[error("edge count mismatch: header declares {declared} edges, found {found}")]
    EdgeCount { declared: usize, found: usize },
}

fn two_numbers(text: &str) -> Option<(usize, usize)> {
    let mut it = text.split_whitespace();
    let a = it.next()?.parse().ok()?;
    let b = it.next()?.parse().ok()?;
    it.next().is_none().then_some((a, b))
}

pub fn parse_graph_str(input: &str) -> Result<Graph, ParseError> {
    let mut lines = input
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hline, htext) = lines.next().ok_or(ParseError::MissingHeader)?;
    let (n, m) = two_numbers(htext).ok_or_else(|| ParseError::MalformedHeader {
        line: hline,
        text: htext.to_string(),
    })?;
    let mut edges = Vec::with_capacity(m);
    for (line, text) in lines {
        let (u, v) = two_numbers(text).ok_or_else(|| ParseError::BadEdgeLine {
            line,
            text: text.to_string(),
        })?;
        if let Some(vertex) = [u, v].into_iter().find(|&x| x >= n) {
            return Err(ParseError::VertexOutOfRange { line, vertex, n });
        }
        if u == v {
            return Err(ParseError::SelfLoop { line, vertex: u });
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(ParseError::EdgeCount {
            declared: m,
            found: edges.len(),
        });
    }
    Ok(Graph::new(n, &edges).expect("endpoints validated"))
}

pub fn parse_graph_file(path: &Path) -> Result<Graph, ParseError> {
    let text = std::fs::read_to_string(path).map_err(|source| ParseError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_graph_str(&text)
}

/// Inverse of [`parse_graph_str`]: header then edges with `u < v`, sorted.
pub fn render_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use kdinv::path_graph;

    #[test]
    fn parses_examples() {
        assert_eq!(
            parse_graph_str("3 2\n0 1\n1 2\n").unwrap(),
            path_graph(3).unwrap()
        );
        let g = parse_graph_str("# comment\n4 0\n").unwrap();
        assert_eq!((g.n(), g.edge_count()), (4, 0));
    }

    #[test]
    fn distinct_errors_with_lines() {
        let e = parse_graph_str("2 1\n0 2\n").unwrap_err();
        assert!(
            matches!(
                e,
                ParseError::VertexOutOfRange {
                    line: 2,
                    vertex: 2,
                    n: 2
                }
            ),
            "{e}"
        );
        let e = parse_graph_str("# c\nthree 2\n").unwrap_err();
        assert!(
            matches!(e, ParseError::MalformedHeader { line: 2, .. }),
            "{e}"
        );
        let e = parse_graph_str("3 2\n0 1\n1 x\n").unwrap_err();
        assert!(matches!(e, ParseError::BadEdgeLine { line: 3, .. }), "{e}");
        let e = parse_graph_str("3 1\n0 1 2\n").unwrap_err();
        assert!(matches!(e, ParseError::BadEdgeLine { line: 2, .. }), "{e}");
        let e = parse_graph_str("3 2\n0 1\n").unwrap_err();
        assert!(
            matches!(
                e,
                ParseError::EdgeCount {
                    declared: 2,
                    found: 1
                }
            ),
            "{e}"
        );
        assert!(matches!(
            parse_graph_str("# only\n"),
            Err(ParseError::MissingHeader)
        ));
        assert!(matches!(
            parse_graph_str("2 1\n1 1\n"),
            Err(ParseError::SelfLoop { line: 2, vertex: 1 })
        ));
        let messages: Vec<String> = [
            parse_graph_str("x\n").unwrap_err(),
            parse_graph_str("2 1\n0\n").unwrap_err(),
            parse_graph_str("2 1\n0 5\n").unwrap_err(),
        ]
        .iter()
        .map(|e| e.to_string())
        .collect();
        assert!(messages[0].contains("malformed header"));
        assert!(messages[1].contains("bad edge line"));
        assert!(messages[2].contains("out of range"));
    }

    #[test]
    fn round_trip() {
        for g in kdinv::catalogue::default_corpus() {
            assert_eq!(parse_graph_str(&render_graph(&g)).unwrap(), g);
        }
    }
}
