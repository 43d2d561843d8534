//! Plain-text edge-list format.
//!
//! ```text
//! # comment lines start with '#', blank lines are ignored
//! n 5
//! 0 1
//! 1 2
//! ```
//!
//! The `n <count>` header precedes all edges; isolated vertices exist by
//! virtue of the count. Writing always emits edges as `u v` with `u < v`,
//! lexicographically sorted, so serialisation is byte-deterministic.

use crate::error::Error;
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ParseErrorKind {
    #[error("missing `n <count>` header")]
    MissingHeader,
    #[error("repeated `n <count>` header")]
    DuplicateHeader,
    #[error("malformed header `{0}`")]
    MalformedHeader(String),
    #[error("malformed edge line `{0}` (expected `<u> <v>`)")]
    MalformedLine(String),
    #[error(transparent)]
    Graph(Error),
}

/// Parse an edge-list document into a graph.
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut header: Option<usize> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut seen = std::collections::BTreeSet::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let first = tokens.next().expect("non-empty line has a token");
        if first == "n" {
            if header.is_some() {
                return Err(ParseError {
                    line: line_no,
                    kind: ParseErrorKind::DuplicateHeader,
                });
            }
            let count = tokens
                .next()
                .filter(|_| tokens.next().is_none())
                .and_then(|t| t.parse::<usize>().ok())
                .ok_or(ParseError {
                    line: line_no,
                    kind: ParseErrorKind::MalformedHeader(line.to_string()),
                })?;
            header = Some(count);
            continue;
        }
        let n = header.ok_or(ParseError {
            line: line_no,
            kind: ParseErrorKind::MissingHeader,
        })?;

        let parts: Option<(usize, usize)> = (|| {
            let u = first.parse().ok()?;
            let v = tokens.next()?.parse().ok()?;
            tokens.next().is_none().then_some((u, v))
        })();
        let (a, b) = parts.ok_or(ParseError {
            line: line_no,
            kind: ParseErrorKind::MalformedLine(line.to_string()),
        })?;

        // Validate here so errors carry the offending line number.
        let graph_err = |e: Error| ParseError {
            line: line_no,
            kind: ParseErrorKind::Graph(e),
        };
        if a >= n {
            return Err(graph_err(Error::IdOutOfRange { id: a, n }));
        }
        if b >= n {
            return Err(graph_err(Error::IdOutOfRange { id: b, n }));
        }
        if a == b {
            return Err(graph_err(Error::SelfLoop(a)));
        }
        let (u, v) = if a < b { (a, b) } else { (b, a) };
        if !seen.insert((u, v)) {
            return Err(graph_err(Error::DuplicateEdge { u, v }));
        }
        edges.push((u, v));
    }

    let n = header.ok_or(ParseError {
        line: 1,
        kind: ParseErrorKind::MissingHeader,
    })?;
    Graph::build(n, edges).map_err(|e| ParseError {
        line: 0,
        kind: ParseErrorKind::Graph(e),
    })
}

/// Serialise a graph; `parse_edge_list(write_edge_list(g)) == g`.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::with_capacity(16 + g.size() * 8);
    out.push_str(&format!("n {}\n", g.order()));
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_path() {
        let g = parse_edge_list("n 3\n0 1\n1 2\n").unwrap();
        assert_eq!(g, crate::graph::path(3));
    }

    #[test]
    fn comments_and_blanks_are_ignored() {
        let g = parse_edge_list("# empty graph\n\nn 5\n# no edges\n").unwrap();
        assert_eq!(g.order(), 5);
        assert!(g.is_empty_graph());
    }

    #[test]
    fn self_loop_reports_line_number() {
        let err = parse_edge_list("n 2\n0 0\n").unwrap_err();
        assert_eq!(err.line, 2);
        assert_eq!(err.kind, ParseErrorKind::Graph(Error::SelfLoop(0)));
    }

    #[test]
    fn duplicate_edge_reports_line_number() {
        let err = parse_edge_list("n 3\n0 1\n1 0\n").unwrap_err();
        assert_eq!(err.line, 3);
        assert_eq!(
            err.kind,
            ParseErrorKind::Graph(Error::DuplicateEdge { u: 0, v: 1 })
        );
    }

    #[test]
    fn edge_before_header_is_missing_header() {
        let err = parse_edge_list("0 1\nn 3\n").unwrap_err();
        assert_eq!(err.line, 1);
        assert_eq!(err.kind, ParseErrorKind::MissingHeader);
    }

    #[test]
    fn no_header_at_all() {
        let err = parse_edge_list("# only comments\n").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::MissingHeader);
    }

    #[test]
    fn duplicate_header_rejected() {
        let err = parse_edge_list("n 3\nn 4\n").unwrap_err();
        assert_eq!(err.line, 2);
        assert_eq!(err.kind, ParseErrorKind::DuplicateHeader);
    }

    #[test]
    fn malformed_lines_rejected() {
        assert!(matches!(
            parse_edge_list("n 3\n0\n").unwrap_err().kind,
            ParseErrorKind::MalformedLine(_)
        ));
        assert!(matches!(
            parse_edge_list("n 3\n0 1 2\n").unwrap_err().kind,
            ParseErrorKind::MalformedLine(_)
        ));
        assert!(matches!(
            parse_edge_list("n three\n").unwrap_err().kind,
            ParseErrorKind::MalformedHeader(_)
        ));
        assert!(matches!(
            parse_edge_list("n 3\n0 5\n").unwrap_err().kind,
            ParseErrorKind::Graph(Error::IdOutOfRange { id: 5, n: 3 })
        ));
    }

    #[test]
    fn write_is_canonical() {
        let g = Graph::build(4, [(3, 2), (1, 0)]).unwrap();
        assert_eq!(write_edge_list(&g), "n 4\n0 1\n2 3\n");
    }

    #[test]
    fn roundtrip() {
        let g = crate::fixtures::fig3();
        let text = write_edge_list(&g);
        assert_eq!(parse_edge_list(&text).unwrap(), g);
    }
}
