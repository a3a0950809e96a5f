//! Plain-text hypergraph files.
//!
//! ```text
//! # comments run to end of line
//! 4 13 13        <- uniformity, vertex count, edge count
//! 1 2 3 4        <- one edge per line, 1-based vertex ids
//! ...
//! ```

use std::fmt::Write as _;

use thiserror::Error;

use super::{normalize_edge, Hypergraph, HypergraphError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    #[error("missing header line `r n m`")]
    MissingHeader,
    #[error("malformed header: {0}")]
    Header(String),
    #[error("invalid vertex id `{0}`")]
    BadToken(String),
    #[error("vertex id {id} outside 1..={n}")]
    OutOfRange { id: usize, n: usize },
    #[error("expected {expected} vertex ids, found {found}")]
    Arity { expected: usize, found: usize },
    #[error("repeated vertex in edge")]
    RepeatedVertex,
    #[error("edge duplicates the one on line {0}")]
    DuplicateEdge(usize),
    #[error("expected {expected} edges, found {found}")]
    EdgeCount { expected: usize, found: usize },
    #[error(transparent)]
    Shape(HypergraphError),
}

fn content(line: &str) -> &str {
    line.split('#').next().unwrap_or("").trim()
}

pub fn parse(text: &str) -> Result<Hypergraph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, content(l)))
        .filter(|(_, l)| !l.is_empty());

    let (hline, header) = lines.next().ok_or(ParseError {
        line: text.lines().count().max(1),
        kind: ParseErrorKind::MissingHeader,
    })?;
    let herr = |msg: &str| ParseError {
        line: hline,
        kind: ParseErrorKind::Header(msg.to_string()),
    };
    let fields: Vec<usize> = header
        .split_whitespace()
        .map(|t| t.parse::<usize>().map_err(|_| herr(&format!("`{t}` is not a number"))))
        .collect::<Result<_, _>>()?;
    let [r, n, m] = fields[..] else {
        return Err(herr("expected three numbers `r n m`"));
    };
    Hypergraph::empty(r, n).map_err(|e| ParseError {
        line: hline,
        kind: ParseErrorKind::Shape(e),
    })?;

    let mut rows: Vec<(Vec<usize>, usize)> = Vec::with_capacity(m);
    let mut last_line = hline;
    for (line, row) in lines {
        last_line = line;
        let err = |kind| ParseError { line, kind };
        let mut ids = Vec::with_capacity(r);
        for tok in row.split_whitespace() {
            let id: usize = tok
                .parse()
                .map_err(|_| err(ParseErrorKind::BadToken(tok.to_string())))?;
            if id == 0 || id > n {
                return Err(err(ParseErrorKind::OutOfRange { id, n }));
            }
            ids.push(id - 1);
        }
        let sorted = normalize_edge(r, n, &ids).map_err(|e| {
            err(match e {
                HypergraphError::Arity { expected, found, .. } => {
                    ParseErrorKind::Arity { expected, found }
                }
                HypergraphError::RepeatedVertex(_) => ParseErrorKind::RepeatedVertex,
                other => ParseErrorKind::Shape(other),
            })
        })?;
        if let Some((_, first)) = rows.iter().find(|(e, _)| *e == sorted) {
            return Err(err(ParseErrorKind::DuplicateEdge(*first)));
        }
        rows.push((sorted, line));
    }
    if rows.len() != m {
        return Err(ParseError {
            line: last_line,
            kind: ParseErrorKind::EdgeCount {
                expected: m,
                found: rows.len(),
            },
        });
    }
    Hypergraph::new(r, n, rows.iter().map(|(e, _)| e)).map_err(|e| ParseError {
        line: hline,
        kind: ParseErrorKind::Shape(e),
    })
}

/// Header `r n m`, then one line per edge in canonical order, 1-based.
pub fn serialize(h: &Hypergraph) -> String {
    let mut out = format!("{} {} {}\n", h.uniformity(), h.vertex_count(), h.edge_count());
    for e in h.edges() {
        let row: Vec<String> = e.iter().map(|v| (v + 1).to_string()).collect();
        let _ = writeln!(out, "{}", row.join(" "));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_with_comments_and_blank_lines() {
        let text = "# two blocks\n4 8 2\n\n1 2 3 4  # first\n5 6 7 8\n";
        let h = parse(text).unwrap();
        assert_eq!(h.edge_count(), 2);
        assert_eq!(h.edge(1).to_vec(), vec![4, 5, 6, 7]);
        assert_eq!(serialize(&h), "4 8 2\n1 2 3 4\n5 6 7 8\n");
    }

    #[test]
    fn reports_line_numbers() {
        let e = parse("4 8 2\n1 2 3 4\n1 1 2 3\n").unwrap_err();
        assert_eq!(e.line, 3);
        assert_eq!(e.kind, ParseErrorKind::RepeatedVertex);

        let e = parse("4 8 1\n1 2 3\n").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::Arity { expected: 4, found: 3 });

        let e = parse("4 8 1\n1 2 3 9\n").unwrap_err();
        assert_eq!((e.line, e.kind), (2, ParseErrorKind::OutOfRange { id: 9, n: 8 }));

        let e = parse("4 8 2\n1 2 3 4\n\n4 3 2 1\n").unwrap_err();
        assert_eq!((e.line, e.kind), (4, ParseErrorKind::DuplicateEdge(2)));

        let e = parse("4 8\n").unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::Header(_)));

        let e = parse("4 8 3\n1 2 3 4\n").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::EdgeCount { expected: 3, found: 1 });

        let e = parse("# nothing\n").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::MissingHeader);

        let e = parse("5 8 0\n").unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::Shape(HypergraphError::Uniformity(5))));

        let e = parse("4 8 1\n1 2 x 4\n").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::BadToken("x".into()));
    }
}
