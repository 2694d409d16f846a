//! Plain-text edge lists: a header line `n m` followed by `m` lines `u v`.
//! Vertices are 0-indexed; `#` starts a comment that runs to end of line.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn parse(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let fields: Vec<&str> = body.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(Error::Parse {
                line,
                msg: format!("expected two fields, found {}", fields.len()),
            });
        }
        let a = parse_field(fields[0], line)?;
        let b = parse_field(fields[1], line)?;
        match header {
            None => header = Some((a, b, line)),
            Some((n, _, _)) => {
                if a == b {
                    return Err(Error::Parse {
                        line,
                        msg: format!("self-loop at vertex {a}"),
                    });
                }
                if a >= n || b >= n {
                    return Err(Error::Parse {
                        line,
                        msg: format!("edge ({a}, {b}) out of range for {n} vertices"),
                    });
                }
                edges.push(((a, b), line));
            }
        }
    }
    let (n, m, hline) = header.ok_or(Error::Parse {
        line: 1,
        msg: "missing header line `n m`".into(),
    })?;
    if edges.len() != m {
        let line = edges.last().map_or(hline, |e| e.1);
        return Err(Error::Parse {
            line,
            msg: format!("header declares {m} edges but {} were given", edges.len()),
        });
    }
    let pairs: Vec<_> = edges.into_iter().map(|e| e.0).collect();
    Graph::build(n, &pairs).map_err(|e| Error::Parse {
        line: hline,
        msg: e.to_string(),
    })
}

fn parse_field(s: &str, line: usize) -> Result<usize> {
    s.parse().map_err(|_| Error::Parse {
        line,
        msg: format!("`{s}` is not a nonnegative integer"),
    })
}

pub fn format(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.order(), edges.len());
    for (u, v) in edges {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph;

    #[test]
    fn parses_with_comments() {
        let g = parse("# a path\n3 2\n0 1  # first\n\n1 2\n").unwrap();
        assert_eq!(g, graph::path(3).unwrap());
    }

    #[test]
    fn reports_line_numbers() {
        match parse("2 1\n0 0\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
        match parse("3 2\n0 1\n1 x\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse("3 2\n0 1\n"), Err(Error::Parse { .. })));
        assert!(matches!(
            parse("3 1\n0 5\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(parse(""), Err(Error::Parse { .. })));
    }

    #[test]
    fn format_then_parse() {
        let g = graph::broom(3, 4).unwrap();
        assert_eq!(parse(&format(&g)).unwrap(), g);
    }
}
