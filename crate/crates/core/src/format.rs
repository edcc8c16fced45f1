//! The `.hg` text format.
//!
//! ```text
//! # optional header fixing the universe and its order
//! !vertices a b c d
//! a b
//! c d
//! {}        <- the empty edge
//! ```
//!
//! Without a header, vertices are numbered by first appearance. Blank lines
//! are ignored; only the literal `{}` denotes the empty edge.

use std::collections::HashMap;

use crate::{Error, Hypergraph, Result, VertexSet};

const HEADER: &str = "!vertices";

/// Result of parsing: the hypergraph plus the number of repeated edges dropped.
#[derive(Debug, Clone)]
pub struct Parsed {
    pub hypergraph: Hypergraph,
    pub duplicates: usize,
}

fn valid_token(tok: &str) -> bool {
    !tok.contains(['{', '}', '!', '#'])
}

pub fn parse(text: &str) -> Result<Parsed> {
    let mut names: Vec<String> = Vec::new();
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut fixed = false;
    let mut raw_edges: Vec<Vec<usize>> = Vec::new();

    for (lineno, raw) in text.lines().enumerate() {
        let line_no = lineno + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens[0].starts_with('!') {
            if tokens[0] != HEADER {
                return Err(Error::MalformedToken {
                    line: line_no,
                    token: tokens[0].to_string(),
                });
            }
            if fixed {
                return Err(Error::DuplicateHeader { line: line_no });
            }
            if !raw_edges.is_empty() || !names.is_empty() {
                return Err(Error::LateHeader { line: line_no });
            }
            for tok in &tokens[1..] {
                if !valid_token(tok) {
                    return Err(Error::MalformedToken {
                        line: line_no,
                        token: tok.to_string(),
                    });
                }
                if index.insert(tok.to_string(), names.len()).is_some() {
                    return Err(Error::DuplicateVertex {
                        line: line_no,
                        token: tok.to_string(),
                    });
                }
                names.push(tok.to_string());
            }
            fixed = true;
            continue;
        }
        if tokens.contains(&"{}") {
            if tokens.len() != 1 {
                return Err(Error::MalformedToken {
                    line: line_no,
                    token: "{}".to_string(),
                });
            }
            raw_edges.push(Vec::new());
            continue;
        }
        let mut edge = Vec::with_capacity(tokens.len());
        for tok in tokens {
            if !valid_token(tok) {
                return Err(Error::MalformedToken {
                    line: line_no,
                    token: tok.to_string(),
                });
            }
            let v = match index.get(tok) {
                Some(&v) => v,
                None if fixed => {
                    return Err(Error::UnknownVertex {
                        line: line_no,
                        token: tok.to_string(),
                    })
                }
                None => {
                    let v = names.len();
                    index.insert(tok.to_string(), v);
                    names.push(tok.to_string());
                    v
                }
            };
            edge.push(v);
        }
        raw_edges.push(edge);
    }

    let n = names.len();
    let (h, duplicates) = Hypergraph::with_duplicate_count(
        n,
        raw_edges.into_iter().map(|e| VertexSet::from_indices(n, e)),
    );
    Ok(Parsed {
        hypergraph: h.with_names(names),
        duplicates,
    })
}

/// Writes `h` in `.hg` form: a header line with the universe, then one edge per
/// line with its vertices in ascending order.
pub fn serialize(h: &Hypergraph) -> String {
    let mut out = String::from(HEADER);
    for name in h.vertex_names() {
        out.push(' ');
        out.push_str(&name);
    }
    out.push('\n');
    for e in h.edges() {
        out.push_str(&h.format_set(e));
        out.push('\n');
    }
    out
}
