//! Text formats: a 0-indexed DIMACS-style edge list, Graphviz DOT, and
//! the cover JSON document.
//!
//! Edge lists look like
//!
//! ```text
//! c optional comments
//! p 3 2
//! e 0 1
//! e 1 2
//! ```
//!
//! The header may also be written `p edge 3 2`.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};
use crate::tessellation::TessellationCover;

/// A parsed edge list with any non-fatal warnings (duplicate edges).
#[derive(Debug, Clone, PartialEq)]
pub struct ParsedGraph {
    pub graph: Graph,
    pub warnings: Vec<String>,
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn number(tok: Option<&str>, line: usize, what: &str) -> Result<usize> {
    let tok = tok.ok_or_else(|| parse_err(line, format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| parse_err(line, format!("{what} is not a non-negative integer: {tok:?}")))
}

pub fn parse_edge_list(text: &str) -> Result<ParsedGraph> {
    let mut header: Option<(usize, usize)> = None;
    let mut builder: Option<GraphBuilder> = None;
    let mut seen = BTreeSet::new();
    let mut edge_lines = 0;
    let mut warnings = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let mut toks = raw.split_whitespace();
        let Some(kind) = toks.next() else { continue };
        match kind {
            "c" => continue,
            "p" => {
                if header.is_some() {
                    return Err(parse_err(line, "second header line"));
                }
                let rest: Vec<&str> = toks.collect();
                let nums = match rest.as_slice() {
                    [_, _, _] if rest[0].parse::<usize>().is_err() => &rest[1..],
                    _ => &rest[..],
                };
                if nums.len() != 2 {
                    return Err(parse_err(line, "header must be \"p <n> <m>\""));
                }
                let n = number(Some(nums[0]), line, "vertex count")?;
                let m = number(Some(nums[1]), line, "edge count")?;
                header = Some((n, m));
                builder = Some(GraphBuilder::new(n));
            }
            "e" => {
                let Some((n, _)) = header else {
                    return Err(parse_err(line, "edge before the \"p\" header"));
                };
                let u = number(toks.next(), line, "first endpoint")?;
                let v = number(toks.next(), line, "second endpoint")?;
                if toks.next().is_some() {
                    return Err(parse_err(line, "trailing tokens after edge"));
                }
                for x in [u, v] {
                    if x >= n {
                        return Err(parse_err(line, format!("vertex {x} out of range for n = {n}")));
                    }
                }
                if u == v {
                    return Err(parse_err(line, format!("self-loop at vertex {u}")));
                }
                edge_lines += 1;
                if !seen.insert((u.min(v), u.max(v))) {
                    warnings.push(format!("line {line}: duplicate edge {u}-{v} ignored"));
                    continue;
                }
                builder.as_mut().expect("header seen").add_edge(u, v)?;
            }
            other => return Err(parse_err(line, format!("unknown line type {other:?}"))),
        }
    }
    let Some((_, m)) = header else {
        return Err(parse_err(0, "missing \"p <n> <m>\" header"));
    };
    if m != edge_lines {
        return Err(parse_err(
            0,
            format!("header announces {m} edges but {edge_lines} edge lines follow"),
        ));
    }
    Ok(ParsedGraph {
        graph: builder.expect("header seen").build(),
        warnings,
    })
}

/// The edge list of `g`, edges in sorted order, preceded by `comments`.
pub fn emit_edge_list(g: &Graph, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        for l in c.lines() {
            let _ = writeln!(out, "c {l}");
        }
    }
    let _ = writeln!(out, "p {} {}", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "e {u} {v}");
    }
    out
}

const PALETTE: [&str; 12] = [
    "red", "blue", "darkgreen", "orange", "purple", "brown", "magenta", "cyan4", "gold3",
    "navy", "olivedrab", "deeppink",
];

/// Graphviz source for `g`. With a cover, each edge is coloured by the
/// first tessellation containing it and labelled with its index.
pub fn emit_dot(g: &Graph, cover: Option<&TessellationCover>) -> String {
    let n = g.n();
    let mut first = vec![None; n * n];
    if let Some(c) = cover {
        for (t, tess) in c.tessellations.iter().enumerate() {
            for clique in tess.cliques() {
                for (i, &a) in clique.iter().enumerate() {
                    for &b in &clique[i + 1..] {
                        if a < n && b < n && first[a * n + b].is_none() {
                            first[a * n + b] = Some(t);
                            first[b * n + a] = Some(t);
                        }
                    }
                }
            }
        }
    }
    let mut out = String::from("graph G {\n");
    for v in 0..n {
        match g.label(v) {
            Some(l) => {
                let _ = writeln!(out, "  {v} [label=\"{v}: {}\"];", l.replace('"', "\\\""));
            }
            None => {
                let _ = writeln!(out, "  {v};");
            }
        }
    }
    for (u, v) in g.edges() {
        match first[u * n + v] {
            Some(t) => {
                let _ = writeln!(
                    out,
                    "  {u} -- {v} [color=\"{}\", label=\"{t}\"];",
                    PALETTE[t % PALETTE.len()]
                );
            }
            None => {
                let _ = writeln!(out, "  {u} -- {v};");
            }
        }
    }
    out.push_str("}\n");
    out
}

/// `{"tessellations": [[[v, ...], ...], ...]}` with sorted cliques.
pub fn emit_cover_json(cover: &TessellationCover) -> String {
    let mut s = serde_json::to_string_pretty(cover).expect("cover serializes");
    s.push('\n');
    s
}

pub fn parse_cover_json(text: &str) -> Result<TessellationCover> {
    serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        message: e.to_string(),
    })
}
