//! Text formats: the edge-list format, a subset of Pajek `.net`, and
//! per-vertex label files.
//!
//! Edge list:
//!
//! ```text
//! # comment
//! nodes 3 base 0
//! 0 1
//! 1 2 0.5
//! ```
//!
//! The header may also be written `nodes N` (base 0). A `;` acts as a line
//! break, so `nodes 2; 0 1` is a complete file.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A parsed graph plus whether its weights had to be rescaled into `[0, 1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Loaded {
    pub graph: Graph,
    pub rescaled: bool,
}

/// Logical lines as `(1-based line number, content)`, with comments and
/// blank lines removed.
fn logical_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().flat_map(|(i, line)| {
        let line = line.split('#').next().unwrap_or("");
        line.split(';')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(move |s| (i + 1, s))
    })
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

struct EdgeSink {
    n: usize,
    base: usize,
    edges: HashMap<(usize, usize), f64>,
    order: Vec<(usize, usize)>,
}

impl EdgeSink {
    fn new(n: usize, base: usize) -> Self {
        EdgeSink {
            n,
            base,
            edges: HashMap::new(),
            order: Vec::new(),
        }
    }

    fn vertex(&self, line: usize, token: &str) -> Result<usize> {
        let id: i64 = token
            .parse()
            .map_err(|_| parse_err(line, format!("non-numeric vertex id {token:?}")))?;
        let idx = id - self.base as i64;
        if idx < 0 || idx as usize >= self.n {
            return Err(Error::VertexOutOfRange {
                line,
                id,
                n: self.n,
                base: self.base,
            });
        }
        Ok(idx as usize)
    }

    /// Parses `u v [w]`. With `collapse`, a repeated pair with the same
    /// weight is accepted once (arcs in both directions).
    fn push(&mut self, line: usize, content: &str, collapse: bool) -> Result<()> {
        let tokens: Vec<&str> = content.split_whitespace().collect();
        if tokens.len() < 2 || tokens.len() > 3 {
            return Err(parse_err(
                line,
                format!("expected `u v [w]`, got {content:?}"),
            ));
        }
        let u = self.vertex(line, tokens[0])?;
        let v = self.vertex(line, tokens[1])?;
        let w = match tokens.get(2) {
            Some(t) => t
                .parse::<f64>()
                .map_err(|_| parse_err(line, format!("non-numeric weight {t:?}")))?,
            None => 1.0,
        };
        if !(w.is_finite() && w > 0.0) {
            return Err(parse_err(
                line,
                format!("edge weight must be positive, got {w}"),
            ));
        }
        if u == v {
            return Err(Error::SelfLoop {
                line,
                vertex: u + self.base,
            });
        }
        let key = (u.min(v), u.max(v));
        match self.edges.get(&key) {
            Some(&prev) if collapse && prev == w => Ok(()),
            Some(_) => Err(Error::DuplicateEdge {
                line,
                u: key.0 + self.base,
                v: key.1 + self.base,
            }),
            None => {
                self.edges.insert(key, w);
                self.order.push(key);
                Ok(())
            }
        }
    }

    fn finish(self) -> Loaded {
        let max_w = self.edges.values().copied().fold(0.0, f64::max);
        let rescaled = max_w > 1.0;
        let scale = if rescaled { max_w } else { 1.0 };
        let mut g = Graph::empty(self.n);
        for key in &self.order {
            g.set_weight(key.0, key.1, self.edges[key] / scale);
        }
        Loaded { graph: g, rescaled }
    }
}

fn parse_count(line: usize, token: Option<&str>, what: &str) -> Result<usize> {
    let t = token.ok_or_else(|| parse_err(line, format!("missing {what}")))?;
    t.parse()
        .map_err(|_| parse_err(line, format!("invalid {what} {t:?}")))
}

/// Parses the edge-list format.
pub fn load_edge_list(text: &str) -> Result<Loaded> {
    let mut lines = logical_lines(text);
    let (hline, header) = lines.next().ok_or(Error::MissingHeader("nodes N"))?;
    let mut tokens = header.split_whitespace();
    if tokens.next() != Some("nodes") {
        return Err(Error::MissingHeader("nodes N"));
    }
    let n = parse_count(hline, tokens.next(), "vertex count")?;
    let base = match (tokens.next(), tokens.next()) {
        (None, _) => 0,
        (Some("base"), Some("0")) => 0,
        (Some("base"), Some("1")) => 1,
        _ => return Err(parse_err(hline, format!("malformed header {header:?}"))),
    };
    if tokens.next().is_some() {
        return Err(parse_err(hline, format!("malformed header {header:?}")));
    }
    let mut sink = EdgeSink::new(n, base);
    for (line, content) in lines {
        sink.push(line, content, false)?;
    }
    Ok(sink.finish())
}

/// Parses the supported Pajek subset: `*Vertices N`, optional vertex label
/// lines, then `*Edges` / `*Arcs` sections with 1-based ids. Arcs are
/// symmetrised; an edge listed twice with equal weight is kept once.
pub fn load_pajek(text: &str) -> Result<Loaded> {
    let mut sink: Option<EdgeSink> = None;
    let mut in_edges = false;
    for (line, content) in text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())) {
        if content.is_empty() || content.starts_with('%') {
            continue;
        }
        if let Some(rest) = content.strip_prefix('*') {
            let mut tokens = rest.split_whitespace();
            let section = tokens.next().unwrap_or("").to_ascii_lowercase();
            match section.as_str() {
                "vertices" => {
                    let n = parse_count(line, tokens.next(), "vertex count")?;
                    sink = Some(EdgeSink::new(n, 1));
                    in_edges = false;
                }
                "edges" | "arcs" => {
                    if sink.is_none() {
                        return Err(Error::MissingHeader("*Vertices N"));
                    }
                    in_edges = true;
                }
                other => return Err(parse_err(line, format!("unsupported section *{other}"))),
            }
            continue;
        }
        let Some(s) = sink.as_mut() else {
            return Err(Error::MissingHeader("*Vertices N"));
        };
        if in_edges {
            s.push(line, content, true)?;
        }
        // lines between *Vertices and the first edge section are vertex labels
    }
    sink.map(EdgeSink::finish)
        .ok_or(Error::MissingHeader("*Vertices N"))
}

/// Writes the edge-list format with 0-based ids. Unit weights are omitted.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("nodes {} base 0\n", g.n());
    for (u, v, w) in g.edges() {
        if w == 1.0 {
            let _ = writeln!(out, "{u} {v}");
        } else {
            let _ = writeln!(out, "{u} {v} {w}");
        }
    }
    out
}

/// Parses `vertex_id label` lines (1-based ids) into a dense 0-based label
/// vector. Labels may be arbitrary tokens; they are numbered in order of
/// first appearance.
pub fn load_labels(text: &str, n: usize) -> Result<Vec<usize>> {
    let mut out: Vec<Option<usize>> = vec![None; n];
    let mut names: Vec<String> = Vec::new();
    for (line, content) in logical_lines(text) {
        let tokens: Vec<&str> = content.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(parse_err(
                line,
                format!("expected `vertex_id label`, got {content:?}"),
            ));
        }
        let id: usize = tokens[0]
            .parse()
            .map_err(|_| parse_err(line, format!("non-numeric vertex id {:?}", tokens[0])))?;
        if id == 0 || id > n {
            return Err(Error::VertexOutOfRange {
                line,
                id: id as i64,
                n,
                base: 1,
            });
        }
        let label = match names.iter().position(|s| s == tokens[1]) {
            Some(p) => p,
            None => {
                names.push(tokens[1].to_string());
                names.len() - 1
            }
        };
        if out[id - 1].replace(label).is_some() {
            return Err(parse_err(line, format!("vertex {id} labelled twice")));
        }
    }
    out.into_iter()
        .enumerate()
        .map(|(i, l)| {
            l.ok_or_else(|| Error::InvalidArgument(format!("vertex {} has no label", i + 1)))
        })
        .collect()
}
