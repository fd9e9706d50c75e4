//! Graph input and output.
//!
//! Three encodings are supported:
//!
//! * `graph6`: the standard one-line ASCII packing of the upper adjacency
//!   triangle, column by column, six bits per printable byte.
//! * edge list: a header line `n m` followed by `m` lines `u v`.
//! * JSON: `{"n": .., "edges": [[u,v], ..]}` with an optional `"labels"`
//!   array of `n` strings.
//!
//! [`sniff`] picks the encoding from the input shape: JSON starts with `{`,
//! an edge list starts with an integer, and everything else is treated as
//! graph6 (graph6 bytes sit in `?`..=`~`, so the three are disjoint).

use crate::graph::{Graph, MAX_VERTICES};
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Graph6,
    EdgeList,
    Json,
}

impl Format {
    pub fn name(self) -> &'static str {
        match self {
            Format::Graph6 => "graph6",
            Format::EdgeList => "edgelist",
            Format::Json => "json",
        }
    }
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "graph6" | "g6" => Ok(Format::Graph6),
            "edgelist" | "edges" => Ok(Format::EdgeList),
            "json" => Ok(Format::Json),
            other => Err(format!("unknown format {other:?}")),
        }
    }
}

/// A parsed graph plus where it came from.
#[derive(Clone, Debug)]
pub struct GraphDocument {
    pub graph: Graph,
    pub format: Format,
    /// Vertex labels, currently carried only by the JSON encoding.
    pub labels: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseError {
    Empty,
    MalformedHeader(String),
    MalformedEdge(String),
    VertexOutOfRange { vertex: usize, n: usize },
    SelfLoop(usize),
    DuplicateEdge(usize, usize),
    EdgeCountMismatch { declared: usize, found: usize },
    TooManyVertices { n: usize },
    BadGraph6(String),
    BadJson(String),
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseError::Empty => write!(f, "empty input"),
            ParseError::MalformedHeader(line) => {
                write!(f, "malformed edge-list header {line:?}: expected \"n m\"")
            }
            ParseError::MalformedEdge(line) => {
                write!(f, "malformed edge line {line:?}: expected \"u v\"")
            }
            ParseError::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for a graph on {n} vertices")
            }
            ParseError::SelfLoop(v) => write!(f, "self-loop at vertex {v}"),
            ParseError::DuplicateEdge(u, v) => write!(f, "duplicate edge ({u}, {v})"),
            ParseError::EdgeCountMismatch { declared, found } => {
                write!(f, "header declares {declared} edges but {found} were given")
            }
            ParseError::TooManyVertices { n } => {
                write!(f, "{n} vertices exceeds the cap of {MAX_VERTICES}")
            }
            ParseError::BadGraph6(why) => write!(f, "bad graph6: {why}"),
            ParseError::BadJson(why) => write!(f, "bad json: {why}"),
        }
    }
}

impl std::error::Error for ParseError {}

/// Guess the encoding from the input shape.
pub fn sniff(input: &str) -> Format {
    let trimmed = input.trim_start();
    if trimmed.starts_with('{') {
        return Format::Json;
    }
    if let Some(line) = trimmed.lines().next() {
        if !line.is_empty() && line.split_whitespace().all(|t| t.parse::<u64>().is_ok()) {
            return Format::EdgeList;
        }
    }
    Format::Graph6
}

pub fn parse_graph(input: &str, format: Format) -> Result<GraphDocument, ParseError> {
    match format {
        Format::Graph6 => Ok(GraphDocument {
            graph: from_graph6(input)?,
            format,
            labels: None,
        }),
        Format::EdgeList => Ok(GraphDocument {
            graph: from_edgelist(input)?,
            format,
            labels: None,
        }),
        Format::Json => {
            let (graph, labels) = from_json(input)?;
            Ok(GraphDocument {
                graph,
                format,
                labels,
            })
        }
    }
}

pub fn parse_auto(input: &str) -> Result<GraphDocument, ParseError> {
    if input.trim().is_empty() {
        return Err(ParseError::Empty);
    }
    parse_graph(input, sniff(input))
}

pub fn write_graph(g: &Graph, format: Format) -> String {
    match format {
        Format::Graph6 => to_graph6(g),
        Format::EdgeList => to_edgelist(g),
        Format::Json => to_json(g, None),
    }
}

/// Upper-triangle bit order shared by the graph6 encoder and decoder:
/// pair `(i, j)` with `j` ascending and `i` in `0..j` within each `j`.
fn pair_bits(g: &Graph) -> Vec<bool> {
    let n = g.n();
    let mut bits = Vec::with_capacity(n * (n - 1) / 2);
    for j in 1..n {
        for i in 0..j {
            bits.push(g.has_edge(i, j));
        }
    }
    bits
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n < 63 {
        out.push(n as u8 + 63);
    } else {
        // 18-bit size form, big-endian six-bit groups.
        out.push(126);
        out.push(((n >> 12) & 0x3f) as u8 + 63);
        out.push(((n >> 6) & 0x3f) as u8 + 63);
        out.push((n & 0x3f) as u8 + 63);
    }
    let bits = if n > 1 { pair_bits(g) } else { Vec::new() };
    for chunk in bits.chunks(6) {
        let mut group = 0u8;
        for (k, &b) in chunk.iter().enumerate() {
            if b {
                group |= 1 << (5 - k);
            }
        }
        out.push(group + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ascii")
}

pub fn from_graph6(input: &str) -> Result<Graph, ParseError> {
    let s = input.trim();
    if s.is_empty() {
        return Err(ParseError::Empty);
    }
    let bytes = s.as_bytes();
    if let Some(&bad) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(ParseError::BadGraph6(format!(
            "byte {bad:#04x} outside the printable range '?'..='~'"
        )));
    }
    let (n, body) = if bytes[0] == 126 {
        if bytes.len() >= 2 && bytes[1] == 126 {
            // 36-bit size form: anything that needs it is far over our cap.
            return Err(ParseError::TooManyVertices { n: usize::MAX });
        }
        if bytes.len() < 4 {
            return Err(ParseError::BadGraph6("truncated size field".into()));
        }
        let n = ((bytes[1] as usize - 63) << 12)
            | ((bytes[2] as usize - 63) << 6)
            | (bytes[3] as usize - 63);
        (n, &bytes[4..])
    } else {
        (bytes[0] as usize - 63, &bytes[1..])
    };
    if n > MAX_VERTICES {
        return Err(ParseError::TooManyVertices { n });
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let needed = nbits.div_ceil(6);
    if body.len() != needed {
        return Err(ParseError::BadGraph6(format!(
            "expected {needed} data bytes for n = {n}, got {}",
            body.len()
        )));
    }
    let mut g = Graph::empty(n);
    let mut idx = 0usize;
    'outer: for j in 1..n {
        for i in 0..j {
            let group = body[idx / 6] - 63;
            if group >> (5 - idx % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            idx += 1;
            if idx == nbits {
                break 'outer;
            }
        }
    }
    if nbits % 6 != 0 {
        let tail = body[needed - 1] - 63;
        let pad = 6 - nbits % 6;
        if tail & ((1 << pad) - 1) != 0 {
            return Err(ParseError::BadGraph6("nonzero padding bits".into()));
        }
    }
    Ok(g)
}

pub fn to_edgelist(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.n(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn from_edgelist(input: &str) -> Result<Graph, ParseError> {
    let mut lines = input.lines().filter(|l| !l.trim().is_empty());
    let header = lines.next().ok_or(ParseError::Empty)?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    let parsed: Option<(usize, usize)> = match fields.as_slice() {
        [a, b] => a.parse().ok().zip(b.parse().ok()),
        _ => None,
    };
    let (n, m) = parsed.ok_or_else(|| ParseError::MalformedHeader(header.to_string()))?;
    if n > MAX_VERTICES {
        return Err(ParseError::TooManyVertices { n });
    }
    let mut g = Graph::empty(n);
    let mut found = 0usize;
    for line in lines {
        let fields: Vec<&str> = line.split_whitespace().collect();
        let parsed: Option<(usize, usize)> = match fields.as_slice() {
            [a, b] => a.parse().ok().zip(b.parse().ok()),
            _ => None,
        };
        let (u, v) = parsed.ok_or_else(|| ParseError::MalformedEdge(line.to_string()))?;
        check_edge(&mut g, u, v)?;
        found += 1;
    }
    if found != m {
        return Err(ParseError::EdgeCountMismatch { declared: m, found });
    }
    Ok(g)
}

fn check_edge(g: &mut Graph, u: usize, v: usize) -> Result<(), ParseError> {
    let n = g.n();
    if u >= n || v >= n {
        return Err(ParseError::VertexOutOfRange {
            vertex: u.max(v),
            n,
        });
    }
    if u == v {
        return Err(ParseError::SelfLoop(u));
    }
    if g.has_edge(u, v) {
        return Err(ParseError::DuplicateEdge(u, v));
    }
    g.add_edge(u, v);
    Ok(())
}

pub fn to_json(g: &Graph, labels: Option<&[String]>) -> String {
    let edges: Vec<serde_json::Value> = g
        .edges()
        .into_iter()
        .map(|(u, v)| serde_json::json!([u, v]))
        .collect();
    let mut doc = serde_json::json!({ "n": g.n(), "edges": edges });
    if let Some(ls) = labels {
        doc["labels"] = serde_json::json!(ls);
    }
    doc.to_string()
}

#[allow(clippy::type_complexity)]
pub fn from_json(input: &str) -> Result<(Graph, Option<Vec<String>>), ParseError> {
    let doc: serde_json::Value =
        serde_json::from_str(input).map_err(|e| ParseError::BadJson(e.to_string()))?;
    let n = doc
        .get("n")
        .and_then(|v| v.as_u64())
        .ok_or_else(|| ParseError::BadJson("missing or non-integer \"n\"".into()))?
        as usize;
    if n > MAX_VERTICES {
        return Err(ParseError::TooManyVertices { n });
    }
    let edges = doc
        .get("edges")
        .and_then(|v| v.as_array())
        .ok_or_else(|| ParseError::BadJson("missing \"edges\" array".into()))?;
    let mut g = Graph::empty(n);
    for e in edges {
        let pair = e.as_array().filter(|a| a.len() == 2);
        let uv = pair.and_then(|a| a[0].as_u64().zip(a[1].as_u64()));
        let (u, v) = uv.ok_or_else(|| ParseError::BadJson(format!("bad edge entry {e}")))?;
        check_edge(&mut g, u as usize, v as usize)?;
    }
    let labels = match doc.get("labels") {
        None | Some(serde_json::Value::Null) => None,
        Some(serde_json::Value::Array(ls)) => {
            if ls.len() != n {
                return Err(ParseError::BadJson(format!(
                    "{} labels for {n} vertices",
                    ls.len()
                )));
            }
            let mut out = Vec::with_capacity(ls.len());
            for l in ls {
                match l.as_str() {
                    Some(s) => out.push(s.to_string()),
                    None => return Err(ParseError::BadJson("non-string label".into())),
                }
            }
            Some(out)
        }
        Some(other) => {
            return Err(ParseError::BadJson(format!(
                "\"labels\" must be an array, got {other}"
            )))
        }
    };
    Ok((g, labels))
}
