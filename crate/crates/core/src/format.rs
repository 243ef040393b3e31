//! Text and JSON formats for graphs, complexes and vectors.
//!
//! Graphs: an edge list (`n=<int>` header, one `u v` pair per line), graph6,
//! or JSON `{"n": int, "edges": [[u, v], ...]}`. Complexes: `n=<int>` header
//! followed by one facet per line, or JSON `{"n": int, "facets": [[..], ..]}`.
//! Blank lines and lines starting with `#` are ignored in the line formats.

use serde::{Deserialize, Serialize};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vector::IntVector;

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<[usize; 2]>,
}

#[derive(Serialize, Deserialize)]
struct ComplexJson {
    n: usize,
    facets: Vec<Vec<usize>>,
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_header<'a>(lines: &mut impl Iterator<Item = (usize, &'a str)>) -> Result<usize> {
    let (no, line) = lines
        .next()
        .ok_or_else(|| Error::parse("line 1", "missing `n=<int>` header"))?;
    let value = line
        .strip_prefix("n=")
        .ok_or_else(|| Error::parse(format!("line {no}"), "expected `n=<int>` header"))?;
    value
        .trim()
        .parse()
        .map_err(|_| Error::parse(format!("line {no}"), format!("invalid vertex count {value:?}")))
}

fn parse_labels(no: usize, line: &str) -> Result<Vec<usize>> {
    line.split_whitespace()
        .map(|tok| {
            tok.parse::<usize>()
                .map_err(|_| Error::parse(format!("line {no}"), format!("invalid vertex label {tok:?}")))
        })
        .collect()
}

fn located(no: usize, err: Error) -> Error {
    match err {
        Error::Parse { .. } => err,
        other => Error::parse(format!("line {no}"), other.to_string()),
    }
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let n = parse_header(&mut lines)?;
    let mut g = Graph::empty(n).map_err(|e| located(1, e))?;
    for (no, line) in lines {
        let labels = parse_labels(no, line)?;
        let [u, v] = labels[..] else {
            return Err(Error::parse(format!("line {no}"), "expected exactly two vertex labels"));
        };
        g.add_edge(u, v).map_err(|e| located(no, e))?;
    }
    Ok(g)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("n={}\n", g.order());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn parse_graph_json(text: &str) -> Result<Graph> {
    let raw: GraphJson = serde_json::from_str(text)
        .map_err(|e| Error::parse(format!("line {} column {}", e.line(), e.column()), e.to_string()))?;
    let edges: Vec<(usize, usize)> = raw.edges.iter().map(|&[u, v]| (u, v)).collect();
    Graph::from_edges(raw.n, &edges)
}

pub fn write_graph_json(g: &Graph) -> String {
    let raw = GraphJson {
        n: g.order(),
        edges: g.edges().map(|(u, v)| [u, v]).collect(),
    };
    serde_json::to_string(&raw).expect("plain data serializes")
}

/// Encodes `g` in graph6 (without the optional `>>graph6<<` header).
///
/// The upper triangle of the adjacency matrix is read column by column,
/// `x(0,1), x(0,2), x(1,2), x(0,3), ...`, packed big-endian into 6-bit groups,
/// each offset by 63.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut bytes = Vec::new();
    if n <= 62 {
        bytes.push(n as u8 + 63);
    } else {
        bytes.push(126);
        for shift in [12, 6, 0] {
            bytes.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i + 1, j + 1));
            filled += 1;
            if filled == 6 {
                bytes.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        bytes.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(bytes).expect("graph6 bytes are printable ASCII")
}

/// Decodes a graph6 string. An optional `>>graph6<<` header and surrounding
/// whitespace are accepted; errors carry the byte offset.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let s = text.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    let at = |offset: usize, msg: String| Error::parse(format!("byte {offset}"), msg);
    let value = |offset: usize| -> Result<u32> {
        match bytes.get(offset) {
            Some(&b) if (63..=126).contains(&b) => Ok(u32::from(b - 63)),
            Some(&b) => Err(at(offset, format!("invalid graph6 character {:?}", b as char))),
            None => Err(at(offset, "unexpected end of graph6 string".into())),
        }
    };
    let (n, mut pos) = if bytes.first() == Some(&126) {
        if bytes.get(1) == Some(&126) {
            return Err(at(1, "graphs with more than 258047 vertices are not supported".into()));
        }
        let n = (value(1)? << 12) | (value(2)? << 6) | value(3)?;
        (n as usize, 4)
    } else {
        (value(0)? as usize, 1)
    };
    let mut g = Graph::empty(n).map_err(|e| at(0, e.to_string()))?;
    let pairs = n * n.saturating_sub(1) / 2;
    let expected = pos + pairs.div_ceil(6);
    if bytes.len() != expected {
        return Err(at(
            bytes.len().min(expected),
            format!("expected {expected} bytes for {n} vertices, found {}", bytes.len()),
        ));
    }
    let mut bit = 0;
    let mut chunk = 0;
    for j in 1..n {
        for i in 0..j {
            if bit == 0 {
                chunk = value(pos)?;
                pos += 1;
            }
            if chunk >> (5 - bit) & 1 == 1 {
                g.add_edge(i + 1, j + 1).expect("labels within range");
            }
            bit = (bit + 1) % 6;
        }
    }
    if bit != 0 && chunk & ((1 << (6 - bit)) - 1) != 0 {
        return Err(at(pos - 1, "nonzero padding bits".into()));
    }
    Ok(g)
}

/// Reads a graph in any supported format: JSON if it starts with `{`, an edge
/// list if it starts with `n=`, graph6 otherwise.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let first = content_lines(text).next().map(|(_, l)| l).unwrap_or("");
    if first.starts_with('{') {
        parse_graph_json(text)
    } else if first.starts_with("n=") {
        parse_edge_list(text)
    } else {
        parse_graph6(text)
    }
}

/// Line format: `n=<int>` then one facet per line as space-separated labels.
pub fn parse_complex_text(text: &str) -> Result<SimplicialComplex> {
    let mut lines = content_lines(text);
    let n = parse_header(&mut lines)?;
    let mut facets = Vec::new();
    for (no, line) in lines {
        let labels = parse_labels(no, line)?;
        SimplicialComplex::from_facet_lists(n, std::slice::from_ref(&labels)).map_err(|e| located(no, e))?;
        facets.push(labels);
    }
    SimplicialComplex::from_facet_lists(n, &facets)
}

pub fn write_complex_text(c: &SimplicialComplex) -> String {
    let mut out = format!("n={}\n", c.ground_size());
    for facet in c.facets().into_iter().filter(|f| !f.is_empty()) {
        let labels: Vec<String> = facet.vertices().map(|v| v.to_string()).collect();
        out.push_str(&labels.join(" "));
        out.push('\n');
    }
    out
}

pub fn parse_complex_json(text: &str) -> Result<SimplicialComplex> {
    let raw: ComplexJson = serde_json::from_str(text)
        .map_err(|e| Error::parse(format!("line {} column {}", e.line(), e.column()), e.to_string()))?;
    SimplicialComplex::from_facet_lists(raw.n, &raw.facets)
}

pub fn write_complex_json(c: &SimplicialComplex) -> String {
    let raw = ComplexJson {
        n: c.ground_size(),
        facets: c
            .facets()
            .into_iter()
            .filter(|f| !f.is_empty())
            .map(|f| f.to_vec())
            .collect(),
    };
    serde_json::to_string(&raw).expect("plain data serializes")
}

/// Reads a complex as JSON if the text starts with `{`, else as the line format.
pub fn parse_complex(text: &str) -> Result<SimplicialComplex> {
    if text.trim_start().starts_with('{') {
        parse_complex_json(text)
    } else {
        parse_complex_text(text)
    }
}

/// Parses a comma separated list of nonnegative integers such as `5,6,0`.
pub fn parse_vector(text: &str) -> Result<IntVector> {
    let mut entries = Vec::new();
    let mut offset = 0;
    for tok in text.split(',') {
        let trimmed = tok.trim();
        let value = trimmed.parse::<u64>().map_err(|_| {
            Error::parse(
                format!("offset {offset}"),
                format!("expected a nonnegative integer, found {trimmed:?}"),
            )
        })?;
        entries.push(value);
        offset += tok.len() + 1;
    }
    Ok(IntVector::new(entries))
}
