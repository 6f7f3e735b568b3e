//! Text formats: graph6 and a plain edge list.
//!
//! graph6 packs the vertex count `N(n)` followed by the upper triangle of the
//! adjacency matrix in column order (`x(0,1), x(0,2), x(1,2), x(0,3), ...`),
//! six bits per printable byte offset by 63. The optional `>>graph6<<`
//! header is accepted and dropped.

use crate::error::{Error, Result};
use crate::graph::Graph;

const HEADER: &str = ">>graph6<<";
const BIAS: u8 = 63;

fn g6_err(offset: usize, message: impl Into<String>) -> Error {
    Error::Graph6 { offset, message: message.into() }
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let (base, body) = match text.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest),
        None => (0, text),
    };
    let body = body.trim_end_matches(['\n', '\r']);
    let bytes = body.as_bytes();
    if bytes.is_empty() {
        return Err(g6_err(base, "empty input"));
    }
    if let Some(pos) = bytes.iter().position(|&b| !(BIAS..=126).contains(&b)) {
        return Err(g6_err(base + pos, format!("byte {:#04x} outside '?'..'~'", bytes[pos])));
    }
    let sextet = |i: usize| (bytes[i] - BIAS) as u64;

    let (n, mut pos) = if bytes[0] != 126 {
        (sextet(0) as usize, 1)
    } else if bytes.len() >= 2 && bytes[1] == 126 {
        if bytes.len() < 8 {
            return Err(g6_err(base + bytes.len(), "truncated 36-bit vertex count"));
        }
        let v = (2..8).fold(0u64, |acc, i| (acc << 6) | sextet(i));
        (v as usize, 8)
    } else {
        if bytes.len() < 4 {
            return Err(g6_err(base + bytes.len(), "truncated 18-bit vertex count"));
        }
        let v = (1..4).fold(0u64, |acc, i| (acc << 6) | sextet(i));
        (v as usize, 4)
    };

    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    let have = bytes.len() - pos;
    if have < need {
        return Err(g6_err(base + bytes.len(), format!("truncated: expected {need} data bytes, found {have}")));
    }
    if have > need {
        return Err(g6_err(base + pos + need, "trailing bytes after adjacency data"));
    }

    let mut edges = Vec::new();
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = bytes[pos + k / 6] - BIAS;
            if byte & (0b10_0000 >> (k % 6)) != 0 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if need > 0 && bits % 6 != 0 {
        let last = bytes[pos + need - 1] - BIAS;
        let pad_mask = (1u8 << (6 - bits % 6)) - 1;
        if last & pad_mask != 0 {
            return Err(g6_err(base + pos + need - 1, "nonzero padding bits"));
        }
    }
    pos += need;
    debug_assert_eq!(pos, bytes.len());
    edges.sort_unstable();
    Ok(Graph::from_sorted_unique(n, edges))
}

pub fn serialize_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + BIAS);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + BIAS);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

/// Parses `n` on the first line followed by one `u v` pair per line.
/// Blank lines and `#` comments are skipped; repeated edges (in either
/// orientation) are merged.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let err = |line: usize, message: String| Error::EdgeList { line, message };
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (first_line, header) = lines.next().ok_or_else(|| err(1, "missing vertex count".into()))?;
    let n: usize = header
        .parse()
        .map_err(|_| err(first_line, format!("expected vertex count, found {header:?}")))?;

    let mut edges = Vec::new();
    for (line_no, line) in lines {
        let mut tokens = line.split_whitespace();
        let mut endpoint = || -> Result<usize> {
            let tok = tokens.next().ok_or_else(|| err(line_no, "expected two vertex indices".into()))?;
            tok.parse::<usize>()
                .map_err(|_| err(line_no, format!("non-integer token {tok:?}")))
        };
        let u = endpoint()?;
        let v = endpoint()?;
        if tokens.next().is_some() {
            return Err(err(line_no, "more than two tokens".into()));
        }
        if u >= n || v >= n {
            return Err(err(line_no, format!("vertex index out of range 0..{n}")));
        }
        if u == v {
            return Err(err(line_no, format!("self-loop at vertex {u}")));
        }
        edges.push((u.min(v), u.max(v)));
    }
    edges.sort_unstable();
    edges.dedup();
    Ok(Graph::from_sorted_unique(n, edges))
}

pub fn serialize_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Accepts either format: an edge list starts with a decimal digit, which is
/// never a valid first graph6 byte.
pub fn parse_graph_auto(text: &str) -> Result<Graph> {
    match text.trim_start().bytes().next() {
        Some(b) if b.is_ascii_digit() => parse_edge_list(text),
        _ => parse_graph6(text.trim_start()),
    }
}
