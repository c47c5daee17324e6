//! The graph6 text format (as produced by nauty's `geng`/`showg`).
//!
//! A string is `N(n) R(x)`: the vertex count in one, four or eight bytes, then
//! the upper triangle of the adjacency matrix, column by column
//! (`x(0,1) x(0,2) x(1,2) x(0,3) ...`), packed six bits per byte with 63 added.

use crate::error::{Graph6Error, Result};
use crate::graph::Graph;

const HEADER: &str = ">>graph6<<";
const BIAS: u8 = 63;

fn body_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty.into());
    }
    for (offset, &byte) in bytes.iter().enumerate() {
        if !(BIAS..=126).contains(&byte) {
            return Err(Graph6Error::ByteOutOfRange { offset, byte }.into());
        }
    }
    let (n, start) = decode_size(bytes)?;
    let body = &bytes[start..];
    let expected = body_len(n);
    if body.len() != expected {
        return Err(Graph6Error::WrongLength { expected, found: body.len() }.into());
    }

    let mut g = Graph::new(n);
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - BIAS;
            if byte & (1 << (5 - k % 6)) != 0 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    if !k.is_multiple_of(6) {
        let pad_mask = (1u8 << (6 - k % 6)) - 1;
        if (body[k / 6] - BIAS) & pad_mask != 0 {
            return Err(Graph6Error::TrailingBits.into());
        }
    }
    Ok(g)
}

fn decode_size(bytes: &[u8]) -> Result<(usize, usize)> {
    let group = |s: &[u8]| s.iter().fold(0usize, |acc, &b| (acc << 6) | (b - BIAS) as usize);
    if bytes[0] != 126 {
        return Ok(((bytes[0] - BIAS) as usize, 1));
    }
    if bytes.len() >= 2 && bytes[1] == 126 {
        if bytes.len() < 8 {
            return Err(Graph6Error::MalformedHeader.into());
        }
        let n = group(&bytes[2..8]);
        if n <= 258_047 {
            return Err(Graph6Error::MalformedHeader.into());
        }
        return Ok((n, 8));
    }
    if bytes.len() < 4 {
        return Err(Graph6Error::MalformedHeader.into());
    }
    let n = group(&bytes[1..4]);
    if n < 63 {
        return Err(Graph6Error::MalformedHeader.into());
    }
    Ok((n, 4))
}

fn encode_size(n: usize, out: &mut Vec<u8>) {
    if n < 63 {
        out.push(n as u8 + BIAS);
    } else if n <= 258_047 {
        out.push(126);
        out.extend((0..3).rev().map(|s| ((n >> (6 * s)) & 63) as u8 + BIAS));
    } else {
        assert!(n < 1 << 36, "graph6 cannot encode {n} vertices");
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|s| ((n >> (6 * s)) & 63) as u8 + BIAS));
    }
}

pub fn write_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut out = Vec::with_capacity(8 + body_len(n));
    encode_size(n, &mut out);
    let mut acc = 0u8;
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            k += 1;
            if k.is_multiple_of(6) {
                out.push(acc + BIAS);
                acc = 0;
            }
        }
    }
    if !k.is_multiple_of(6) {
        out.push((acc << (6 - k % 6)) + BIAS);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}
