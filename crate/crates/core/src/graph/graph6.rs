//! graph6 encoding: a size header followed by the upper triangle of the
//! adjacency matrix, column by column, packed six bits per printable byte
//! (offset 63).

use super::Graph;
use crate::error::{Error, Result};
use crate::MAX_VERTICES;

const BIAS: u8 = 63;

fn err<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Graph6(msg.into()))
}

fn decode_order(bytes: &[u8]) -> Result<(usize, usize)> {
    match bytes {
        [] => err("empty input"),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return err("truncated 8-byte size header");
            }
            let n = rest[..6].iter().fold(0usize, |acc, &b| (acc << 6) | (b - BIAS) as usize);
            Ok((n, 8))
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return err("truncated 4-byte size header");
            }
            let n = rest[..3].iter().fold(0usize, |acc, &b| (acc << 6) | (b - BIAS) as usize);
            Ok((n, 4))
        }
        [b, ..] => Ok(((b - BIAS) as usize, 1)),
    }
}

/// Decodes one graph6 line. An optional `>>graph6<<` header is accepted.
pub fn parse_graph6(line: &str) -> Result<Graph> {
    let line = line.trim_end_matches(['\n', '\r']);
    let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
    let bytes = line.as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return err(format!("byte {b:#04x} outside the printable range 63..=126"));
    }
    let (n, header) = decode_order(bytes)?;
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices(n));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let body = &bytes[header..];
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return err(format!(
            "expected {expected} data bytes for n = {n}, found {}",
            body.len()
        ));
    }
    let bit = |k: usize| (body[k / 6] - BIAS) >> (5 - k % 6) & 1 == 1;
    if (bits..expected * 6).any(bit) {
        return err("nonzero padding bits");
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::new(n, edges)
}

pub fn encode_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + BIAS);
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

/// Decodes every non-empty line; errors carry the 1-based line number.
pub fn parse_graph6_stream(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            parse_graph6(l.trim()).map_err(|e| Error::Parse {
                line: i + 1,
                message: e.to_string(),
            })
        })
        .collect()
}
