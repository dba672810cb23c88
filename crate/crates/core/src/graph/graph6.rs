//! graph6 codec: size prefix, then the upper triangle of the adjacency
//! matrix column by column, packed six bits per byte with offset 63.

use super::{bit, Graph, MAX_VERTICES};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 record")]
    Empty,
    #[error("sparse6 and digraph6 records are not supported")]
    UnsupportedFormat,
    #[error("malformed size prefix")]
    BadLengthPrefix,
    #[error("byte {byte:#04x} at offset {offset} is outside 63..=126")]
    BadCharacter { offset: usize, byte: u8 },
    #[error("expected {expected} data bytes, found {found}")]
    WrongDataLength { expected: usize, found: usize },
    #[error("nonzero padding bits after the last matrix entry")]
    NonzeroPadding,
    #[error("graph has {0} vertices, more than the supported {MAX_VERTICES}")]
    TooManyVertices(usize),
    #[error("graph6 cannot encode the null graph here")]
    NullGraph,
}

const HEADER: &str = ">>graph6<<";

/// Parse one graph6 record. Surrounding whitespace and an optional
/// `>>graph6<<` header are accepted.
pub fn parse_graph6(line: &str) -> Result<Graph, Graph6Error> {
    let line = line.trim();
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    if bytes[0] == b':' || bytes[0] == b'&' || line.starts_with(">>sparse6<<") || line.starts_with(">>digraph6<<") {
        return Err(Graph6Error::UnsupportedFormat);
    }
    if let Some((offset, &byte)) = bytes.iter().enumerate().find(|(_, &b)| !(63..=126).contains(&b)) {
        return Err(Graph6Error::BadCharacter { offset, byte });
    }

    let (n, data) = decode_size(bytes)?;
    if n == 0 {
        return Err(Graph6Error::NullGraph);
    }
    if n > MAX_VERTICES {
        return Err(Graph6Error::TooManyVertices(n));
    }
    let bits = n * (n - 1) / 2;
    let expected = bits.div_ceil(6);
    if data.len() != expected {
        return Err(Graph6Error::WrongDataLength { expected, found: data.len() });
    }

    let mut adj = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = data[k / 6] - 63;
            if byte & (0x20 >> (k % 6)) != 0 {
                adj[i] |= bit(j);
                adj[j] |= bit(i);
            }
            k += 1;
        }
    }
    if bits % 6 != 0 {
        let pad = 6 - bits % 6;
        if (data[expected - 1] - 63) & ((1u8 << pad) - 1) != 0 {
            return Err(Graph6Error::NonzeroPadding);
        }
    }
    Ok(Graph::from_rows(adj))
}

fn decode_size(bytes: &[u8]) -> Result<(usize, &[u8]), Graph6Error> {
    if bytes[0] != 126 {
        return Ok(((bytes[0] - 63) as usize, &bytes[1..]));
    }
    if bytes.len() >= 2 && bytes[1] == 126 {
        // 8-byte form, only for n >= 258048.
        if bytes.len() < 8 {
            return Err(Graph6Error::BadLengthPrefix);
        }
        let n = bytes[2..8].iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        if n < 258_048 {
            return Err(Graph6Error::BadLengthPrefix);
        }
        return Ok((n, &bytes[8..]));
    }
    if bytes.len() < 4 {
        return Err(Graph6Error::BadLengthPrefix);
    }
    let n = bytes[1..4].iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
    if n < 63 {
        return Err(Graph6Error::BadLengthPrefix);
    }
    Ok((n, &bytes[4..]))
}

/// Encode `g` in graph6 for its current labelling, without a header or
/// trailing newline.
pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::with_capacity(4 + n * n / 12 + 1);
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            k += 1;
            if k == 6 {
                out.push(acc + 63);
                acc = 0;
                k = 0;
            }
        }
    }
    if k > 0 {
        out.push((acc << (6 - k)) + 63);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}
