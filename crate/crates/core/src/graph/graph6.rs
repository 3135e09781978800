//! graph6 encoding for graphs of order below 63 (single-byte size header).

use super::Graph;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// Largest order representable with the one-byte graph6 header.
pub const GRAPH6_MAX_ORDER: usize = 62;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    Empty,
    /// A byte outside the printable range 63..=126.
    InvalidByte {
        position: usize,
        byte: u8,
    },
    /// Multi-byte size headers (first byte 126) are not supported.
    UnsupportedSize,
    /// The header encodes order zero, which [`Graph`] cannot represent.
    ZeroOrder,
    Truncated {
        expected: usize,
        found: usize,
    },
    TrailingData {
        expected: usize,
        found: usize,
    },
    OrderTooLarge {
        order: usize,
    },
}

impl fmt::Display for Graph6Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Graph6Error::Empty => write!(f, "empty graph6 string"),
            Graph6Error::InvalidByte { position, byte } => {
                write!(f, "byte {byte:#04x} at position {position} is outside the graph6 range [63, 126]")
            }
            Graph6Error::UnsupportedSize => write!(f, "graph6 long-form size headers are not supported"),
            Graph6Error::ZeroOrder => write!(f, "graph6 string encodes the null graph"),
            Graph6Error::Truncated { expected, found } => {
                write!(f, "truncated graph6 payload: expected {expected} bytes, found {found}")
            }
            Graph6Error::TrailingData { expected, found } => {
                write!(f, "graph6 payload too long: expected {expected} bytes, found {found}")
            }
            Graph6Error::OrderTooLarge { order } => {
                write!(f, "order {order} exceeds the graph6 writer cap of {GRAPH6_MAX_ORDER}")
            }
        }
    }
}

impl core::error::Error for Graph6Error {}

/// Encodes `g`. Bits of the upper triangle are taken column by column
/// (`(0,1), (0,2), (1,2), (0,3), …`), packed big-endian into 6-bit groups.
pub fn write_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.order();
    if n > GRAPH6_MAX_ORDER {
        return Err(Graph6Error::OrderTooLarge { order: n });
    }
    let bytes = encode_bytes(n, |i, j| g.has_edge(i, j));
    Ok(bytes.into_iter().map(char::from).collect())
}

/// Encodes the graph on `n` vertices whose adjacency is given by `adj`.
pub(super) fn encode_bytes(n: usize, adj: impl Fn(usize, usize) -> bool) -> Vec<u8> {
    let bits = n * n.saturating_sub(1) / 2;
    let mut out = Vec::with_capacity(1 + bits.div_ceil(6));
    out.push(n as u8 + 63);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | adj(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    out
}

/// Decodes one graph6 string (no trailing newline, no `>>graph6<<` header).
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let bytes = text.as_bytes();
    let (&first, payload) = bytes.split_first().ok_or(Graph6Error::Empty)?;
    for (position, &byte) in bytes.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(Graph6Error::InvalidByte { position, byte });
        }
    }
    if first == 126 {
        return Err(Graph6Error::UnsupportedSize);
    }
    let n = (first - 63) as usize;
    if n == 0 {
        return Err(Graph6Error::ZeroOrder);
    }
    let expected = (n * (n - 1) / 2).div_ceil(6);
    if payload.len() < expected {
        return Err(Graph6Error::Truncated { expected, found: payload.len() });
    }
    if payload.len() > expected {
        return Err(Graph6Error::TrailingData { expected, found: payload.len() });
    }
    let mut g = Graph::empty(n).expect("n <= 62");
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let chunk = payload[k / 6] - 63;
            if chunk >> (5 - k % 6) & 1 == 1 {
                g.insert_edge(i, j);
            }
            k += 1;
        }
    }
    Ok(g)
}
