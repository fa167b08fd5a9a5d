//! graph6 short form (`n <= 62`): one byte `n + 63`, then the upper-triangle
//! adjacency bits in column order, six bits per byte, each byte offset by 63.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest vertex count the short form can express.
pub const GRAPH6_MAX_N: usize = 62;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("graph6 long form (n >= 63) is not supported")]
    LongForm,
    #[error("byte {byte:#04x} at offset {offset} is outside the printable range 63..=126")]
    BadCharacter { offset: usize, byte: u8 },
    #[error("expected {expected} bytes for n = {n}, found {found}")]
    WrongLength {
        n: usize,
        expected: usize,
        found: usize,
    },
    #[error("padding bits in the last byte are not zero")]
    NonZeroPadding,
}

/// One line of a corpus file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Graph6Record {
    pub text: String,
    pub source: String,
    pub line: usize,
}

fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

pub fn parse_graph6(text: &str) -> std::result::Result<Graph, Graph6Error> {
    let bytes = text.as_bytes();
    let (&first, body) = bytes.split_first().ok_or(Graph6Error::Empty)?;
    for (offset, &byte) in bytes.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(Graph6Error::BadCharacter { offset, byte });
        }
    }
    if first == 126 {
        return Err(Graph6Error::LongForm);
    }
    let n = (first - 63) as usize;
    let pairs = pair_count(n);
    let expected = pairs.div_ceil(6);
    if body.len() != expected {
        return Err(Graph6Error::WrongLength {
            n,
            expected,
            found: body.len(),
        });
    }
    let mut g = Graph::empty(n).expect("n <= 62");
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    if pairs % 6 != 0 {
        let last = body[expected - 1] - 63;
        let unused = 6 - pairs % 6;
        if last & ((1 << unused) - 1) != 0 {
            return Err(Graph6Error::NonZeroPadding);
        }
    }
    Ok(g)
}

pub fn to_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > GRAPH6_MAX_N {
        return Err(Error::TooManyVertices {
            n,
            max: GRAPH6_MAX_N,
        });
    }
    let mut out = String::with_capacity(1 + pair_count(n).div_ceil(6));
    out.push((n as u8 + 63) as char);
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            k += 1;
            if k == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                k = 0;
            }
        }
    }
    if k > 0 {
        out.push(((acc << (6 - k)) + 63) as char);
    }
    Ok(out)
}
