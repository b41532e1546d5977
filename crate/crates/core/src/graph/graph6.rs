use super::Graph;
use crate::error::{GraphError, Result};

const HEADER: &str = ">>graph6<<";

fn malformed(msg: impl Into<String>) -> GraphError {
    GraphError::Graph6(msg.into())
}

/// Encodes `g` in graph6: the size prefix `N(n)` followed by the upper
/// triangle of the adjacency matrix, column by column, six bits per byte.
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out: Vec<u8> = Vec::with_capacity(8 + (n * n) / 12);
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    } else {
        out.extend_from_slice(&[126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }

    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
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
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Decodes one graph6 string. A leading `>>graph6<<` header and surrounding
/// whitespace are accepted; padding bits must be zero.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.trim();
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(malformed("empty input"));
    }
    if let Some(pos) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(malformed(format!(
            "byte {:#04x} at offset {pos} is outside the graph6 range",
            bytes[pos]
        )));
    }

    let (n, body) = match bytes {
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(malformed("truncated 8-byte size prefix"));
            }
            (decode_size(&rest[..6]), &rest[6..])
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(malformed("truncated 4-byte size prefix"));
            }
            (decode_size(&rest[..3]), &rest[3..])
        }
        [first, rest @ ..] => ((*first - 63) as u64, rest),
        [] => unreachable!(),
    };
    let n = usize::try_from(n).map_err(|_| malformed("order does not fit in memory"))?;
    let mut g = Graph::empty(n)?;

    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(malformed(format!(
            "expected {expected} data bytes for order {n}, found {}",
            body.len()
        )));
    }

    let mut bit = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[bit / 6] - 63;
            if byte >> (5 - bit % 6) & 1 == 1 {
                g.set_edge(i, j);
            }
            bit += 1;
        }
    }
    if bits % 6 != 0 {
        let last = body[expected - 1] - 63;
        if last & ((1u8 << (6 - bits % 6)) - 1) != 0 {
            return Err(malformed("nonzero padding bits"));
        }
    }
    Ok(g)
}

fn decode_size(digits: &[u8]) -> u64 {
    digits
        .iter()
        .fold(0u64, |acc, &b| acc << 6 | (b - 63) as u64)
}
