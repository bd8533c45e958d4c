//! graph6 encoding for graphs with at most 62 vertices.
//!
//! One byte `n + 63` for the order, then the upper triangle of the adjacency
//! matrix in column-major order (`x(0,1); x(0,2), x(1,2); ...`), six bits per
//! byte, each byte offset by 63, last byte zero-padded.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order expressible with the single-byte size form.
pub const MAX_GRAPH6_ORDER: usize = 62;

const HEADER: &str = ">>graph6<<";
const BIAS: u8 = 63;

fn triangle_bits(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Parses one graph6 line. A leading `>>graph6<<` header and trailing
/// whitespace are ignored.
pub fn from_graph6(text: &str) -> Result<Graph> {
    let line = text.trim_end_matches(['\n', '\r', ' ', '\t']);
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    let (&first, body) = bytes
        .split_first()
        .ok_or_else(|| Error::Graph6("empty input".into()))?;
    if !(BIAS..=126).contains(&first) {
        return Err(Error::Graph6(format!("invalid size byte {first:#04x}")));
    }
    if first == 126 {
        return Err(Error::Graph6(format!(
            "multi-byte size form is unsupported (order > {MAX_GRAPH6_ORDER})"
        )));
    }
    let n = (first - BIAS) as usize;
    let bits = triangle_bits(n);
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(Error::Graph6(format!(
            "expected {expected} data bytes for order {n}, found {}",
            body.len()
        )));
    }
    if let Some(&bad) = body.iter().find(|b| !(BIAS..=126).contains(*b)) {
        return Err(Error::Graph6(format!("character {bad:#04x} outside 63..126")));
    }

    let bit = |k: usize| (body[k / 6] - BIAS) >> (5 - k % 6) & 1 == 1;
    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    for pad in bits..expected * 6 {
        if bit(pad) {
            return Err(Error::Graph6("nonzero padding bits".into()));
        }
    }
    Ok(g)
}

/// Encodes a graph as a graph6 line without header or newline.
pub fn to_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > MAX_GRAPH6_ORDER {
        return Err(Error::CapExceeded {
            what: "graph6 order",
            size: n,
            cap: MAX_GRAPH6_ORDER,
        });
    }
    let bits = triangle_bits(n);
    let mut data = vec![0u8; bits.div_ceil(6)];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if g.has_edge(i, j) {
                data[k / 6] |= 1 << (5 - k % 6);
            }
            k += 1;
        }
    }
    let mut out = String::with_capacity(data.len() + 1);
    out.push((n as u8 + BIAS) as char);
    out.extend(data.into_iter().map(|b| (b + BIAS) as char));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_examples() {
        assert_eq!(from_graph6("A_").unwrap(), Graph::complete(2));
        assert_eq!(from_graph6("Bw").unwrap(), Graph::complete(3));
        assert_eq!(from_graph6("Bg").unwrap(), Graph::path(3));
        assert_eq!(from_graph6("@").unwrap(), Graph::empty(1));
        assert_eq!(from_graph6("?").unwrap(), Graph::empty(0));
        assert_eq!(to_graph6(&Graph::complete(2)).unwrap(), "A_");
        assert_eq!(to_graph6(&Graph::empty(1)).unwrap(), "@");
        assert_eq!(to_graph6(&Graph::empty(2)).unwrap(), "A?");
    }

    #[test]
    fn header_and_newline_are_tolerated() {
        assert_eq!(from_graph6(">>graph6<<Bw\n").unwrap(), Graph::complete(3));
    }

    #[test]
    fn malformed_inputs() {
        for bad in ["", "A", "A__", "B\x7f", "Bh", "\x3e", "~?@A"] {
            assert!(matches!(from_graph6(bad), Err(Error::Graph6(_))), "{bad:?}");
        }
        // "Bh": the padding bits of the only data byte are nonzero
        let msg = from_graph6("Bh").unwrap_err().to_string();
        assert!(msg.contains("padding"), "{msg}");
        let msg = from_graph6("~?@A").unwrap_err().to_string();
        assert!(msg.contains("multi-byte"), "{msg}");
    }

    #[test]
    fn oversize_encode_is_rejected() {
        assert!(matches!(
            to_graph6(&Graph::empty(63)),
            Err(Error::CapExceeded { size: 63, .. })
        ));
        let g = Graph::cycle(62);
        assert_eq!(from_graph6(&to_graph6(&g).unwrap()).unwrap(), g);
    }
}
