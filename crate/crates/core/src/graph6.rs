//! graph6 short form (orders 1..=62).
//!
//! Layout: one header byte `n + 63`, then the upper triangle of the
//! adjacency matrix in column order (`x(0,1) x(0,2) x(1,2) x(0,3) ...`),
//! packed big-endian into 6-bit groups, each offset by 63. Padding bits in
//! the final group must be zero.

use thiserror::Error;

use crate::graph::{Graph, MAX_VERTICES};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty input")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is outside the printable graph6 range 63..=126")]
    InvalidByte { offset: usize, byte: u8 },
    #[error("unsupported order at offset {offset}: only 1..={MAX_VERTICES} vertices in short form")]
    UnsupportedOrder { offset: usize },
    #[error("expected {expected} bytes for {n} vertices, input ends at offset {offset}")]
    Truncated { n: usize, expected: usize, offset: usize },
    #[error("trailing data at offset {offset}: expected {expected} bytes for {n} vertices")]
    TrailingData { n: usize, expected: usize, offset: usize },
    #[error("nonzero padding bits in final byte at offset {offset}")]
    NonzeroPadding { offset: usize },
}

impl Graph6Error {
    /// Byte offset the error refers to.
    pub fn offset(&self) -> usize {
        match *self {
            Graph6Error::Empty => 0,
            Graph6Error::InvalidByte { offset, .. }
            | Graph6Error::UnsupportedOrder { offset }
            | Graph6Error::Truncated { offset, .. }
            | Graph6Error::TrailingData { offset, .. }
            | Graph6Error::NonzeroPadding { offset } => offset,
        }
    }
}

fn body_len(n: usize) -> usize {
    (n * (n - 1) / 2).div_ceil(6)
}

pub fn parse_graph6(text: &[u8]) -> Result<Graph, Graph6Error> {
    let (&header, body) = text.split_first().ok_or(Graph6Error::Empty)?;
    if !(63..=126).contains(&header) {
        return Err(Graph6Error::InvalidByte { offset: 0, byte: header });
    }
    let n = (header - 63) as usize;
    // 126 announces the long form (n >= 63).
    if n == 0 || n > MAX_VERTICES {
        return Err(Graph6Error::UnsupportedOrder { offset: 0 });
    }
    let expected = 1 + body_len(n);
    if text.len() < expected {
        return Err(Graph6Error::Truncated { n, expected, offset: text.len() });
    }
    if text.len() > expected {
        return Err(Graph6Error::TrailingData { n, expected, offset: expected });
    }
    let mut g = Graph::empty(n).expect("order checked above");
    let total_bits = n * (n - 1) / 2;
    let mut k = 0;
    for (i, &byte) in body.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(Graph6Error::InvalidByte { offset: i + 1, byte });
        }
        let bits = byte - 63;
        for shift in (0..6).rev() {
            let bit = bits >> shift & 1;
            if k >= total_bits {
                if bit != 0 {
                    return Err(Graph6Error::NonzeroPadding { offset: i + 1 });
                }
            } else if bit == 1 {
                let (u, v) = pair_at(k);
                g.set_edge_unchecked(u, v);
            }
            k += 1;
        }
    }
    Ok(g)
}

/// The `k`-th vertex pair `(u, v)`, `u < v`, in graph6 bit order.
pub(crate) fn pair_at(k: usize) -> (usize, usize) {
    // v is the largest integer with v(v-1)/2 <= k.
    let mut v = (((8 * k + 1) as f64).sqrt() as usize).div_ceil(2);
    while v * (v - 1) / 2 > k {
        v -= 1;
    }
    while (v + 1) * v / 2 <= k {
        v += 1;
    }
    (k - v * (v - 1) / 2, v)
}

pub fn emit_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(1 + body_len(n));
    out.push(n as u8 + 63);
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = acc << 1 | g.has_edge(u, v) as u8;
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
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decodes_known_strings() {
        let k4 = parse_graph6(b"C~").unwrap();
        assert_eq!(k4.n(), 4);
        assert_eq!(k4.edge_count(), 6);

        let k2 = parse_graph6(b"A_").unwrap();
        assert_eq!((k2.n(), k2.edge_count()), (2, 1));
        let co_k2 = parse_graph6(b"A?").unwrap();
        assert_eq!((co_k2.n(), co_k2.edge_count()), (2, 0));

        let k1 = parse_graph6(b"@").unwrap();
        assert_eq!((k1.n(), k1.edge_count()), (1, 0));
    }

    #[test]
    fn encodes_known_graphs() {
        assert_eq!(emit_graph6(&Graph::empty(1).unwrap()), "@");
        let k4 = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(emit_graph6(&k4), "C~");
        // petgraph's reference string for this 5-vertex graph
        let g = Graph::from_edges(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(emit_graph6(&g), "DQc");
    }

    #[test]
    fn reports_errors_with_offsets() {
        assert_eq!(parse_graph6(b""), Err(Graph6Error::Empty));
        assert_eq!(parse_graph6(b"?"), Err(Graph6Error::UnsupportedOrder { offset: 0 }));
        assert_eq!(parse_graph6(b"~"), Err(Graph6Error::UnsupportedOrder { offset: 0 }));
        assert_eq!(
            parse_graph6(b" "),
            Err(Graph6Error::InvalidByte { offset: 0, byte: b' ' })
        );
        assert_eq!(
            parse_graph6(b"C"),
            Err(Graph6Error::Truncated { n: 4, expected: 2, offset: 1 })
        );
        assert_eq!(
            parse_graph6(b"C~~"),
            Err(Graph6Error::TrailingData { n: 4, expected: 2, offset: 2 })
        );
        // n = 2 uses one bit; '@' = 63 + 1 sets the last padding bit.
        assert_eq!(parse_graph6(b"A@"), Err(Graph6Error::NonzeroPadding { offset: 1 }));
        let e = parse_graph6(b"D\x10c").unwrap_err();
        assert_eq!(e.offset(), 1);
    }

    #[test]
    fn pair_order_is_column_major() {
        let pairs: Vec<_> = (0..6).map(pair_at).collect();
        assert_eq!(pairs, vec![(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)]);
        for k in 0..(62 * 61 / 2) {
            let (u, v) = pair_at(k);
            assert!(u < v && v < 62);
            assert_eq!(v * (v - 1) / 2 + u, k);
        }
    }
}
