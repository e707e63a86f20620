//! graph6 codec for graphs of order 1..=64.
//!
//! Layout: a size prefix `N(n)` followed by the upper triangle of the
//! adjacency matrix in column-major order (`x(0,1), x(0,2), x(1,2), x(0,3),
//! ...`), packed six bits per byte, most significant bit first, each byte
//! offset by 63. The last byte is zero-padded. `N(n)` is the single byte
//! `n + 63` for `n <= 62`, and `~` followed by three 6-bit bytes for larger
//! orders. The eight-byte form (`~~`) is only needed beyond 258047 vertices
//! and is rejected.

use super::{Graph, MAX_ORDER};
use crate::error::Graph6Error;

/// Optional header that nauty tools may emit before the first graph.
pub const HEADER: &str = ">>graph6<<";

pub fn encode(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(4 + body_len(n));
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.push(((n >> 12) & 0x3f) as u8 + 63);
        out.push(((n >> 6) & 0x3f) as u8 + 63);
        out.push((n & 0x3f) as u8 + 63);
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
    // Every byte is in 63..=126, so this is ASCII.
    String::from_utf8(out).expect("graph6 output is ASCII")
}

/// Decodes one graph6 word. A leading `>>graph6<<` header and trailing
/// whitespace are ignored.
pub fn decode(text: &str) -> Result<Graph, Graph6Error> {
    let text = text.strip_prefix(HEADER).unwrap_or(text).trim_end();
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    for (offset, &byte) in bytes.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(Graph6Error::ByteOutOfRange { offset, byte });
        }
    }

    let (n, body) = if bytes[0] != 126 {
        ((bytes[0] - 63) as usize, &bytes[1..])
    } else {
        if bytes.len() >= 2 && bytes[1] == 126 {
            // Eight-byte size form: at least 258048 vertices.
            if bytes.len() < 8 {
                return Err(Graph6Error::TruncatedSize);
            }
            let n = bytes[2..8]
                .iter()
                .fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
            return Err(Graph6Error::TooManyVertices(n));
        }
        if bytes.len() < 4 {
            return Err(Graph6Error::TruncatedSize);
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
        (n, &bytes[4..])
    };

    if n == 0 {
        return Err(Graph6Error::ZeroVertices);
    }
    if n > MAX_ORDER {
        return Err(Graph6Error::TooManyVertices(n));
    }
    let expected = body_len(n);
    if body.len() != expected {
        return Err(Graph6Error::InvalidLength {
            expected,
            found: body.len(),
        });
    }

    let mut g = Graph::empty(n).map_err(|_| Graph6Error::TooManyVertices(n))?;
    let mut bit = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = body[bit / 6] - 63;
            if byte >> (5 - bit % 6) & 1 == 1 {
                g.insert_edge(i, j);
            }
            bit += 1;
        }
    }
    let used = bit % 6;
    if used != 0 {
        let last = body[expected - 1] - 63;
        if last & ((1u8 << (6 - used)) - 1) != 0 {
            return Err(Graph6Error::NonZeroPadding);
        }
    }
    Ok(g)
}

fn body_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hand_encoded_vectors() {
        // n = 2: prefix 'A' (2 + 63); one pair x(0,1) -> 100000b = 32, 32 + 63 = '_'.
        assert_eq!(decode("A_").unwrap(), Graph::complete(2).unwrap());
        assert_eq!(decode("A?").unwrap(), Graph::empty(2).unwrap());
        assert_eq!(encode(&Graph::complete(2).unwrap()), "A_");
        assert_eq!(encode(&Graph::empty(1).unwrap()), "@");
        assert_eq!(decode("@").unwrap(), Graph::empty(1).unwrap());
    }

    #[test]
    fn matches_published_example() {
        // Example from the format description: 5 vertices, edges 0-2, 0-4,
        // 1-3, 3-4 encode as "DQc".
        let g = Graph::from_edges(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(encode(&g), "DQc");
        assert_eq!(decode("DQc").unwrap(), g);
    }

    #[test]
    fn complete_graphs() {
        assert_eq!(encode(&Graph::complete(3).unwrap()), "Bw");
        assert_eq!(encode(&Graph::complete(4).unwrap()), "C~");
        assert_eq!(encode(&Graph::complete(5).unwrap()), "D~{");
    }

    #[test]
    fn length_errors() {
        assert_eq!(
            decode("D?"),
            Err(Graph6Error::InvalidLength {
                expected: 2,
                found: 1
            })
        );
        assert_eq!(
            decode("D???"),
            Err(Graph6Error::InvalidLength {
                expected: 2,
                found: 3
            })
        );
        assert_eq!(decode(""), Err(Graph6Error::Empty));
        assert_eq!(decode("~??"), Err(Graph6Error::TruncatedSize));
    }

    #[test]
    fn byte_and_padding_errors() {
        assert_eq!(
            decode("A _"),
            Err(Graph6Error::ByteOutOfRange {
                offset: 1,
                byte: b' '
            })
        );
        // n = 2 uses one bit; '@' = 63 + 1 sets a padding bit.
        assert_eq!(decode("A@"), Err(Graph6Error::NonZeroPadding));
        assert_eq!(decode("?"), Err(Graph6Error::ZeroVertices));
    }

    #[test]
    fn long_form_orders() {
        let g = Graph::complete(64).unwrap();
        let text = encode(&g);
        assert!(text.starts_with("~?@?"));
        assert_eq!(text.len(), 4 + 64 * 63 / 2 / 6);
        assert_eq!(decode(&text).unwrap(), g);

        let g63 = Graph::from_edges(63, [(0, 62), (10, 11)]).unwrap();
        assert_eq!(decode(&encode(&g63)).unwrap(), g63);

        // 65 = 1 * 64 + 1 in long form
        let too_big = "~?@@";
        assert_eq!(decode(too_big), Err(Graph6Error::TooManyVertices(65)));
        assert!(matches!(
            decode("~~??????"),
            Err(Graph6Error::TooManyVertices(_))
        ));
    }

    #[test]
    fn header_and_newline_are_ignored() {
        assert_eq!(decode(">>graph6<<A_\n").unwrap(), Graph::complete(2).unwrap());
    }

    #[test]
    fn long_form_for_small_order_is_accepted() {
        // Non-canonical, but nauty accepts it.
        let g = decode("~??Bw").unwrap();
        assert_eq!(g, Graph::complete(3).unwrap());
    }
}
