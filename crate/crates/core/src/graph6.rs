//! graph6 interchange, bit-compatible with nauty's `showg`/`geng` format.
//!
//! Layout: the vertex count `N(n)` (one byte `n + 63` for `n <= 62`, or `~`
//! followed by three 6-bit groups), then the upper triangle of the adjacency
//! matrix in column order `(0,1), (0,2), (1,2), (0,3), ...`, packed six bits
//! per byte, big-endian, zero-padded, every byte offset by 63.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

const HEADER: &str = ">>graph6<<";

fn err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        reason: reason.into(),
    }
}

/// Decodes one graph6 line. Surrounding whitespace and an optional
/// `>>graph6<<` prefix are accepted; offsets in errors refer to the input.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let trimmed_start = text.len() - text.trim_start().len();
    let mut body = text.trim();
    let mut base = trimmed_start;
    if let Some(rest) = body.strip_prefix(HEADER) {
        body = rest;
        base += HEADER.len();
    }
    let bytes = body.as_bytes();
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(err(
                base + i,
                format!("byte 0x{b:02x} is outside the graph6 range 63..=126"),
            ));
        }
    }
    let Some(&first) = bytes.first() else {
        return Err(err(base, "empty input"));
    };

    let (n, header_len) = if first != 126 {
        ((first - 63) as usize, 1)
    } else {
        if bytes.get(1) == Some(&126) {
            return Err(err(
                base + 1,
                format!("8-byte size header encodes more than {MAX_VERTICES} vertices"),
            ));
        }
        if bytes.len() < 4 {
            return Err(err(base + bytes.len(), "truncated 4-byte size header"));
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        (n, 4)
    };
    if n > MAX_VERTICES {
        return Err(err(
            base,
            format!("graph on {n} vertices exceeds the {MAX_VERTICES}-vertex limit"),
        ));
    }

    let nbits = n * n.saturating_sub(1) / 2;
    let want = nbits.div_ceil(6);
    let data = &bytes[header_len..];
    if data.len() != want {
        return Err(err(
            base + header_len + data.len().min(want),
            format!(
                "expected {want} data bytes for n = {n}, found {}",
                data.len()
            ),
        ));
    }

    let mut g = Graph::empty(n);
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = data[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i + 1, j + 1)?;
            }
            k += 1;
        }
    }
    if nbits % 6 != 0 {
        let last = data[want - 1] - 63;
        let pad = 6 - nbits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(err(
                base + header_len + want - 1,
                "nonzero padding bits after the adjacency triangle",
            ));
        }
    }
    Ok(g)
}

/// Canonical graph6 encoding (no `>>graph6<<` header, no newline).
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(4 + (n * n) / 12 + 1);
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
    let rows = g.rows();
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for row in &rows[..j] {
            acc = (acc << 1) | (row >> j & 1) as u8;
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
    use crate::graph::complete_graph;
    use proptest::prelude::*;

    #[test]
    fn small_known_strings() {
        let k2 = parse_graph6("A_").unwrap();
        assert_eq!((k2.n(), k2.edges()), (2, vec![(1, 2)]));
        assert_eq!(encode_graph6(&k2), "A_");
        let e0 = parse_graph6("?").unwrap();
        assert_eq!(e0.n(), 0);
        assert_eq!(encode_graph6(&Graph::empty(0)), "?");
        assert_eq!(encode_graph6(&Graph::empty(1)), "@");
        // the 5-vertex example shipped with petgraph's graph6 tests
        let g = Graph::from_edges(5, &[(1, 3), (1, 5), (2, 4), (4, 5)]).unwrap();
        assert_eq!(encode_graph6(&g), "DQc");
        assert_eq!(parse_graph6("DQc").unwrap(), g);
        assert_eq!(encode_graph6(&complete_graph(4).unwrap()), "C~");
    }

    #[test]
    fn header_and_whitespace() {
        assert_eq!(parse_graph6(">>graph6<<A_\n").unwrap().edge_count(), 1);
        assert_eq!(parse_graph6("  A_ ").unwrap().edge_count(), 1);
    }

    #[test]
    fn extended_header_round_trip() {
        let mut g = Graph::empty(63);
        g.add_edge(1, 63).unwrap();
        g.add_edge(30, 31).unwrap();
        let s = encode_graph6(&g);
        assert!(s.starts_with("~??~"));
        assert_eq!(parse_graph6(&s).unwrap(), g);
        let k64 = complete_graph(64).unwrap();
        assert_eq!(parse_graph6(&encode_graph6(&k64)).unwrap(), k64);
    }

    #[test]
    fn errors_name_offsets() {
        match parse_graph6("A\u{7}") {
            Err(Error::Graph6 { offset, .. }) => assert_eq!(offset, 1),
            other => panic!("unexpected {other:?}"),
        }
        // K_2 needs one data byte
        assert!(matches!(
            parse_graph6("A"),
            Err(Error::Graph6 { offset: 1, .. })
        ));
        assert!(matches!(parse_graph6("A__"), Err(Error::Graph6 { .. })));
        // 'A' then 0b100001: trailing padding bit set
        assert!(matches!(
            parse_graph6("A`"),
            Err(Error::Graph6 { offset: 1, .. })
        ));
        assert!(matches!(
            parse_graph6(""),
            Err(Error::Graph6 { offset: 0, .. })
        ));
        assert!(matches!(parse_graph6("~?A"), Err(Error::Graph6 { .. })));
        assert!(matches!(parse_graph6("~?AA"), Err(Error::Graph6 { .. })));
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (0usize..=20).prop_flat_map(|n| {
            let slots = n * n.saturating_sub(1) / 2;
            proptest::collection::vec(any::<bool>(), slots).prop_map(move |bits| {
                let mut g = Graph::empty(n);
                let mut k = 0;
                for u in 1..=n {
                    for v in u + 1..=n {
                        if bits[k] {
                            g.add_edge(u, v).unwrap();
                        }
                        k += 1;
                    }
                }
                g
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(10_000))]
        #[test]
        fn parse_inverts_encode(g in arb_graph()) {
            let s = encode_graph6(&g);
            let back = parse_graph6(&s).unwrap();
            prop_assert_eq!(&back, &g);
            prop_assert_eq!(encode_graph6(&back), s);
        }
    }
}
