//! graph6 encoding, short form (n <= 62).
//!
//! Header byte is n + 63; adjacency bits follow in column-major
//! upper-triangle order, packed big-endian into 6-bit chunks, each chunk
//! offset by 63, zero-padded to a 6-bit boundary.

use crate::error::{Error, Result};
use crate::graph::Graph;

const OFFSET: u8 = 63;

pub fn write_graph6(g: &Graph) -> Vec<u8> {
    let n = g.n();
    assert!(n <= 62, "long-form graph6 not supported");
    let mut out = vec![OFFSET + n as u8];
    let mut chunk = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            chunk <<= 1;
            if g.has_edge(i, j) {
                chunk |= 1;
            }
            filled += 1;
            if filled == 6 {
                out.push(OFFSET + chunk);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(OFFSET + (chunk << (6 - filled)));
    }
    out
}

pub fn parse_graph6(bytes: &[u8]) -> Result<Graph> {
    let err = |offset: usize, reason: &str| Error::Graph6 { offset, reason: reason.into() };
    let &header = bytes.first().ok_or_else(|| err(0, "empty input"))?;
    if header == b'~' {
        return Err(err(0, "long-form header not supported (n > 62)"));
    }
    if !(OFFSET..=OFFSET + 62).contains(&header) {
        return Err(err(0, "header byte out of range"));
    }
    let n = (header - OFFSET) as usize;
    let nbits = n * n.saturating_sub(1) / 2;
    let need = nbits.div_ceil(6);
    if bytes.len() < 1 + need {
        return Err(err(bytes.len(), "truncated bit stream"));
    }
    if bytes.len() > 1 + need {
        return Err(err(1 + need, "trailing bytes after adjacency data"));
    }
    let mut edges = Vec::new();
    let mut bit = 0usize;
    'outer: for j in 1..n {
        for i in 0..j {
            let byte = bytes[1 + bit / 6];
            if !(OFFSET..=OFFSET + 63).contains(&byte) {
                return Err(err(1 + bit / 6, "data byte out of range"));
            }
            let v = byte - OFFSET;
            if v >> (5 - bit % 6) & 1 == 1 {
                edges.push((i, j));
            }
            bit += 1;
            if bit == nbits {
                break 'outer;
            }
        }
    }
    Ok(Graph::from_edges(n, &edges))
}

/// Parse one graph per line, reporting parse failures with line numbers.
pub fn parse_lines(input: &str) -> Vec<(usize, Result<Graph>)> {
    input
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| (i + 1, parse_graph6(l.trim().as_bytes())))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use proptest::prelude::*;

    #[test]
    fn known_encodings() {
        // n = 0
        let g = parse_graph6(b"?").unwrap();
        assert_eq!(g.n(), 0);
        assert_eq!(write_graph6(&g), b"?");

        // 5-vertex graph from the format description
        let g = parse_graph6(b"D?{").unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(write_graph6(&g), b"D?{");

        // K4 round trip
        let k4 = Graph::complete(4);
        assert_eq!(parse_graph6(&write_graph6(&k4)).unwrap(), k4);
        assert_eq!(write_graph6(&k4), b"C~");
    }

    #[test]
    fn malformed_inputs() {
        assert!(matches!(parse_graph6(b""), Err(crate::Error::Graph6 { offset: 0, .. })));
        assert!(matches!(parse_graph6(b"~~~"), Err(crate::Error::Graph6 { offset: 0, .. })));
        // K4 header with truncated data
        assert!(parse_graph6(b"C").is_err());
        // data byte below offset
        assert!(parse_graph6(b"C ").is_err());
        // trailing junk
        assert!(parse_graph6(b"C~~").is_err());
        // header below offset
        assert!(parse_graph6(&[10]).is_err());
    }

    proptest! {
        #[test]
        fn round_trip(n in 0usize..=20, seed in any::<u64>()) {
            use rand::{Rng, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let mut edges = Vec::new();
            for i in 0..n {
                for j in (i + 1)..n {
                    if rng.gen_bool(0.5) {
                        edges.push((i, j));
                    }
                }
            }
            let g = Graph::from_edges(n, &edges);
            let enc = write_graph6(&g);
            prop_assert_eq!(&parse_graph6(&enc).unwrap(), &g);
            prop_assert_eq!(write_graph6(&parse_graph6(&enc).unwrap()), enc);
        }
    }
}
