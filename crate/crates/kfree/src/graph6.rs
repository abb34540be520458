//! graph6 text encoding and DOT export.
//!
//! The encoding follows the published convention exactly: upper-triangle bits
//! x(0,1), x(0,2), x(1,2), x(0,3), ... packed into 6-bit chunks offset by 63,
//! after a one- or four-byte order header. Decoding is strict (exact length,
//! zero padding bits) so that encode/decode round-trips are byte-identical.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Encodes a graph as a graph6 line (without trailing newline).
pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut bytes = Vec::new();
    if n <= 62 {
        bytes.push(63 + n as u8);
    } else {
        // 63 <= n <= 258047: '~' followed by three 6-bit digits, big-endian.
        bytes.push(126);
        bytes.push(63 + ((n >> 12) & 0x3f) as u8);
        bytes.push(63 + ((n >> 6) & 0x3f) as u8);
        bytes.push(63 + (n & 0x3f) as u8);
    }
    let mut chunk = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            chunk = (chunk << 1) | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                bytes.push(63 + chunk);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        bytes.push(63 + (chunk << (6 - filled)));
    }
    String::from_utf8(bytes).expect("graph6 bytes are ASCII")
}

/// Decodes a graph6 line. A leading `>>graph6<<` header is accepted.
pub fn from_graph6(s: &str) -> Result<Graph> {
    let s = s.trim_end_matches(['\n', '\r']);
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Graph6("empty input".into()));
    }
    for &b in bytes {
        if !(63..=126).contains(&b) {
            return Err(Error::Graph6(format!("byte {b} out of graph6 range")));
        }
    }
    let (n, offset) = if bytes[0] == 126 {
        if bytes.len() >= 2 && bytes[1] == 126 {
            if bytes.len() < 8 {
                return Err(Error::Graph6("truncated 8-byte order header".into()));
            }
            let mut n = 0usize;
            for &b in &bytes[2..8] {
                n = (n << 6) | (b - 63) as usize;
            }
            (n, 8)
        } else {
            if bytes.len() < 4 {
                return Err(Error::Graph6("truncated 4-byte order header".into()));
            }
            let mut n = 0usize;
            for &b in &bytes[1..4] {
                n = (n << 6) | (b - 63) as usize;
            }
            (n, 4)
        }
    } else {
        ((bytes[0] - 63) as usize, 1)
    };
    if n > crate::graph::MAX_ORDER {
        return Err(Error::TooLarge(n));
    }
    let nbits = n * (n.saturating_sub(1)) / 2;
    let nbytes = nbits.div_ceil(6);
    if bytes.len() != offset + nbytes {
        return Err(Error::Graph6(format!(
            "expected {} payload bytes for order {n}, got {}",
            nbytes,
            bytes.len() - offset
        )));
    }
    let mut g = Graph::empty(n);
    let mut idx = 0usize;
    'outer: for &b in &bytes[offset..] {
        let chunk = b - 63;
        for k in 0..6 {
            if idx == nbits {
                // remaining padding bits must be zero
                if chunk & ((1 << (6 - k)) - 1) != 0 {
                    return Err(Error::Graph6("nonzero padding bits".into()));
                }
                break 'outer;
            }
            if chunk >> (5 - k) & 1 == 1 {
                let (u, v) = pair_at(idx);
                g.add_edge(u, v);
            }
            idx += 1;
        }
    }
    Ok(g)
}

/// The `idx`-th pair in upper-triangle column-major order:
/// (0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ...
pub fn pair_at(idx: usize) -> (usize, usize) {
    // find v with C(v,2) <= idx < C(v+1,2)
    let mut v = 1usize;
    while (v + 1) * v / 2 <= idx {
        v += 1;
    }
    (idx - v * (v - 1) / 2, v)
}

/// DOT export (undirected). Every vertex is listed so isolated vertices
/// survive the round trip through external tools.
pub fn to_dot(g: &Graph) -> String {
    let mut out = String::from("graph {\n");
    for v in 0..g.order() {
        out.push_str(&format!("  {v};\n"));
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("  {u} -- {v};\n"));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn singleton_is_at_sign() {
        assert_eq!(to_graph6(&Graph::complete(1)), "@");
        assert_eq!(from_graph6("@").unwrap(), Graph::complete(1));
    }

    #[test]
    fn known_five_vertex_encoding() {
        // 5 vertices, edges {02, 04, 13, 34} encodes to "DQc".
        let g = Graph::from_edges(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(to_graph6(&g), "DQc");
        assert_eq!(from_graph6("DQc").unwrap(), g);
    }

    #[test]
    fn header_variants() {
        let g = Graph::cycle_power(70, 1).unwrap();
        let s = to_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(from_graph6(&s).unwrap(), g);
        assert_eq!(from_graph6(">>graph6<<@").unwrap().order(), 1);
    }

    #[test]
    fn strict_decoding() {
        assert!(from_graph6("").is_err());
        assert!(from_graph6("D").is_err()); // missing payload
        assert!(from_graph6("@@").is_err()); // excess payload
        // K_2 is "A_" (single bit 1, padding 00000); nonzero padding rejected
        assert_eq!(to_graph6(&Graph::complete(2)), "A_");
        assert!(from_graph6("A`").is_err());
        assert!(from_graph6("A\t").is_err());
    }

    #[test]
    fn pair_order_matches_convention() {
        assert_eq!(pair_at(0), (0, 1));
        assert_eq!(pair_at(1), (0, 2));
        assert_eq!(pair_at(2), (1, 2));
        assert_eq!(pair_at(3), (0, 3));
        assert_eq!(pair_at(5), (2, 3));
        assert_eq!(pair_at(6), (0, 4));
    }

    #[test]
    fn dot_lists_vertices_and_edges() {
        let g = Graph::from_edges(3, [(0, 1)]).unwrap();
        let dot = to_dot(&g);
        assert!(dot.contains("  2;\n"));
        assert!(dot.contains("  0 -- 1;\n"));
    }
}
