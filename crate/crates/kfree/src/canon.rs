//! Canonical labeling for small graphs by exact minimum-encoding search.
//!
//! The canonical form of a graph is the minimum, over all vertex
//! permutations, of its packed upper-triangle adjacency string (the same bit
//! order graph6 uses). The search places vertices position by position,
//! prunes any branch whose partial bit string already exceeds the best
//! complete string, and explores only one representative of each set of
//! interchangeable (twin) candidates. This is exact; it is intended for the
//! small orders the enumeration works with.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6;

/// Largest order the canonical-form search accepts.
pub const MAX_CANON_ORDER: usize = 16;

/// Canonical form of a graph: two graphs compare equal here iff they are
/// isomorphic. Ordering is the lexicographic order of the canonical
/// adjacency strings.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CanonicalForm {
    n: usize,
    /// Upper-triangle bits of the canonical labeling; string bit `k` is
    /// stored at position `total-1-k` so numeric order equals string order.
    bits: u128,
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        self.n
    }

    /// Rebuilds the canonical representative graph.
    pub fn to_graph(&self) -> Graph {
        let total = self.n * (self.n.saturating_sub(1)) / 2;
        let mut g = Graph::empty(self.n);
        for k in 0..total {
            if self.bits >> (total - 1 - k) & 1 == 1 {
                let (u, v) = graph6::pair_at(k);
                g.add_edge(u, v);
            }
        }
        g
    }

    /// graph6 string of the canonical representative.
    pub fn graph6(&self) -> String {
        graph6::to_graph6(&self.to_graph())
    }

    pub(crate) fn raw(&self) -> (usize, u128) {
        (self.n, self.bits)
    }
}

/// Computes the canonical form. Errors for graphs above [`MAX_CANON_ORDER`].
pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    let n = g.order();
    if n > MAX_CANON_ORDER {
        return Err(Error::InvalidParameter(format!(
            "canonical form supports order <= {MAX_CANON_ORDER}, got {n}"
        )));
    }
    if n <= 1 {
        return Ok(CanonicalForm { n, bits: 0 });
    }
    let rows: Vec<u16> = (0..n)
        .map(|u| (0..n).fold(0u16, |m, v| m | ((g.has_edge(u, v) as u16) << v)))
        .collect();
    let mut search = Search {
        n,
        rows: &rows,
        twin: twin_pairs(&rows, n),
        total: n * (n - 1) / 2,
        best: encode_identity(&rows, n),
        placed: Vec::with_capacity(n),
    };
    search.descend(0, 0, 0);
    Ok(CanonicalForm {
        n,
        bits: search.best,
    })
}

/// Exact isomorphism test via canonical forms.
pub fn is_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    if a.order() != b.order() || a.edge_count() != b.edge_count() {
        return Ok(false);
    }
    let mut da: Vec<usize> = (0..a.order()).map(|u| a.degree(u)).collect();
    let mut db: Vec<usize> = (0..b.order()).map(|u| b.degree(u)).collect();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}

fn encode_identity(rows: &[u16], n: usize) -> u128 {
    let mut bits = 0u128;
    for v in 1..n {
        for u in 0..v {
            bits = (bits << 1) | (rows[u] >> v & 1) as u128;
        }
    }
    bits
}

fn twin_pairs(rows: &[u16], n: usize) -> Vec<u16> {
    // twin[u] has bit v set when swapping u and v is an automorphism
    let mut twin = vec![0u16; n];
    for u in 0..n {
        for v in (u + 1)..n {
            let off = !((1u16 << u) | (1u16 << v));
            if rows[u] & off == rows[v] & off {
                twin[u] |= 1 << v;
                twin[v] |= 1 << u;
            }
        }
    }
    twin
}

struct Search<'a> {
    n: usize,
    rows: &'a [u16],
    twin: Vec<u16>,
    total: usize,
    best: u128,
    placed: Vec<usize>,
}

impl Search<'_> {
    /// Extends a partial placement occupying `level` positions whose bits so
    /// far are `prefix` (occupying the top `prefix_len` string positions).
    fn descend(&mut self, level: usize, prefix: u128, prefix_len: usize) {
        if level == self.n {
            if prefix < self.best {
                self.best = prefix;
            }
            return;
        }
        // Adjacency block this level contributes: `level` bits, one per
        // already-placed vertex, in placement order.
        let used: u16 = self.placed.iter().fold(0, |m, &v| m | (1 << v));
        let mut cands: Vec<(u16, usize)> = (0..self.n)
            .filter(|v| used >> v & 1 == 0)
            .map(|v| {
                let mut block = 0u16;
                for (i, &p) in self.placed.iter().enumerate() {
                    block |= ((self.rows[p] >> v & 1) as u16) << (level - 1 - i);
                }
                (block, v)
            })
            .collect();
        cands.sort_unstable();
        let new_len = prefix_len + level;
        let mut tried: Vec<(u16, usize)> = Vec::with_capacity(cands.len());
        for (block, v) in cands {
            if tried
                .iter()
                .any(|&(b, u)| b == block && self.twin[u] >> v & 1 == 1)
            {
                continue; // interchangeable with an already-tried candidate
            }
            let new_prefix = (prefix << level) | block as u128;
            // compare against the same-length prefix of the best string
            if new_len > 0 && new_prefix > self.best >> (self.total - new_len) {
                break; // candidates are sorted; the rest only get bigger
            }
            tried.push((block, v));
            self.placed.push(v);
            self.descend(level + 1, new_prefix, new_len);
            self.placed.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn petersen() -> Graph {
        // outer 5-cycle, inner 5-cycle with step 2, spokes
        Graph::from_edges(
            10,
            [
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 0),
                (5, 7),
                (7, 9),
                (9, 6),
                (6, 8),
                (8, 5),
                (0, 5),
                (1, 6),
                (2, 7),
                (3, 8),
                (4, 9),
            ],
        )
        .unwrap()
    }

    #[test]
    fn permutation_invariance() {
        let g = petersen();
        let perm: Vec<usize> = vec![3, 9, 1, 0, 7, 2, 8, 4, 6, 5];
        let h = g.permute(&perm);
        assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
        assert!(is_isomorphic(&g, &h).unwrap());
    }

    #[test]
    fn distinguishes_non_isomorphic() {
        let p4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(!is_isomorphic(&p4, &star).unwrap());
    }

    #[test]
    fn c5_is_self_complementary() {
        let c5 = Graph::cycle_power(5, 1).unwrap();
        assert!(is_isomorphic(&c5, &c5.complement()).unwrap());
    }

    #[test]
    fn canonical_representative_is_isomorphic() {
        let g = petersen();
        let canon = canonical_form(&g).unwrap();
        let rep = canon.to_graph();
        assert!(is_isomorphic(&g, &rep).unwrap());
        assert_eq!(canonical_form(&rep).unwrap(), canon);
    }

    #[test]
    fn extreme_graphs_are_fast() {
        // all-twin graphs exercise the interchangeability pruning
        let e = Graph::empty(12);
        let k = Graph::complete(12);
        assert_eq!(canonical_form(&e).unwrap().raw().1, 0);
        let kb = canonical_form(&k).unwrap();
        assert_eq!(kb.raw().1, (1u128 << 66) - 1);
        assert!(canonical_form(&Graph::empty(17)).is_err());
    }
}
