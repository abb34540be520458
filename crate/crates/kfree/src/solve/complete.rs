//! Deterministic maximal K_q-free completion.

use super::clique::find_clique;
use super::Outcome;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Adds edges to make `g` maximal `K_q`-free: non-edges are scanned once in
/// lexicographic order `(0,1), (0,2), ..., (1,2), ...` and added whenever no
/// `K_q` arises. The minimum degree never decreases. Errors if `g` already
/// contains a `K_q`.
pub fn maximal_completion(g: &Graph, q: usize, budget: u64) -> Result<Graph> {
    if q < 2 {
        return Err(Error::InvalidParameter(format!(
            "maximal completion needs a forbidden clique size >= 2, got {q}"
        )));
    }
    match find_clique(g, q, budget) {
        Outcome::Found(_) => return Err(Error::NotCliqueFree(q)),
        Outcome::OutOfBudget => return Err(Error::OutOfBudget),
        Outcome::Absent => {}
    }
    let n = g.order();
    let mut out = g.clone();
    for u in 0..n {
        for v in (u + 1)..n {
            if out.has_edge(u, v) {
                continue;
            }
            // adding uv creates a K_q iff Γ(u) ∩ Γ(v) holds a (q-2)-clique
            let mut common = out.neighbors(u);
            common.intersect_rows(out.row(v));
            if !creates_clique(&out, &common, q - 2, budget)? {
                out.add_edge(u, v);
            }
        }
    }
    Ok(out)
}

fn creates_clique(g: &Graph, inside: &VertexSet, size: usize, budget: u64) -> Result<bool> {
    if size == 0 {
        return Ok(true);
    }
    if inside.card() < size {
        return Ok(false);
    }
    let sub = g.induced(&inside.to_vec());
    match find_clique(&sub, size, budget) {
        Outcome::Found(_) => Ok(true),
        Outcome::Absent => Ok(false),
        Outcome::OutOfBudget => Err(Error::OutOfBudget),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const B: u64 = 1 << 24;

    #[test]
    fn empty_four_completes_to_star() {
        // the lexicographic scan adds (0,1), (0,2), (0,3) and must then skip
        // every pair inside {1,2,3}: each has the common neighbor 0
        let got = maximal_completion(&Graph::empty(4), 3, B).unwrap();
        assert_eq!(got, Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap());
        assert!(is_maximal_clique_free(&got, 3));
    }

    #[test]
    fn c5_is_already_maximal() {
        let c5 = Graph::cycle_power(5, 1).unwrap();
        assert_eq!(maximal_completion(&c5, 3, B).unwrap(), c5);
    }

    #[test]
    fn k33_is_already_maximal() {
        let k33 = Graph::turan(2, 6).unwrap();
        assert_eq!(maximal_completion(&k33, 3, B).unwrap(), k33);
    }

    #[test]
    fn rejects_input_with_forbidden_clique() {
        assert!(matches!(
            maximal_completion(&Graph::complete(3), 3, B),
            Err(Error::NotCliqueFree(3))
        ));
    }

    #[test]
    fn min_degree_never_decreases() {
        let g = Graph::from_edges(6, [(0, 1), (2, 3)]).unwrap();
        let m = maximal_completion(&g, 4, B).unwrap();
        assert!(m.min_degree() >= g.min_degree());
        assert!(is_maximal_clique_free(&m, 4));
    }

    pub(super) fn is_maximal_clique_free(g: &Graph, q: usize) -> bool {
        if find_clique(g, q, B).is_found() {
            return false;
        }
        for u in 0..g.order() {
            for v in (u + 1)..g.order() {
                if !g.has_edge(u, v) {
                    let mut common = g.neighbors(u);
                    common.intersect_rows(g.row(v));
                    if !creates_clique(g, &common, q - 2, B).unwrap() {
                        return false;
                    }
                }
            }
        }
        true
    }
}
