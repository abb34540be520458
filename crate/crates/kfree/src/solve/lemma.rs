//! The lemma-vertex condition: a vertex whose non-neighborhood induces no
//! edge, and the homomorphic decomposition it yields.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Non-neighborhood of `u`: all vertices other than `u` and its neighbors.
fn non_neighborhood(g: &Graph, u: usize) -> VertexSet {
    let mut s = g.vertex_set();
    s.subtract(&g.neighbors(u));
    s.remove(u);
    s
}

/// Whether the non-neighborhood of `u` induces no edge.
pub fn is_lemma_vertex(g: &Graph, u: usize) -> bool {
    let s = non_neighborhood(g, u);
    for v in s.iter() {
        let mut inside = g.neighbors(v);
        inside.intersect_with(&s);
        if !inside.is_empty() {
            return false;
        }
    }
    true
}

/// First vertex (ascending) whose non-neighborhood induces no edge.
pub fn lemma_vertex(g: &Graph) -> Option<usize> {
    (0..g.order()).find(|&u| is_lemma_vertex(g, u))
}

/// Splits `g` at a lemma vertex `u` into the edgeless part induced by the
/// non-neighborhood and `N`, the subgraph induced by the neighbors of `u`.
/// The whole graph is then homomorphic to `K_1 + N` (the independent part,
/// `u` included, collapses onto the single extra vertex).
pub fn decompose_by_lemma(g: &Graph, u: usize) -> Result<(Graph, Graph)> {
    if u >= g.order() || !is_lemma_vertex(g, u) {
        return Err(Error::NotLemmaVertex(u));
    }
    let outside = g.induced(&non_neighborhood(g, u).to_vec());
    debug_assert_eq!(outside.edge_count(), 0);
    let nbhd = g.induced(&g.neighbors(u).to_vec());
    Ok((outside, nbhd))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solve::find_homomorphism;

    #[test]
    fn complete_graph_vertices_qualify() {
        let k5 = Graph::complete(5);
        assert_eq!(lemma_vertex(&k5), Some(0));
    }

    #[test]
    fn c6_has_none() {
        let c6 = Graph::cycle_power(6, 1).unwrap();
        assert_eq!(lemma_vertex(&c6), None);
    }

    #[test]
    fn c5_has_none() {
        // the non-neighborhood of any C_5 vertex is an adjacent pair
        let c5 = Graph::cycle_power(5, 1).unwrap();
        assert_eq!(lemma_vertex(&c5), None);
        // the 4-cycle qualifies: non-neighborhood is the opposite vertex
        let c4 = Graph::cycle_power(4, 1).unwrap();
        assert_eq!(lemma_vertex(&c4), Some(0));
    }

    #[test]
    fn decomposition_shapes() {
        let k33 = Graph::turan(2, 6).unwrap();
        let (outside, nbhd) = decompose_by_lemma(&k33, 0).unwrap();
        assert_eq!(outside.order(), 2);
        assert_eq!(outside.edge_count(), 0);
        assert_eq!(nbhd, Graph::empty(3));

        let k4 = Graph::complete(4);
        let (outside, nbhd) = decompose_by_lemma(&k4, 0).unwrap();
        assert_eq!(outside.order(), 0);
        assert_eq!(nbhd, Graph::complete(3));

        assert!(decompose_by_lemma(&Graph::cycle_power(6, 1).unwrap(), 0).is_err());
    }

    #[test]
    fn whole_graph_maps_to_collapsed_join() {
        let k33 = Graph::turan(2, 6).unwrap();
        let (_, nbhd) = decompose_by_lemma(&k33, 0).unwrap();
        let target = Graph::complete(1).join(&nbhd);
        assert!(find_homomorphism(&k33, &target, 1 << 24).is_found());
    }
}
