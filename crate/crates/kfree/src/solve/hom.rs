//! Graph homomorphism search: an edge-preserving map from a source into a
//! target, found by backtracking with neighborhood-consistency pruning over
//! the twin-reduced source.

use super::{Budget, Outcome};
use crate::graph::{Graph, VertexSet};

/// Searches for a homomorphism `g -> h`. The source is twin-reduced first
/// (twins are interchangeable for homomorphism existence) and the witness is
/// lifted back through the class map.
pub fn find_homomorphism(g: &Graph, h: &Graph, budget: u64) -> Outcome<Vec<usize>> {
    let (q, class_of) = g.twin_reduce();
    find_homomorphism_unreduced(&q, h, budget).map(|qmap| {
        class_of.iter().map(|&c| qmap[c]).collect()
    })
}

/// Homomorphism search on the source as given, without twin reduction.
pub fn find_homomorphism_unreduced(g: &Graph, h: &Graph, budget: u64) -> Outcome<Vec<usize>> {
    let n = g.order();
    if n == 0 {
        return Outcome::Found(Vec::new());
    }
    if h.order() == 0 {
        return Outcome::Absent;
    }
    // fixed branching order: descending degree, ties by label
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut pos = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut domains: Vec<VertexSet> = (0..n).map(|_| VertexSet::full(h.order())).collect();
    let mut map = vec![usize::MAX; n];
    let mut budget = Budget::new(budget);
    let found = assign(g, h, &order, &pos, 0, &mut map, &mut domains, &mut budget);
    match found {
        Outcome::Found(()) => Outcome::Found(map),
        Outcome::Absent => Outcome::Absent,
        Outcome::OutOfBudget => Outcome::OutOfBudget,
    }
}

#[allow(clippy::too_many_arguments)]
fn assign(
    g: &Graph,
    h: &Graph,
    order: &[usize],
    pos: &[usize],
    i: usize,
    map: &mut Vec<usize>,
    domains: &mut Vec<VertexSet>,
    budget: &mut Budget,
) -> Outcome<()> {
    if i == order.len() {
        return Outcome::Found(());
    }
    if !budget.tick() {
        return Outcome::OutOfBudget;
    }
    let v = order[i];
    for x in domains[v].to_vec() {
        map[v] = x;
        // neighborhood consistency: unassigned neighbors must map into Γ_h(x)
        let mut saved = Vec::new();
        let mut dead = false;
        for w in g.neighbors(v).iter() {
            if pos[w] > i {
                let before = domains[w].clone();
                domains[w].intersect_rows(h.row(x));
                if domains[w].is_empty() {
                    dead = true;
                }
                saved.push((w, before));
                if dead {
                    break;
                }
            }
        }
        if !dead {
            match assign(g, h, order, pos, i + 1, map, domains, budget) {
                Outcome::Absent => {}
                other => return other,
            }
        }
        for (w, before) in saved {
            domains[w] = before;
        }
    }
    map[v] = usize::MAX;
    Outcome::Absent
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{andrasfai, haggkvist, mycielski};

    const B: u64 = 1 << 26;

    fn is_hom(g: &Graph, h: &Graph, map: &[usize]) -> bool {
        map.len() == g.order() && g.edges().all(|(u, v)| h.has_edge(map[u], map[v]))
    }

    #[test]
    fn blow_up_projects() {
        let a2 = andrasfai(2).unwrap();
        let b = a2.blow_up(3).unwrap();
        let map = find_homomorphism(&b, &a2, B).found().unwrap();
        assert!(is_hom(&b, &a2, &map));
    }

    #[test]
    fn andrasfai_chain_is_strict() {
        let a3 = andrasfai(3).unwrap();
        let a2 = andrasfai(2).unwrap();
        assert!(find_homomorphism(&a3, &a2, B).is_absent());
        // downward is fine: A_2 = C_5 maps into A_3
        assert!(find_homomorphism(&a2, &a3, B).is_found());
    }

    #[test]
    fn haggkvist_maps_to_grotzsch() {
        let h1 = haggkvist(1).unwrap();
        let m3 = mycielski(3).unwrap();
        let map = find_homomorphism(&h1, &m3, B).found().unwrap();
        assert!(is_hom(&h1, &m3, &map));
    }

    #[test]
    fn empty_cases() {
        let e = Graph::empty(0);
        assert_eq!(find_homomorphism(&e, &e, B), Outcome::Found(vec![]));
        let k1 = Graph::complete(1);
        assert!(find_homomorphism(&k1, &e, B).is_absent());
        // an edge cannot map into an edgeless target
        let k2 = Graph::complete(2);
        assert!(find_homomorphism(&k2, &Graph::empty(3), B).is_absent());
    }
}
