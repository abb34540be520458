//! Subgraph embedding: an injective edge-preserving map of a pattern into a
//! host (subgraph containment, not induced).

use super::{Budget, Outcome};
use crate::graph::{Graph, VertexSet};

/// Searches for an embedding of `pattern` into `g`. Pattern vertices are
/// assigned in descending-degree order (ties by label); host candidates are
/// tried ascending, so the witness is reproducible.
pub fn contains_subgraph(g: &Graph, pattern: &Graph, budget: u64) -> Outcome<Vec<usize>> {
    let np = pattern.order();
    if np > g.order() {
        return Outcome::Absent;
    }
    if np == 0 {
        return Outcome::Found(Vec::new());
    }
    let mut order: Vec<usize> = (0..np).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(pattern.degree(v)), v));
    let mut pos = vec![0usize; np];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    // initial domains: host vertices of sufficient degree
    let mut domains: Vec<VertexSet> = (0..np)
        .map(|v| {
            let mut d = VertexSet::empty(g.order());
            for x in 0..g.order() {
                if g.degree(x) >= pattern.degree(v) {
                    d.insert(x);
                }
            }
            d
        })
        .collect();
    let mut map = vec![usize::MAX; np];
    let mut budget = Budget::new(budget);
    match place(g, pattern, &order, &pos, 0, &mut map, &mut domains, &mut budget) {
        Outcome::Found(()) => Outcome::Found(map),
        Outcome::Absent => Outcome::Absent,
        Outcome::OutOfBudget => Outcome::OutOfBudget,
    }
}

#[allow(clippy::too_many_arguments)]
fn place(
    g: &Graph,
    pattern: &Graph,
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
        let mut saved = Vec::new();
        let mut dead = false;
        for w in 0..pattern.order() {
            if pos[w] > i {
                let before = domains[w].clone();
                let mut dw = before.clone();
                dw.remove(x); // injectivity
                if pattern.has_edge(v, w) {
                    dw.intersect_rows(g.row(x));
                }
                if dw.is_empty() {
                    dead = true;
                }
                domains[w] = dw;
                saved.push((w, before));
                if dead {
                    break;
                }
            }
        }
        if !dead {
            match place(g, pattern, order, pos, i + 1, map, domains, budget) {
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
    use crate::generators::{haggkvist, mycielski};

    const B: u64 = 1 << 26;

    fn is_embedding(g: &Graph, pattern: &Graph, map: &[usize]) -> bool {
        let mut seen = vec![false; g.order()];
        for &x in map {
            if seen[x] {
                return false;
            }
            seen[x] = true;
        }
        pattern.edges().all(|(u, v)| g.has_edge(map[u], map[v]))
    }

    #[test]
    fn c5_has_no_triangle() {
        let c5 = Graph::cycle_power(5, 1).unwrap();
        assert!(contains_subgraph(&c5, &Graph::complete(3), B).is_absent());
        assert!(contains_subgraph(&c5, &Graph::complete(2), B).is_found());
    }

    #[test]
    fn grotzsch_in_haggkvist() {
        let h1 = haggkvist(1).unwrap();
        let m3 = mycielski(3).unwrap();
        let map = contains_subgraph(&h1, &m3, B).found().unwrap();
        assert!(is_embedding(&h1, &m3, &map));
    }

    #[test]
    fn pattern_larger_than_host() {
        let g = Graph::complete(3);
        assert!(contains_subgraph(&g, &Graph::complete(4), B).is_absent());
        assert_eq!(contains_subgraph(&g, &Graph::empty(0), B), Outcome::Found(vec![]));
    }

    #[test]
    fn non_induced_containment() {
        // P_3 embeds into K_3 even though K_3 has the extra edge
        let p3 = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert!(contains_subgraph(&Graph::complete(3), &p3, B).is_found());
    }
}
