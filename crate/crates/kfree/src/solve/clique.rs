//! Clique search over packed candidate sets.

use super::{Budget, Outcome};
use crate::graph::{Graph, VertexSet};

/// Finds a clique on exactly `s` vertices, returning the lexicographically
/// least witness under the ascending branching order, or `Absent`.
pub fn find_clique(g: &Graph, s: usize, budget: u64) -> Outcome<Vec<usize>> {
    if s == 0 {
        return Outcome::Found(Vec::new());
    }
    if s > g.order() {
        return Outcome::Absent;
    }
    let mut budget = Budget::new(budget);
    let mut cur = Vec::with_capacity(s);
    extend(g, s, &g.vertex_set(), &mut cur, &mut budget)
}

fn extend(
    g: &Graph,
    s: usize,
    cands: &VertexSet,
    cur: &mut Vec<usize>,
    budget: &mut Budget,
) -> Outcome<Vec<usize>> {
    if cur.len() == s {
        return Outcome::Found(cur.clone());
    }
    let need = s - cur.len();
    if cands.card() < need {
        return Outcome::Absent;
    }
    for v in cands.to_vec() {
        if !budget.tick() {
            return Outcome::OutOfBudget;
        }
        let mut next = cands.clone();
        next.intersect_rows(g.row(v));
        next.clear_through(v);
        cur.push(v);
        match extend(g, s, &next, cur, budget) {
            Outcome::Absent => {}
            other => return other,
        }
        cur.pop();
    }
    Outcome::Absent
}

/// Clique number with a witness maximum clique (the lexicographically least
/// of its size).
pub fn max_clique(g: &Graph, budget: u64) -> Outcome<Vec<usize>> {
    let mut best = Vec::new();
    for s in 1..=g.order() {
        match find_clique(g, s, budget) {
            Outcome::Found(c) => best = c,
            Outcome::Absent => break,
            Outcome::OutOfBudget => return Outcome::OutOfBudget,
        }
    }
    Outcome::Found(best)
}

/// ω(G).
pub fn clique_number(g: &Graph, budget: u64) -> Outcome<usize> {
    max_clique(g, budget).map(|c| c.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn turan_is_clique_free() {
        let t = Graph::turan(3, 9).unwrap();
        assert!(find_clique(&t, 4, 1 << 20).is_absent());
        assert_eq!(find_clique(&t, 3, 1 << 20).found().unwrap().len(), 3);
    }

    #[test]
    fn complete_clique_is_least() {
        let k5 = Graph::complete(5);
        assert_eq!(find_clique(&k5, 5, 1 << 20).found().unwrap(), vec![0, 1, 2, 3, 4]);
        assert_eq!(find_clique(&k5, 3, 1 << 20).found().unwrap(), vec![0, 1, 2]);
        assert!(find_clique(&k5, 6, 1 << 20).is_absent());
    }

    #[test]
    fn c5_has_no_triangle() {
        let c5 = Graph::cycle_power(5, 1).unwrap();
        assert!(find_clique(&c5, 3, 1 << 20).is_absent());
        assert_eq!(clique_number(&c5, 1 << 20).found().unwrap(), 2);
    }

    #[test]
    fn zero_and_budget() {
        let g = Graph::complete(30);
        assert_eq!(find_clique(&g, 0, 10), Outcome::Found(vec![]));
        assert_eq!(clique_number(&Graph::empty(0), 10).found().unwrap(), 0);
        assert!(matches!(find_clique(&g, 25, 3), Outcome::OutOfBudget));
    }
}
