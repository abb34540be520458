//! Exact k-colorability and chromatic number.
//!
//! The colorability search colors vertices in ascending label order with the
//! standard palette symmetry breaking: a vertex may only open color `c` when
//! colors `0..c` are already in use. Forward checking on full-palette domains
//! prunes dead branches without changing which coloring is found first, so
//! witnesses stay reproducible.
//!
//! `chromatic_number` runs the pipeline: twin reduction, join decomposition
//! (chromatic numbers add across join factors), then branch and bound per
//! factor between a clique lower bound and a greedy upper bound.

use super::clique::clique_number;
use super::{Budget, Outcome};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Searches for a proper coloring with at most `c` colors.
pub fn is_k_colorable(g: &Graph, c: usize, budget: u64) -> Outcome<Vec<u32>> {
    let n = g.order();
    if n == 0 {
        return Outcome::Found(Vec::new());
    }
    if c == 0 {
        return Outcome::Absent;
    }
    let c = c.min(n).min(64);
    let full: u64 = if c == 64 { !0 } else { (1 << c) - 1 };
    let mut colors = vec![u32::MAX; n];
    let mut domains = vec![full; n];
    let mut budget = Budget::new(budget);
    match color_rec(g, c, 0, 0, &mut colors, &mut domains, &mut budget) {
        Outcome::Found(()) => Outcome::Found(colors),
        Outcome::Absent => Outcome::Absent,
        Outcome::OutOfBudget => Outcome::OutOfBudget,
    }
}

fn color_rec(
    g: &Graph,
    c: usize,
    v: usize,
    max_used: usize,
    colors: &mut Vec<u32>,
    domains: &mut Vec<u64>,
    budget: &mut Budget,
) -> Outcome<()> {
    let n = g.order();
    if v == n {
        return Outcome::Found(());
    }
    if !budget.tick() {
        return Outcome::OutOfBudget;
    }
    // colors 0..=max_used plus one fresh color, capped by the palette
    let cap = (max_used + 2).min(c);
    let mut avail = domains[v] & ((1u64 << cap) - 1);
    while avail != 0 {
        let x = avail.trailing_zeros() as usize;
        avail &= avail - 1;
        colors[v] = x as u32;
        let bit = 1u64 << x;
        let mut touched = Vec::new();
        let mut dead = false;
        for w in g.neighbors(v).iter() {
            if w > v && domains[w] & bit != 0 {
                domains[w] &= !bit;
                touched.push(w);
                if domains[w] == 0 {
                    dead = true;
                    break;
                }
            }
        }
        if !dead {
            match color_rec(g, c, v + 1, max_used.max(x), colors, domains, budget) {
                Outcome::Absent => {}
                other => return other,
            }
        }
        for w in touched {
            domains[w] |= bit;
        }
    }
    colors[v] = u32::MAX;
    Outcome::Absent
}

/// Greedy coloring in ascending label order; an upper bound for χ.
pub fn greedy_coloring(g: &Graph) -> Vec<u32> {
    let n = g.order();
    let mut colors = vec![0u32; n];
    let mut used = vec![false; n + 1];
    for v in 0..n {
        let nbrs = g.neighbors(v);
        for w in nbrs.iter() {
            if w < v {
                used[colors[w] as usize] = true;
            }
        }
        colors[v] = (0..).find(|&c| !used[c as usize]).unwrap();
        for w in nbrs.iter() {
            if w < v {
                used[colors[w] as usize] = false;
            }
        }
    }
    colors
}

fn palette_size(colors: &[u32]) -> usize {
    colors.iter().map(|&c| c as usize + 1).max().unwrap_or(0)
}

/// Exact chromatic number with a witness coloring, via twin reduction and
/// join decomposition. Errors on the empty graph and on budget exhaustion.
pub fn chromatic_number(g: &Graph, budget: u64) -> Result<(usize, Vec<u32>)> {
    if g.order() == 0 {
        return Err(Error::EmptyGraph);
    }
    let (q, class_of) = g.twin_reduce();
    let parts = q.join_decompose();
    let mut q_colors = vec![0u32; q.order()];
    let mut offset = 0usize;
    for (verts, part) in &parts {
        let (chi, part_colors) = chromatic_core(part, budget)?;
        for (i, &v) in verts.iter().enumerate() {
            q_colors[v] = part_colors[i] + offset as u32;
        }
        offset += chi;
    }
    let colors: Vec<u32> = class_of.iter().map(|&c| q_colors[c]).collect();
    debug_assert!(is_proper(g, &colors));
    debug_assert_eq!(palette_size(&colors), offset);
    Ok((offset, colors))
}

/// Exact chromatic number by direct branch and bound, without twin reduction
/// or join decomposition. Used by the cross-checking tests.
pub fn chromatic_number_unreduced(g: &Graph, budget: u64) -> Result<(usize, Vec<u32>)> {
    if g.order() == 0 {
        return Err(Error::EmptyGraph);
    }
    chromatic_core(g, budget)
}

fn chromatic_core(g: &Graph, budget: u64) -> Result<(usize, Vec<u32>)> {
    let lower = clique_number(g, budget).decided()?.expect("clique number is total");
    let greedy = greedy_coloring(g);
    let upper = palette_size(&greedy);
    debug_assert!(lower <= upper);
    if lower == upper {
        return Ok((upper, greedy));
    }
    for c in lower..upper {
        match is_k_colorable(g, c, budget) {
            Outcome::Found(colors) => return Ok((c, colors)),
            Outcome::Absent => {}
            Outcome::OutOfBudget => return Err(Error::OutOfBudget),
        }
    }
    Ok((upper, greedy))
}

pub(crate) fn is_proper(g: &Graph, colors: &[u32]) -> bool {
    colors.len() == g.order() && g.edges().all(|(u, v)| colors[u] != colors[v])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::mycielski;

    const B: u64 = 1 << 24;

    #[test]
    fn grotzsch_needs_four_colors() {
        let m3 = mycielski(3).unwrap();
        assert!(is_k_colorable(&m3, 3, B).is_absent());
        let coloring = is_k_colorable(&m3, 4, B).found().unwrap();
        assert!(is_proper(&m3, &coloring));
        assert!(palette_size(&coloring) <= 4);
    }

    #[test]
    fn edgeless_is_one_colorable() {
        let g = Graph::empty(7);
        assert_eq!(is_k_colorable(&g, 1, B).found().unwrap(), vec![0; 7]);
        assert!(is_k_colorable(&g, 0, B).is_absent());
        assert!(is_k_colorable(&Graph::empty(0), 0, B).is_found());
    }

    #[test]
    fn chromatic_pipeline_matches_structure() {
        let c5 = Graph::cycle_power(5, 1).unwrap();
        assert_eq!(chromatic_number(&c5, B).unwrap().0, 3);
        let joined = c5.join(&Graph::complete(2));
        assert_eq!(chromatic_number(&joined, B).unwrap().0, 5);
        assert_eq!(chromatic_number_unreduced(&joined, B).unwrap().0, 5);
        assert!(chromatic_number(&Graph::empty(0), B).is_err());
    }

    #[test]
    fn blow_up_keeps_chromatic_number() {
        let c5 = Graph::cycle_power(5, 1).unwrap();
        let b = c5.blow_up(3).unwrap();
        assert_eq!(chromatic_number(&b, B).unwrap().0, 3);
    }
}
