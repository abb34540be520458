//! Brute-force oracles shared by the test binaries. These deliberately use
//! nothing but `has_edge` and plain enumeration, independent of the solvers'
//! packed-set search paths.

use kfree::graph::Graph;

/// Exhaustive subset scan for an s-clique.
pub fn brute_clique(g: &Graph, s: usize) -> bool {
    fn rec(g: &Graph, s: usize, start: usize, picked: &mut Vec<usize>) -> bool {
        if picked.len() == s {
            return true;
        }
        for v in start..g.order() {
            if picked.iter().all(|&u| g.has_edge(u, v)) {
                picked.push(v);
                if rec(g, s, v + 1, picked) {
                    return true;
                }
                picked.pop();
            }
        }
        false
    }
    s == 0 || rec(g, s, 0, &mut Vec::new())
}

/// Exhaustive color-assignment scan (all c^n assignments, odometer order).
pub fn brute_colorable(g: &Graph, c: usize) -> bool {
    let n = g.order();
    if n == 0 {
        return true;
    }
    if c == 0 {
        return false;
    }
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut colors = vec![0usize; n];
    loop {
        if edges.iter().all(|&(u, v)| colors[u] != colors[v]) {
            return true;
        }
        let mut i = 0;
        loop {
            if i == n {
                return false;
            }
            colors[i] += 1;
            if colors[i] < c {
                break;
            }
            colors[i] = 0;
            i += 1;
        }
    }
}

/// Exhaustive map scan for a homomorphism into `h`.
pub fn brute_hom(g: &Graph, h: &Graph) -> bool {
    let n = g.order();
    let t = h.order();
    if n == 0 {
        return true;
    }
    if t == 0 {
        return false;
    }
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut map = vec![0usize; n];
    loop {
        if edges.iter().all(|&(u, v)| h.has_edge(map[u], map[v])) {
            return true;
        }
        let mut i = 0;
        loop {
            if i == n {
                return false;
            }
            map[i] += 1;
            if map[i] < t {
                break;
            }
            map[i] = 0;
            i += 1;
        }
    }
}
