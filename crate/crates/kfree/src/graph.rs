//! Packed-adjacency simple graphs and the structural operations from which
//! every generated family is assembled.
//!
//! A [`Graph`] stores one row of `n` bits per vertex, so neighborhood
//! intersections in the solver inner loops are word-parallel. All values are
//! immutable once built; every operation here is a pure function returning a
//! fresh graph.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// Hard upper bound on the order of any constructed graph.
pub const MAX_ORDER: usize = 4096;

const WORD_BITS: usize = 64;

fn words_for(n: usize) -> usize {
    n.div_ceil(WORD_BITS)
}

/// Simple undirected graph with vertex labels `0..n-1`.
///
/// The adjacency relation is symmetric and irreflexive by construction; the
/// representation cannot express parallel edges or loops.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    row_words: usize,
    bits: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Graph {
        assert!(n <= MAX_ORDER, "graph order {n} exceeds limit {MAX_ORDER}");
        let row_words = words_for(n);
        Graph {
            n,
            row_words,
            bits: vec![0; n * row_words],
        }
    }

    /// Complete graph `K_n`.
    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in (u + 1)..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// Builds a graph from an explicit edge list.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n > MAX_ORDER {
            return Err(Error::TooLarge(n));
        }
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidParameter(format!(
                    "edge ({u},{v}) out of range for order {n}"
                )));
            }
            if u == v {
                return Err(Error::InvalidParameter(format!("loop at vertex {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// `p`-th power of the cycle `C_n`: `u ~ v` iff the circular distance is
    /// at most `p`. Saturates to `K_n` when `2p >= n`.
    pub fn cycle_power(n: usize, p: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::InvalidParameter(format!(
                "cycle power needs n >= 3, got n = {n}"
            )));
        }
        if p == 0 {
            return Err(Error::InvalidParameter("cycle power needs p >= 1".into()));
        }
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in (u + 1)..n {
                let d = (v - u).min(n - (v - u));
                if d <= p {
                    g.add_edge(u, v);
                }
            }
        }
        Ok(g)
    }

    /// Complete `p`-partite Turán graph on `n` vertices with balanced classes.
    ///
    /// The first `n mod p` classes get the larger size. `turan(1, n)` is the
    /// edgeless graph on `n` vertices.
    pub fn turan(p: usize, n: usize) -> Result<Graph> {
        if p == 0 && n > 0 {
            return Err(Error::InvalidParameter(
                "turan with 0 parts requires 0 vertices".into(),
            ));
        }
        let mut g = Graph::empty(n);
        if n == 0 {
            return Ok(g);
        }
        let class = turan_classes(p, n);
        for u in 0..n {
            for v in (u + 1)..n {
                if class[u] != class[v] {
                    g.add_edge(u, v);
                }
            }
        }
        Ok(g)
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.bits[u * self.row_words + v / WORD_BITS] |= 1 << (v % WORD_BITS);
        self.bits[v * self.row_words + u / WORD_BITS] |= 1 << (u % WORD_BITS);
    }

    pub(crate) fn remove_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.bits[u * self.row_words + v / WORD_BITS] &= !(1 << (v % WORD_BITS));
        self.bits[v * self.row_words + u / WORD_BITS] &= !(1 << (u % WORD_BITS));
    }

    /// Number of vertices.
    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        debug_assert!(u < self.n && v < self.n);
        self.bits[u * self.row_words + v / WORD_BITS] >> (v % WORD_BITS) & 1 == 1
    }

    /// Packed neighbor row of `u`.
    #[inline]
    pub fn row(&self, u: usize) -> &[u64] {
        &self.bits[u * self.row_words..(u + 1) * self.row_words]
    }

    /// Neighborhood of `u` as an owned vertex set.
    pub fn neighbors(&self, u: usize) -> VertexSet {
        VertexSet {
            universe: self.n,
            words: self.row(u).to_vec(),
        }
    }

    #[inline]
    pub fn degree(&self, u: usize) -> usize {
        self.row(u).iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Minimum degree; `None` for the empty graph.
    pub fn min_degree(&self) -> Option<usize> {
        (0..self.n).map(|u| self.degree(u)).min()
    }

    /// The common degree when the graph is regular, `None` otherwise
    /// (including the empty graph).
    pub fn is_regular(&self) -> Option<usize> {
        let d = self.min_degree()?;
        if (0..self.n).all(|u| self.degree(u) == d) {
            Some(d)
        } else {
            None
        }
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|u| self.degree(u)).sum::<usize>() / 2
    }

    /// Edges as pairs `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| ((u + 1)..self.n).filter(move |&v| self.has_edge(u, v)).map(move |v| (u, v)))
    }

    /// Complement graph; an involution.
    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// Join: disjoint union plus all edges between the two vertex sets.
    ///
    /// Vertices of `self` keep their labels; vertices of `other` are shifted
    /// by `self.order()`.
    pub fn join(&self, other: &Graph) -> Graph {
        let n1 = self.n;
        let n = n1 + other.n;
        let mut g = Graph::empty(n);
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.add_edge(u + n1, v + n1);
        }
        for u in 0..n1 {
            for v in n1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// Blow-up by a uniform factor `t`: vertex `u` becomes the independent
    /// class `{u*t, ..., u*t + t - 1}`, edges become complete bipartite
    /// graphs between classes.
    pub fn blow_up(&self, t: usize) -> Result<Graph> {
        if t == 0 {
            return Err(Error::InvalidParameter("blow-up factor must be >= 1".into()));
        }
        let n = self.n * t;
        if n > MAX_ORDER {
            return Err(Error::TooLarge(n));
        }
        let mut g = Graph::empty(n);
        for (u, v) in self.edges() {
            for i in 0..t {
                for j in 0..t {
                    g.add_edge(u * t + i, v * t + j);
                }
            }
        }
        Ok(g)
    }

    /// Common neighborhood `Γ(S) = ∩_{x∈S} Γ(x)` of a nonempty vertex set.
    pub fn common_neighborhood(&self, s: &VertexSet) -> Result<VertexSet> {
        assert_eq!(s.universe, self.n, "vertex set universe mismatch");
        let mut members = s.iter();
        let first = members.next().ok_or(Error::EmptyVertexSet)?;
        let mut acc = self.neighbors(first);
        for v in members {
            acc.intersect_rows(self.row(v));
        }
        Ok(acc)
    }

    /// Quotient by the equal-open-neighborhood equivalence (non-adjacent
    /// twins). Returns the quotient graph and the vertex-to-class map.
    ///
    /// Classes are numbered in order of first appearance, so the result is
    /// label-deterministic. Clique number, chromatic number and homomorphism
    /// existence into any target are preserved.
    pub fn twin_reduce(&self) -> (Graph, Vec<usize>) {
        let mut class_of = vec![0usize; self.n];
        let mut reps: Vec<usize> = Vec::new();
        let mut seen: HashMap<&[u64], usize> = HashMap::new();
        for v in 0..self.n {
            let key = self.row(v);
            match seen.get(key) {
                Some(&c) => class_of[v] = c,
                None => {
                    let c = reps.len();
                    seen.insert(key, c);
                    class_of[v] = c;
                    reps.push(v);
                }
            }
        }
        let k = reps.len();
        let mut q = Graph::empty(k);
        for i in 0..k {
            for j in (i + 1)..k {
                if self.has_edge(reps[i], reps[j]) {
                    q.add_edge(i, j);
                }
            }
        }
        (q, class_of)
    }

    /// Splits the graph into its join factors: the connected components of
    /// the complement, each returned with its (ascending) vertex list and the
    /// induced subgraph. A single part means the complement is connected.
    pub fn join_decompose(&self) -> Vec<(Vec<usize>, Graph)> {
        let comp = self.complement();
        let mut seen = vec![false; self.n];
        let mut parts = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut queue = vec![start];
            let mut members = Vec::new();
            seen[start] = true;
            while let Some(u) = queue.pop() {
                members.push(u);
                for v in comp.neighbors(u).iter() {
                    if !seen[v] {
                        seen[v] = true;
                        queue.push(v);
                    }
                }
            }
            members.sort_unstable();
            let sub = self.induced(&members);
            parts.push((members, sub));
        }
        parts
    }

    /// Induced subgraph on the given vertices; vertex `verts[i]` becomes
    /// label `i` in the result.
    pub fn induced(&self, verts: &[usize]) -> Graph {
        let mut g = Graph::empty(verts.len());
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Relabels the graph: vertex `u` becomes `perm[u]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        debug_assert!({
            let mut hit = vec![false; self.n];
            perm.iter().for_each(|&p| hit[p] = true);
            hit.iter().all(|&b| b)
        });
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }

    /// The full vertex set of this graph.
    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges().collect::<Vec<_>>())
    }
}

fn turan_classes(p: usize, n: usize) -> Vec<usize> {
    let q = n / p;
    let rem = n % p;
    let mut class = Vec::with_capacity(n);
    for c in 0..p {
        let size = if c < rem { q + 1 } else { q };
        class.extend(std::iter::repeat(c).take(size));
    }
    class
}

/// Packed subset of the vertices `0..universe` of a specific graph.
#[derive(Clone, PartialEq, Eq)]
pub struct VertexSet {
    universe: usize,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn empty(universe: usize) -> VertexSet {
        VertexSet {
            universe,
            words: vec![0; words_for(universe)],
        }
    }

    pub fn full(universe: usize) -> VertexSet {
        let mut s = VertexSet::empty(universe);
        for v in 0..universe {
            s.insert(v);
        }
        s
    }

    pub fn from_members(universe: usize, members: &[usize]) -> VertexSet {
        let mut s = VertexSet::empty(universe);
        for &v in members {
            s.insert(v);
        }
        s
    }

    #[inline]
    pub fn universe(&self) -> usize {
        self.universe
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        assert!(v < self.universe);
        self.words[v / WORD_BITS] |= 1 << (v % WORD_BITS);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        assert!(v < self.universe);
        self.words[v / WORD_BITS] &= !(1 << (v % WORD_BITS));
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.universe && self.words[v / WORD_BITS] >> (v % WORD_BITS) & 1 == 1
    }

    /// Cardinality by popcount.
    pub fn card(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub(crate) fn intersect_rows(&mut self, row: &[u64]) {
        for (w, r) in self.words.iter_mut().zip(row) {
            *w &= r;
        }
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        self.intersect_rows(&other.words);
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        for (w, r) in self.words.iter_mut().zip(&other.words) {
            *w |= r;
        }
    }

    pub fn subtract(&mut self, other: &VertexSet) {
        for (w, r) in self.words.iter_mut().zip(&other.words) {
            *w &= !r;
        }
    }

    /// Removes all members `<= v`.
    pub(crate) fn clear_through(&mut self, v: usize) {
        let word = v / WORD_BITS;
        let upto = word.min(self.words.len());
        for w in &mut self.words[..upto] {
            *w = 0;
        }
        if word < self.words.len() {
            let keep_from = v % WORD_BITS + 1;
            if keep_from == WORD_BITS {
                self.words[word] = 0;
            } else {
                self.words[word] &= !((1u64 << keep_from) - 1);
            }
        }
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            std::iter::successors((w != 0).then_some(w), |&w| {
                let rest = w & (w - 1);
                (rest != 0).then_some(rest)
            })
            .map(move |w| wi * WORD_BITS + w.trailing_zeros() as usize)
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VertexSet{:?}", self.to_vec())
    }
}
