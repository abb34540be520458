//! Exhaustive and isomorphism-reduced generation of all small graphs, plus
//! the exact ψ(n, r, h) oracle.
//!
//! The labeled stream walks edge masks in ascending order; mask bit `k` is
//! the `k`-th upper-triangle pair in the same column-major order graph6 uses.
//! The low 12 mask bits split the labeled space into deterministic shards so
//! scans can run shard-parallel and merge order-independently.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::canon::canonical_form;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::{pair_at, to_graph6};
use crate::solve::{find_clique, is_k_colorable, Outcome};

/// Largest order of the exhaustive labeled stream (2^21 graphs at 7).
pub const MAX_EXHAUSTIVE_ORDER: usize = 7;
/// Largest order of isomorphism-reduced generation.
pub const MAX_ISO_ORDER: usize = 9;
/// Largest order the ψ oracle scans.
pub const MAX_PSI_ORDER: usize = 8;
/// Shards of the labeled stream, keyed by the low 12 edge-mask bits.
pub const SHARD_COUNT: u64 = 1 << 12;

/// Unlabeled graph counts for orders 1..=8, asserted during generation.
const ISO_COUNTS: [usize; 8] = [1, 2, 4, 11, 34, 156, 1044, 12346];

/// Number of vertex pairs, i.e. edge-mask bits, at order `n`.
pub fn edge_bits(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// The graph on `n` vertices whose edge set is the given mask.
pub fn graph_from_edge_mask(n: usize, mask: u64) -> Graph {
    debug_assert!(edge_bits(n) <= 64);
    let mut g = Graph::empty(n);
    let mut m = mask;
    while m != 0 {
        let k = m.trailing_zeros() as usize;
        let (u, v) = pair_at(k);
        g.add_edge(u, v);
        m &= m - 1;
    }
    g
}

/// Edge mask of a small graph (order at most 11).
pub fn edge_mask_of(g: &Graph) -> u64 {
    debug_assert!(edge_bits(g.order()) <= 64);
    let mut mask = 0u64;
    let mut k = 0;
    for v in 1..g.order() {
        for u in 0..v {
            if g.has_edge(u, v) {
                mask |= 1 << k;
            }
            k += 1;
        }
    }
    mask
}

/// All 2^C(n,2) labeled graphs on `n` vertices, in ascending edge-mask order.
pub fn all_graphs(n: usize) -> Result<impl Iterator<Item = Graph>> {
    if n > MAX_EXHAUSTIVE_ORDER {
        return Err(Error::InvalidParameter(format!(
            "exhaustive enumeration supports n <= {MAX_EXHAUSTIVE_ORDER}, got {n} \
             (use iso-reduced or generated modes beyond)"
        )));
    }
    Ok((0..1u64 << edge_bits(n)).map(move |mask| graph_from_edge_mask(n, mask)))
}

/// Edge masks of one shard, ascending. Shard `s` holds the masks congruent
/// to `s` modulo [`SHARD_COUNT`].
pub fn shard_masks(n: usize, shard: u64) -> impl Iterator<Item = u64> {
    let limit = 1u64 << edge_bits(n);
    (0..)
        .map(move |i| shard + i * SHARD_COUNT)
        .take_while(move |&m| m < limit)
}

/// Runs `scan` over every shard of the labeled space in parallel and merges
/// the per-shard results in shard order, which makes the aggregate
/// deterministic regardless of scheduling.
pub fn scan_labeled_sharded<T, F>(n: usize, scan: F) -> Result<Vec<T>>
where
    T: Send,
    F: Fn(u64, &mut dyn Iterator<Item = Graph>) -> T + Sync,
{
    if n > MAX_EXHAUSTIVE_ORDER {
        return Err(Error::InvalidParameter(format!(
            "exhaustive enumeration supports n <= {MAX_EXHAUSTIVE_ORDER}, got {n}"
        )));
    }
    let shards = SHARD_COUNT.min(1 << edge_bits(n));
    Ok((0..shards)
        .into_par_iter()
        .map(|s| {
            let mut graphs = shard_masks(n, s).map(|m| graph_from_edge_mask(n, m));
            scan(s, &mut graphs)
        })
        .collect())
}

/// One representative per isomorphism class on `n` vertices, ordered by
/// canonical form. Generation is incremental: every class on `k+1` vertices
/// arises from some class on `k` vertices by attaching one vertex, so
/// extending every representative by every neighborhood mask and
/// deduplicating canonically is complete.
pub fn iso_reduced_graphs(n: usize) -> Result<Vec<Graph>> {
    if n == 0 || n > MAX_ISO_ORDER {
        return Err(Error::InvalidParameter(format!(
            "iso-reduced enumeration supports 1 <= n <= {MAX_ISO_ORDER}, got {n}"
        )));
    }
    let mut level = vec![Graph::empty(1)];
    for k in 1..n {
        let keys: BTreeSet<(usize, u128)> = level
            .par_iter()
            .flat_map_iter(|g| {
                (0..1u64 << k).map(move |mask| {
                    let child = attach_vertex(g, mask);
                    canonical_form(&child).expect("order stays within canon range").raw()
                })
            })
            .collect();
        level = keys
            .into_iter()
            .map(|(order, bits)| canon_graph(order, bits))
            .collect();
        let count = level.len();
        if k + 1 <= ISO_COUNTS.len() {
            assert_eq!(
                count,
                ISO_COUNTS[k],
                "isomorphism class count mismatch at order {}",
                k + 1
            );
        }
    }
    Ok(level)
}

fn attach_vertex(g: &Graph, neighbors_mask: u64) -> Graph {
    let n = g.order();
    let mut out = Graph::empty(n + 1);
    for (u, v) in g.edges() {
        out.add_edge(u, v);
    }
    let mut m = neighbors_mask;
    while m != 0 {
        let u = m.trailing_zeros() as usize;
        out.add_edge(u, n);
        m &= m - 1;
    }
    out
}

fn canon_graph(n: usize, bits: u128) -> Graph {
    let total = edge_bits(n);
    let mut g = Graph::empty(n);
    for k in 0..total {
        if bits >> (total - 1 - k) & 1 == 1 {
            let (u, v) = pair_at(k);
            g.add_edge(u, v);
        }
    }
    g
}

/// Exact value of ψ(n, r, h) with an extremal witness.
#[derive(Clone, Debug)]
pub struct PsiResult {
    pub n: usize,
    pub r: usize,
    pub h: usize,
    /// Maximum minimum degree over K_{r+1}-free graphs of order `n` with
    /// chromatic number at least `h`; `None` when no graph qualifies.
    pub value: Option<usize>,
    pub witness: Option<Graph>,
}

impl Serialize for PsiResult {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("PsiResult", 5)?;
        s.serialize_field("n", &self.n)?;
        s.serialize_field("r", &self.r)?;
        s.serialize_field("h", &self.h)?;
        s.serialize_field("value", &self.value)?;
        s.serialize_field("witness", &self.witness.as_ref().map(to_graph6))?;
        s.end()
    }
}

/// Computes ψ(n, r, h) by scanning the isomorphism-reduced graphs of order
/// `n`: maximize δ over the K_{r+1}-free graphs with χ ≥ h. The witness is
/// the first extremal graph in canonical stream order.
pub fn psi_oracle(n: usize, r: usize, h: usize, budget: u64) -> Result<PsiResult> {
    if n == 0 || n > MAX_PSI_ORDER {
        return Err(Error::InvalidParameter(format!(
            "psi oracle supports 1 <= n <= {MAX_PSI_ORDER}, got {n}"
        )));
    }
    if r < 2 {
        return Err(Error::InvalidParameter("psi oracle needs r >= 2".into()));
    }
    if h < 1 {
        return Err(Error::InvalidParameter("psi oracle needs h >= 1".into()));
    }
    let mut best: Option<(usize, Graph)> = None;
    for g in iso_reduced_graphs(n)? {
        match find_clique(&g, r + 1, budget) {
            Outcome::Found(_) => continue,
            Outcome::Absent => {}
            Outcome::OutOfBudget => return Err(Error::OutOfBudget),
        }
        // χ(g) >= h exactly when g is not (h-1)-colorable
        match is_k_colorable(&g, h - 1, budget) {
            Outcome::Found(_) => continue,
            Outcome::Absent => {}
            Outcome::OutOfBudget => return Err(Error::OutOfBudget),
        }
        let delta = g.min_degree().expect("n >= 1");
        if best.as_ref().is_none_or(|(b, _)| delta > *b) {
            best = Some((delta, g));
        }
    }
    let (value, witness) = match best {
        Some((d, g)) => (Some(d), Some(g)),
        None => (None, None),
    };
    Ok(PsiResult { n, r, h, value, witness })
}
