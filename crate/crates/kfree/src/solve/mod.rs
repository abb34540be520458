//! Exact decision procedures with verifiable witnesses: clique search,
//! k-colorability and chromatic number, graph homomorphism, subgraph
//! embedding, maximal clique-free completion, and the lemma-vertex condition.
//!
//! Every search carries a node budget and reports exhaustion as a distinct
//! outcome — exactness is never silently traded away. Branching orders are
//! fixed (ascending vertex labels; descending pattern degree for embeddings)
//! so witnesses are reproducible across runs and platforms.

mod clique;
mod color;
mod complete;
mod embed;
mod hom;
mod lemma;

pub use clique::{clique_number, find_clique, max_clique};
pub use color::{chromatic_number, chromatic_number_unreduced, greedy_coloring, is_k_colorable};
pub use complete::maximal_completion;
pub use embed::contains_subgraph;
pub use hom::{find_homomorphism, find_homomorphism_unreduced};
pub use lemma::{decompose_by_lemma, is_lemma_vertex, lemma_vertex};

/// Default search node budget (nodes, not seconds).
pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;

/// Result of a budgeted exact search. `Absent` is a proof of non-existence;
/// an exhausted budget is reported separately and never as `Absent`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome<T> {
    Found(T),
    Absent,
    OutOfBudget,
}

impl<T> Outcome<T> {
    pub fn is_found(&self) -> bool {
        matches!(self, Outcome::Found(_))
    }

    pub fn is_absent(&self) -> bool {
        matches!(self, Outcome::Absent)
    }

    pub fn found(self) -> Option<T> {
        match self {
            Outcome::Found(t) => Some(t),
            _ => None,
        }
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> Outcome<U> {
        match self {
            Outcome::Found(t) => Outcome::Found(f(t)),
            Outcome::Absent => Outcome::Absent,
            Outcome::OutOfBudget => Outcome::OutOfBudget,
        }
    }

    /// Converts to a `Result`, mapping budget exhaustion to an error.
    pub fn decided(self) -> crate::error::Result<Option<T>> {
        match self {
            Outcome::Found(t) => Ok(Some(t)),
            Outcome::Absent => Ok(None),
            Outcome::OutOfBudget => Err(crate::error::Error::OutOfBudget),
        }
    }
}

/// Countdown of search nodes shared by one solver invocation.
pub(crate) struct Budget {
    left: u64,
}

impl Budget {
    pub(crate) fn new(limit: u64) -> Budget {
        Budget { left: limit }
    }

    /// Accounts one search node; `false` once the budget is exhausted.
    #[inline]
    pub(crate) fn tick(&mut self) -> bool {
        if self.left == 0 {
            false
        } else {
            self.left -= 1;
            true
        }
    }
}
