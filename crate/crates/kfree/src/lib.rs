//! Construction and exact verification of clique-free graph families.
//!
//! The library builds the classical triangle-free families (Andrásfai,
//! Mycielski, Kneser, Häggkvist, Hajnal) and their K_{r+1}-free join
//! extensions, decides cliques, colorings, homomorphisms and subgraph
//! embeddings exactly with certificate output, enumerates all small graphs
//! up to isomorphism, computes the extremal function
//! ψ(n, r, h) = max{δ(G) : G is K_{r+1}-free of order n with χ(G) ≥ h}
//! with witnesses, and runs the whole body of minimum-degree/chromatic-number
//! claims as a falsifiable audit suite.

pub mod canon;
pub mod cert;
pub mod enumerate;
pub mod error;
pub mod generators;
pub mod graph;
pub mod graph6;
pub mod harness;
pub mod rat;
pub mod solve;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
