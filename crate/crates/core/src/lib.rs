//! Degree-based entropy of bipartite graphs.
//!
//! A bipartite graph, viewed at degree-sequence resolution, minimizes its
//! degree-based entropy exactly when it maximizes `h(G) = Σ dᵢ ln dᵢ`.
//! This crate provides the numeric kernel for `h` and the entropy `I`,
//! the Young-tableau encoding of bipartite difference graphs, closed-form
//! extremal constructions (complete bipartite `K_{q,y}`, near-complete
//! `B(n,m,y)`, hook comparisons, nearly-regular and balanced max-entropy
//! graphs), majorization/Karamata and Gale–Ryser utilities, a registry of
//! degree-based topological indices, and brute-force plus fast extremal
//! search including the `n ≤ 50` sweep.

pub mod constructions;
pub mod error;
pub mod indices;
pub mod kernel;
pub mod majorization;
pub mod numtheory;
pub mod search;
pub mod tableau;
pub mod verify;

pub use error::{Error, Result};
pub use kernel::DegreeSequence;
pub use tableau::YoungTableau;
