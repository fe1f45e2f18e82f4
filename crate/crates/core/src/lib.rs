//! Exact domination parameters parameterized by induced-subgraph properties,
//! on plain graphs and on generalized lexicographic products `G[Φ]`.
//!
//! The crate is organized bottom-up:
//!
//! - [`graph`], [`bitset`] and [`io`]: the graph type, vertex subsets, and
//!   graph6 / edge-list codecs.
//! - [`glp`]: building `G[Φ]` and mapping product vertices back to
//!   `(base vertex, factor vertex)` pairs.
//! - [`properties`]: the classes `I, T, F, M, S_k, C` an induced subgraph may
//!   be required to belong to.
//! - [`domination`]: exhaustive solvers for `γ_(A,B)`, `Γ_(A,B)`, minimal
//!   families, efficient dominating sets and the block rewrite on products.
//! - [`theorems`]: one checker per structural result about products, a sweep
//!   driver and randomized hunts.

pub mod bitset;
pub mod domination;
pub mod error;
pub mod glp;
pub mod graph;
pub mod io;
mod mask;
pub mod properties;
pub mod theorems;

pub use bitset::VertexSet;
pub use domination::{Extremum, Guards, ParamName, Solver};
pub use error::{Error, Result};
pub use glp::ProductGraph;
pub use graph::Graph;
pub use properties::{PropertyId, PropertyPair};
