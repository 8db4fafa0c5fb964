//! Directed domination of oriented graphs: exact and bounded computation of
//! the upper orientable domination number Γ_d(G), with the supporting graph
//! invariants, hypergraph transversals and extremal constructions.

pub mod bitset;
pub mod bounds;
pub mod constructions;
pub mod digraph;
pub mod engine;
pub mod error;
pub mod extremal;
pub mod graph;
pub mod invariants;

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 512;

pub use bitset::VertexSet;
pub use bounds::{sandwich, BoundOptions, BoundsReport};
pub use constructions::{Certificate, ClaimKind};
pub use digraph::{Hypergraph, Orientation};
pub use engine::{lower_directed_domination, upper_directed_domination, GammaDResult, SearchOptions};
pub use error::{Error, Result};
pub use graph::Graph;
