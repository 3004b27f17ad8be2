//! d-sparse subgraph structure and randomized generic rigidity ranks.
//!
//! The crate computes maximal d-sparse subgraphs, d-critical components,
//! critical covers with their hinge statistics, and ranks of d-dimensional
//! rigidity matrices evaluated at random points over a large prime field.
//! The `bounds` module combines them to compare `r_d(G)` against the sizes
//! of maximal d-sparse subgraphs.

pub mod bounds;
pub mod covers;
pub mod error;
pub mod flow;
pub mod generators;
pub mod graph;
pub mod io;
pub mod rank;
pub mod sparsity;
pub mod suite;

pub use error::{Error, Result};
pub use graph::{canon, Edge, EdgeSubset, Graph, VertexSet};
pub use sparsity::{Backend, EdgeOrder, SparsityParams};
