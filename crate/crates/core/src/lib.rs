//! Exact tessellation cover numbers and the graph constructions around them.
//!
//! A *tessellation* of a graph is a set of vertex-disjoint cliques; a
//! *tessellation cover* is a set of tessellations whose cliques jointly
//! contain every edge. This crate computes the tessellation cover number
//! T(G) and the star number is(G) exactly for desk-scale graphs, builds the
//! graph families whose cover numbers are known in closed form together
//! with explicit optimal covers, and decides whether T(G) = is(G).

pub mod analysis;
pub mod budget;
pub mod canon;
pub mod constructions;
pub mod error;
pub mod graph;
pub mod invariants;
pub mod io;
pub mod ops;
pub mod patterns;
pub mod tessellation;

pub use budget::Budget;
pub use error::{Error, Result};
pub use graph::{Graph, GraphBuilder, VertexSet};
