//! cutcert: a certification toolkit for graph cut properties.
//!
//! The library measures how far a graph (or k-uniform hypergraph) deviates
//! from random-like edge distribution under a family of subset and cut
//! counting properties, provides seeded generators for the graph families
//! those checks are calibrated against, builds the exact combinatorial
//! matrices underlying the crossing-count calculus, and classifies the
//! block-density structure of equipartitions.

pub mod bitset;
pub mod check;
pub mod combin;
mod error;
pub mod exact;
pub mod gen;
pub mod graph;
pub mod pipeline;
pub mod report;
pub mod structure;
pub mod wspace;

pub use error::{Error, Result};
pub use graph::{
    contiguous_equipartition, Graph, PartitionStats, UniformHypergraph, VertexCut,
};
