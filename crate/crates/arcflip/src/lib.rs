//! Certifying recognition of circular-arc graphs restricted to C4-free and
//! chordal inputs, built around the flip transformation between circular-arc
//! models and interval models.
//!
//! The crate either constructs a verified circular-arc model or emits a
//! machine-checkable obstruction witness: a minimal non-interval subgraph or
//! an annotated forbidden configuration in the derived graph.

pub mod aux_graph;
pub mod error;
pub mod fixtures;
pub mod format;
pub mod graph;
pub mod config;
pub mod enumerate;
pub mod models;
pub mod obstruction;
pub mod oracle;
pub mod pq;
pub mod recognize;
pub mod star;

pub use aux_graph::{build_aux_graph, dominance_pairs, AuxGraph};
pub use error::{Error, Result};
pub use format::{load_graph, to_edge_list, to_graph6};
pub use graph::{Graph, StructureReport, VertexSet};
pub use models::{
    flip_to_arcs, flip_to_intervals, verify_arc_model, verify_normalized, verify_sharp, ArcModel,
    IntervalModel,
};
