//! Local homophily on bicolored graphs.
//!
//! Φ_v recolors `v` to the majority color of its neighbors (ties keep the
//! old color) and rewires the old neighborhood of `v`: same-colored
//! neighbors become pairwise adjacent, opposite-colored ones pairwise
//! non-adjacent. On top of that engine this crate provides flower graphs,
//! the OR / AND / duplicator gadgets, monotone synchronous circuits, and a
//! compiler from circuits to Local Homophily Evaluation (LHE) instances.

pub mod circuit;
pub mod compiler;
pub mod document;
pub mod dot;
pub mod flower;
pub mod gadgets;
pub mod graph;
pub mod lhe;

pub use document::{deserialize, parse_document, serialize, serialize_document, GraphDocument, ParseError};
pub use graph::{
    apply_phi, apply_word, apply_word_traced, graph_equal, BicoloredGraph, Color, GraphError, UpdateWord, VertexId,
};
pub use lhe::{solve_lhe, LheInstance};
