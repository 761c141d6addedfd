//! Alternating cones of 2-colored graphs.
//!
//! Color the edges of an undirected multigraph red and blue. A nonnegative
//! edge weighting is *balanced* when, at every vertex, the incident red weight
//! equals the incident blue weight. The balanced weightings form a polyhedral
//! cone, the alternating cone. This crate computes with it exactly:
//!
//! * [`graph`]: colored multigraphs, exact-rational edge vectors, walks and
//!   their classification (closed alternating walks and trails, alternating
//!   cycles, alternating bicycles).
//! * [`matching`]: maximum-cardinality matching in general graphs.
//! * [`reachability`]: closed alternating trails and walks through a given
//!   edge, and alternating trails between two vertices.
//! * [`cone`]: decomposition into extreme rays, into closed alternating walks
//!   and trails, essential edges and the cone dimension.
//! * [`threshold`]: threshold graphs, the complete 2-colored graph of a simple
//!   graph, majorization and unit transformations.
//! * [`boxfeas`]: integral and half-integral balanced vectors between lower and
//!   upper bounds, found by augmenting along trails of a residual graph.
//! * [`oracles`]: brute-force reference implementations used by the tests.
//! * [`cli`]: the JSON graph document and the command-line front end.

pub mod boxfeas;
pub mod cli;
pub mod cone;
mod error;
pub mod graph;
pub mod matching;
pub mod oracles;
pub mod reachability;
pub mod threshold;

pub use error::{Error, Result};
pub use graph::{
    char_vector, classify_walk, duplicate_edges, extract_cat, is_balanced, reduce_caw, Color,
    ColoredGraph, Edge, EdgeId, EdgeVector, Rational, Step, VertexId, Walk, WalkClass,
};
