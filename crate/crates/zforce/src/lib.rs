//! Estimation of zero forcing numbers and minimum vertex covers on graphs
//! with power-law degree distributions.
//!
//! The crate bundles four things:
//!
//! * a small undirected [`Graph`](graph::Graph) type with tombstone vertex
//!   removal and a plain-text edge-list format,
//! * generators for the graph ensembles the estimators are aimed at
//!   (preferential attachment with initial attractiveness, the deactivation
//!   model, explicit star families, uniform random graphs),
//! * the leaf-plus-maximum-degree removal heuristics for zero forcing
//!   ([`zero_forcing::lm_zero_forcing`]) and vertex cover
//!   ([`vertex_cover::lm_vertex_cover`]), together with exact brute-force
//!   solvers usable as oracles on small inputs,
//! * measurement helpers (degree census, tail-exponent fit, diameter) and a
//!   deterministic, seed-stable experiment harness with CSV and SVG output.

pub mod experiment;
pub mod generators;
pub mod graph;
pub mod metrics;
pub mod plot;
pub mod vertex_cover;
pub mod zero_forcing;

pub use graph::{ChainProbe, Graph, GraphError};
pub use zero_forcing::{ForcingResult, LmMode};
