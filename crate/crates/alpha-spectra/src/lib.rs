//! Spectral verification toolkit for perfect matchings in 1-binding graphs.
//!
//! The library computes A_alpha spectral radii, binding numbers, maximum
//! matchings and exact polynomial identities for join families of cliques,
//! and bundles them into verification campaigns with machine-readable
//! reports.
//!
//! With the default `parallel` feature the brute-force subset scans and
//! campaign loops run on rayon; disabling the feature falls back to the
//! sequential code path with bit-identical results.

pub mod binding;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod iso;
pub mod matching;
pub mod spectral;
pub mod symbolic;
pub mod verifier;

pub use error::Error;
pub use graph::{Graph, JoinFamilySpec, VertexSet};
