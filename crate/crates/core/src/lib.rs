//! Resonance graphs of plane bipartite graphs and the binary codings of
//! their perfect matchings.
//!
//! The pipeline: build a [`plane_graph::PlaneGraph`] from coordinates or a
//! benzenoid hex list, enumerate its perfect matchings, build the resonance
//! graph, pick a reducible face decomposition and label every matching
//! with a daisy-cube or distributive-lattice code.

pub mod cli;
pub mod coding;
pub mod cube_kit;
pub mod decomposition;
pub mod error;
pub mod fixtures;
pub mod matchings;
pub mod plane_graph;
pub mod resonance;

pub use error::{Error, Result};

/// Serializes with object keys in sorted order.
pub fn to_sorted_json<T: serde::Serialize>(value: &T) -> Result<String> {
    let v = serde_json::to_value(value)?;
    Ok(serde_json::to_string_pretty(&v)?)
}
