//! Triangles, Pythagorean holes and the graph families they are studied on:
//! triple embodiments, set-graphs and Jaco graphs.
//!
//! The triple engine is generic over the unsigned integer width; [`Triple`]
//! and [`WideTriple`] fix it to `u64` and `u128`.

pub mod embodiment;
pub mod error;
pub mod graph;
pub mod jaco;
pub mod setgraph;
pub mod triples;

pub use error::{Error, Result};
pub use graph::{DegreeOrder, Graph, Hole, HoleReport, Triangle};
pub use triples::{classify, TripleType, TypeIndex};

pub type Triple = triples::Triple<u64>;
pub type WideTriple = triples::Triple<u128>;
