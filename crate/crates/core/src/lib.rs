//! Dichromatic number tools for non-even digraphs and Pfaffian bipartite matchings.

pub mod error;
pub mod evenness;
pub mod fractional;
pub mod graph;
pub mod hardness;
pub mod listcolor;
pub mod matching;
pub mod specialfamilies;
pub mod twocolor;

pub use error::{Error, Result};
pub use graph::{BipartiteMatchingGraph, Digraph, UndirectedGraph};
