pub mod bipartite;
pub mod bits;
pub mod digraph;
pub mod edgemap;
pub mod format;
pub mod generators;
pub mod iso;
pub mod structure;
pub mod undirected;

pub use bipartite::{mates, normalise_matching, BipartiteMatchingGraph, Matching};
pub use bits::BitDigraph;
pub use digraph::Digraph;
pub use generators::{generate, Family, Generated};
pub use iso::find_isomorphism;
pub use structure::{
    back_degree, butterfly_contract, cut_vertices, find_cycle_in, girth, is_acyclic, is_butterfly_contractible,
    is_strongly_connected, one_sum_split, out_degeneracy, strong_components, topological_order, OneSumSplit,
};
pub use undirected::{norm, UndirectedGraph};
