use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::graph::bipartite::BipartiteMatchingGraph;
use crate::graph::undirected::{norm, UndirectedGraph};
use crate::graph::Digraph;

/// The M-direction together with the matching edge behind each vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MDirection {
    pub digraph: Digraph,
    /// Vertex i of the digraph is the matching edge `vertex_to_edge[i]` = (a_i, b_i).
    pub vertex_to_edge: Vec<(usize, usize)>,
}

impl MDirection {
    pub fn vertex_of(&self, u: usize, v: usize) -> Option<usize> {
        self.vertex_to_edge.iter().position(|&(a, b)| norm(a, b) == norm(u, v))
    }

    /// Matching edges for a set of digraph vertices.
    pub fn edges_of(&self, verts: &[usize]) -> Vec<(usize, usize)> {
        verts.iter().map(|&i| self.vertex_to_edge[i]).collect()
    }
}

/// Vertex i stands for the i-th matching pair (a_i, b_i); (i, j) is an edge iff a_i b_j is.
pub fn m_direction(g: &BipartiteMatchingGraph) -> MDirection {
    let m = &g.matching;
    let mut b_index = vec![usize::MAX; g.n()];
    for (j, &(_, b)) in m.iter().enumerate() {
        b_index[b] = j;
    }
    let mut edges = Vec::new();
    for (i, &(a, _)) in m.iter().enumerate() {
        for &b in g.base.neighbours(a) {
            let j = b_index[b];
            if j != i {
                edges.push((i, j));
            }
        }
    }
    let digraph = Digraph::from_edges(m.len(), edges).expect("M-direction is simple");
    MDirection { digraph, vertex_to_edge: m.clone() }
}

/// M-direction of a bipartite graph with a perfect matching, bipartition inferred.
pub fn m_direction_of(g: &UndirectedGraph, m: &[(usize, usize)]) -> Result<MDirection> {
    Ok(m_direction(&BipartiteMatchingGraph::from_graph(g.clone(), m)?))
}

/// a_v = v, b_v = n + v, matching a_v b_v, and a_u b_v for each edge (u, v).
pub fn splitting_graph(d: &Digraph) -> BipartiteMatchingGraph {
    let n = d.n();
    let edges = (0..n).map(|v| (v, n + v)).chain(d.edges().into_iter().map(|(u, v)| (u, n + v)));
    let base = UndirectedGraph::from_edges(2 * n, edges).expect("splitting graph is simple");
    let matching = (0..n).map(|v| (v, n + v)).collect();
    BipartiteMatchingGraph::new(base, (0..n).collect(), (n..2 * n).collect(), matching).expect("valid splitting graph")
}
