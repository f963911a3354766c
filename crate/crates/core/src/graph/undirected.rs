use std::collections::{BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Simple undirected graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "GraphData", into = "GraphData")]
pub struct UndirectedGraph {
    n: usize,
    adj: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct GraphData {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl TryFrom<GraphData> for UndirectedGraph {
    type Error = Error;
    fn try_from(d: GraphData) -> Result<Self> {
        UndirectedGraph::from_edges(d.n, d.edges)
    }
}

impl From<UndirectedGraph> for GraphData {
    fn from(g: UndirectedGraph) -> Self {
        GraphData { n: g.n, edges: g.edges() }
    }
}

/// Normalised undirected edge (smaller endpoint first).
pub fn norm(u: usize, v: usize) -> (usize, usize) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

impl UndirectedGraph {
    pub fn empty(n: usize) -> Self {
        UndirectedGraph { n, adj: vec![Vec::new(); n] }
    }

    pub fn from_edges<I: IntoIterator<Item = (usize, usize)>>(n: usize, edges: I) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!("edge {{{u}, {v}}} out of range for n = {n}")));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("loop at {u}")));
            }
            if !set.insert(norm(u, v)) {
                return Err(Error::InvalidGraph(format!("duplicate edge {{{u}, {v}}}")));
            }
        }
        Ok(Self::build(n, set))
    }

    pub fn from_edges_unified<I: IntoIterator<Item = (usize, usize)>>(n: usize, edges: I) -> Self {
        let set: BTreeSet<(usize, usize)> =
            edges.into_iter().filter(|&(u, v)| u != v).map(|(u, v)| norm(u, v)).collect();
        Self::build(n, set)
    }

    fn build(n: usize, set: BTreeSet<(usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in set {
            adj[u].push(v);
            adj[v].push(u);
        }
        for l in adj.iter_mut() {
            l.sort_unstable();
        }
        UndirectedGraph { n, adj }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges (u < v) in lexicographic order; the position is the edge index.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut e = Vec::with_capacity(self.m());
        for (u, l) in self.adj.iter().enumerate() {
            for &v in l {
                if u < v {
                    e.push((u, v));
                }
            }
        }
        e
    }

    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let (u, v) = norm(u, v);
        self.edges().binary_search(&(u, v)).ok()
    }

    pub fn neighbours(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn induced(&self, verts: &[usize]) -> (UndirectedGraph, Vec<usize>) {
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in verts.iter().enumerate() {
            pos[v] = i;
        }
        let mut edges = Vec::new();
        for (i, &u) in verts.iter().enumerate() {
            for &v in &self.adj[u] {
                if pos[v] != usize::MAX && i < pos[v] {
                    edges.push((i, pos[v]));
                }
            }
        }
        (UndirectedGraph::from_edges_unified(verts.len(), edges), verts.to_vec())
    }

    pub fn quotient(&self, map: &[usize], new_n: usize) -> UndirectedGraph {
        UndirectedGraph::from_edges_unified(new_n, self.edges().into_iter().map(|(u, v)| (map[u], map[v])))
    }

    pub fn relabel(&self, perm: &[usize]) -> UndirectedGraph {
        UndirectedGraph::from_edges_unified(self.n, self.edges().into_iter().map(|(u, v)| (perm[u], perm[v])))
    }

    pub fn remove_edges(&self, del: &[(usize, usize)]) -> UndirectedGraph {
        let del: BTreeSet<(usize, usize)> = del.iter().map(|&(u, v)| norm(u, v)).collect();
        UndirectedGraph::from_edges_unified(self.n, self.edges().into_iter().filter(|e| !del.contains(e)))
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut comp = vec![usize::MAX; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut part = vec![s];
            comp[s] = id;
            let mut q = VecDeque::from([s]);
            while let Some(u) = q.pop_front() {
                for &v in &self.adj[u] {
                    if comp[v] == usize::MAX {
                        comp[v] = id;
                        part.push(v);
                        q.push_back(v);
                    }
                }
            }
            part.sort_unstable();
            out.push(part);
        }
        out
    }

    /// Side of each vertex in a proper 2-colouring (BFS from the smallest vertex of each
    /// component gets side 0), or None if the graph is not bipartite.
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        let mut side = vec![u8::MAX; self.n];
        for s in 0..self.n {
            if side[s] != u8::MAX {
                continue;
            }
            side[s] = 0;
            let mut q = VecDeque::from([s]);
            while let Some(u) = q.pop_front() {
                for &v in &self.adj[u] {
                    if side[v] == u8::MAX {
                        side[v] = 1 - side[u];
                        q.push_back(v);
                    } else if side[v] == side[u] {
                        return None;
                    }
                }
            }
        }
        Some(side)
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }
}
