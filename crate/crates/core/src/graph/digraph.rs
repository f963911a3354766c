use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Loopless digraph without parallel edges. Digons are allowed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "DigraphData", into = "DigraphData")]
pub struct Digraph {
    n: usize,
    out: Vec<Vec<usize>>,
    inn: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct DigraphData {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl TryFrom<DigraphData> for Digraph {
    type Error = Error;
    fn try_from(d: DigraphData) -> Result<Self> {
        Digraph::from_edges(d.n, d.edges)
    }
}

impl From<Digraph> for DigraphData {
    fn from(d: Digraph) -> Self {
        DigraphData { n: d.n, edges: d.edges() }
    }
}

impl Digraph {
    pub fn empty(n: usize) -> Self {
        Digraph { n, out: vec![Vec::new(); n], inn: vec![Vec::new(); n] }
    }

    /// Strict constructor: rejects loops, duplicates and out-of-range ids.
    pub fn from_edges<I: IntoIterator<Item = (usize, usize)>>(n: usize, edges: I) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!("edge ({u}, {v}) out of range for n = {n}")));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("loop at {u}")));
            }
            if !set.insert((u, v)) {
                return Err(Error::InvalidGraph(format!("duplicate edge ({u}, {v})")));
            }
        }
        Ok(Self::build(n, set))
    }

    /// Lenient constructor: drops loops and merges duplicates.
    pub fn from_edges_unified<I: IntoIterator<Item = (usize, usize)>>(n: usize, edges: I) -> Self {
        let set: BTreeSet<(usize, usize)> = edges
            .into_iter()
            .filter(|&(u, v)| u != v)
            .inspect(|&(u, v)| assert!(u < n && v < n, "edge out of range"))
            .collect();
        Self::build(n, set)
    }

    fn build(n: usize, set: BTreeSet<(usize, usize)>) -> Self {
        let mut out = vec![Vec::new(); n];
        let mut inn = vec![Vec::new(); n];
        for (u, v) in set {
            out[u].push(v);
            inn[v].push(u);
        }
        for l in inn.iter_mut() {
            l.sort_unstable();
        }
        Digraph { n, out, inn }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.out.iter().map(Vec::len).sum()
    }

    /// Edges in lexicographic order; the position is the edge index.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut e = Vec::with_capacity(self.m());
        for (u, l) in self.out.iter().enumerate() {
            for &v in l {
                e.push((u, v));
            }
        }
        e
    }

    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        if u >= self.n {
            return None;
        }
        let pos = self.out[u].binary_search(&v).ok()?;
        Some(self.out[..u].iter().map(Vec::len).sum::<usize>() + pos)
    }

    pub fn out(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    pub fn inn(&self, v: usize) -> &[usize] {
        &self.inn[v]
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out[v].len()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.inn[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.out[u].binary_search(&v).is_ok()
    }

    pub fn is_digon(&self, u: usize, v: usize) -> bool {
        self.has_edge(u, v) && self.has_edge(v, u)
    }

    /// Subdigraph induced by `verts` (in the given order); returns it with the new-to-old map.
    pub fn induced(&self, verts: &[usize]) -> (Digraph, Vec<usize>) {
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in verts.iter().enumerate() {
            pos[v] = i;
        }
        let mut edges = Vec::new();
        for (i, &u) in verts.iter().enumerate() {
            for &v in &self.out[u] {
                if pos[v] != usize::MAX {
                    edges.push((i, pos[v]));
                }
            }
        }
        (Digraph::from_edges_unified(verts.len(), edges), verts.to_vec())
    }

    /// D - S, keeping the remaining vertices in increasing order.
    pub fn remove_vertices(&self, s: &[usize]) -> (Digraph, Vec<usize>) {
        let mut gone = vec![false; self.n];
        for &v in s {
            gone[v] = true;
        }
        let keep: Vec<usize> = (0..self.n).filter(|&v| !gone[v]).collect();
        self.induced(&keep)
    }

    pub fn remove_edges(&self, del: &[(usize, usize)]) -> Digraph {
        let del: BTreeSet<(usize, usize)> = del.iter().copied().collect();
        Digraph::from_edges_unified(self.n, self.edges().into_iter().filter(|e| !del.contains(e)))
    }

    pub fn with_edges(&self, add: &[(usize, usize)]) -> Digraph {
        Digraph::from_edges_unified(self.n, self.edges().into_iter().chain(add.iter().copied()))
    }

    /// Identify vertices according to `map` (old id -> new id in 0..new_n). Loops are dropped and
    /// parallel edges unified.
    pub fn quotient(&self, map: &[usize], new_n: usize) -> Digraph {
        Digraph::from_edges_unified(new_n, self.edges().into_iter().map(|(u, v)| (map[u], map[v])))
    }

    /// Underlying simple graph; a digon becomes a single edge.
    pub fn underlying(&self) -> crate::graph::UndirectedGraph {
        crate::graph::UndirectedGraph::from_edges_unified(self.n, self.edges())
    }

    pub fn reverse(&self) -> Digraph {
        Digraph::from_edges_unified(self.n, self.edges().into_iter().map(|(u, v)| (v, u)))
    }

    /// Apply a vertex permutation: vertex v becomes perm[v].
    pub fn relabel(&self, perm: &[usize]) -> Digraph {
        Digraph::from_edges_unified(self.n, self.edges().into_iter().map(|(u, v)| (perm[u], perm[v])))
    }

    /// Directed cycle check for a closed vertex sequence.
    pub fn is_cycle(&self, cycle: &[usize]) -> bool {
        if cycle.len() < 2 {
            return false;
        }
        let mut seen = BTreeSet::new();
        if !cycle.iter().all(|&v| v < self.n && seen.insert(v)) {
            return false;
        }
        (0..cycle.len()).all(|i| self.has_edge(cycle[i], cycle[(i + 1) % cycle.len()]))
    }
}
