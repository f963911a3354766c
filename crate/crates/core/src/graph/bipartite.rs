use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::undirected::{norm, UndirectedGraph};

/// A perfect matching as a sorted list of normalised edges.
pub type Matching = Vec<(usize, usize)>;

/// Mate array of a perfect matching, or an error if `m` is not one in `g`.
pub fn mates(g: &UndirectedGraph, m: &[(usize, usize)]) -> Result<Vec<usize>> {
    let mut mate = vec![usize::MAX; g.n()];
    for &(u, v) in m {
        if !g.has_edge(u, v) {
            return Err(Error::NotPerfectMatching(format!("{{{u}, {v}}} is not an edge")));
        }
        if mate[u] != usize::MAX || mate[v] != usize::MAX {
            return Err(Error::NotPerfectMatching(format!("vertex of {{{u}, {v}}} covered twice")));
        }
        mate[u] = v;
        mate[v] = u;
    }
    if let Some(v) = mate.iter().position(|&x| x == usize::MAX) {
        return Err(Error::NotPerfectMatching(format!("vertex {v} is uncovered")));
    }
    Ok(mate)
}

pub fn normalise_matching(m: &[(usize, usize)]) -> Matching {
    let mut out: Matching = m.iter().map(|&(u, v)| norm(u, v)).collect();
    out.sort_unstable();
    out
}

/// Bipartite graph with sides A and B and a designated perfect matching.
///
/// The matching is stored as (a, b) pairs with a in A; their order fixes the
/// vertex numbering of the M-direction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BipartiteMatchingGraph {
    pub base: UndirectedGraph,
    pub part_a: Vec<usize>,
    pub part_b: Vec<usize>,
    pub matching: Vec<(usize, usize)>,
}

impl BipartiteMatchingGraph {
    pub fn new(
        base: UndirectedGraph,
        part_a: Vec<usize>,
        part_b: Vec<usize>,
        matching: Vec<(usize, usize)>,
    ) -> Result<Self> {
        let n = base.n();
        let mut side = vec![u8::MAX; n];
        for &a in &part_a {
            if a >= n || side[a] != u8::MAX {
                return Err(Error::InvalidGraph(format!("bad vertex {a} in side A")));
            }
            side[a] = 0;
        }
        for &b in &part_b {
            if b >= n || side[b] != u8::MAX {
                return Err(Error::InvalidGraph(format!("bad vertex {b} in side B")));
            }
            side[b] = 1;
        }
        if side.iter().any(|&s| s == u8::MAX) {
            return Err(Error::InvalidGraph("sides do not cover all vertices".into()));
        }
        for (u, v) in base.edges() {
            if side[u] == side[v] {
                return Err(Error::NotBipartite);
            }
        }
        mates(&base, &matching)?;
        let matching = matching.into_iter().map(|(u, v)| if side[u] == 0 { (u, v) } else { (v, u) }).collect();
        Ok(BipartiteMatchingGraph { base, part_a, part_b, matching })
    }

    /// Infer the bipartition by BFS; the side containing vertex 0 of each component is A.
    pub fn from_graph(base: UndirectedGraph, matching: &[(usize, usize)]) -> Result<Self> {
        let side = base.bipartition().ok_or(Error::NotBipartite)?;
        let part_a = (0..base.n()).filter(|&v| side[v] == 0).collect();
        let part_b = (0..base.n()).filter(|&v| side[v] == 1).collect();
        let mut m: Vec<(usize, usize)> = matching
            .iter()
            .map(|&(u, v)| if side[u] == 0 { (u, v) } else { (v, u) })
            .collect();
        m.sort_unstable();
        Self::new(base, part_a, part_b, m)
    }

    pub fn n(&self) -> usize {
        self.base.n()
    }

    pub fn matching_normalised(&self) -> Matching {
        normalise_matching(&self.matching)
    }

    /// Same graph with a different perfect matching (pairs get reoriented A to B).
    pub fn with_matching(&self, m: &[(usize, usize)]) -> Result<Self> {
        let mut in_a = vec![false; self.n()];
        for &a in &self.part_a {
            in_a[a] = true;
        }
        let mut pairs: Vec<(usize, usize)> = m.iter().map(|&(u, v)| if in_a[u] { (u, v) } else { (v, u) }).collect();
        pairs.sort_unstable();
        Self::new(self.base.clone(), self.part_a.clone(), self.part_b.clone(), pairs)
    }

    pub fn is_in_a(&self, v: usize) -> bool {
        self.part_a.contains(&v)
    }
}
