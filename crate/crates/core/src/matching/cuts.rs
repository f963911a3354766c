use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::bipartite::{normalise_matching, BipartiteMatchingGraph, Matching};
use crate::graph::undirected::UndirectedGraph;
use crate::graph::Digraph;
use crate::matching::perfect::{is_matching_covered, perfect_matchings, DEFAULT_MATCHING_CAP};

/// Shore of a cut: a non-empty proper vertex subset, kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CutSpec {
    pub shore: Vec<usize>,
}

impl CutSpec {
    pub fn new(n: usize, shore: &[usize]) -> Result<Self> {
        let mut s = shore.to_vec();
        s.sort_unstable();
        s.dedup();
        if s.is_empty() || s.len() >= n || s.iter().any(|&v| v >= n) {
            return Err(Error::InvalidParameter(format!("{shore:?} is not a proper non-empty shore")));
        }
        Ok(CutSpec { shore: s })
    }

    pub fn mask(&self, n: usize) -> Vec<bool> {
        let mut m = vec![false; n];
        for &v in &self.shore {
            m[v] = true;
        }
        m
    }

    pub fn complement(&self, n: usize) -> CutSpec {
        let m = self.mask(n);
        CutSpec { shore: (0..n).filter(|&v| !m[v]).collect() }
    }

    pub fn is_trivial(&self, n: usize) -> bool {
        self.shore.len() == 1 || self.shore.len() == n - 1
    }
}

pub fn cut_edges(g: &UndirectedGraph, x: &CutSpec) -> Vec<(usize, usize)> {
    let m = x.mask(g.n());
    g.edges().into_iter().filter(|&(u, v)| m[u] != m[v]).collect()
}

/// Identify the shore into one vertex, which takes the place of the shore's least vertex.
pub fn contract_shore(g: &UndirectedGraph, x: &CutSpec) -> (UndirectedGraph, Vec<usize>) {
    let inside = x.mask(g.n());
    let rep = x.shore[0];
    let mut map = vec![0; g.n()];
    let mut next = 0;
    for v in 0..g.n() {
        if inside[v] && v != rep {
            continue;
        }
        map[v] = next;
        next += 1;
    }
    for &v in &x.shore {
        map[v] = map[rep];
    }
    (g.quotient(&map, next), map)
}

/// Image of a matching under a contraction map; edges inside the shore disappear.
pub fn contract_matching(m: &[(usize, usize)], map: &[usize]) -> Matching {
    let img: Vec<(usize, usize)> = m.iter().map(|&(u, v)| (map[u], map[v])).filter(|&(u, v)| u != v).collect();
    normalise_matching(&img)
}

/// Cut queries on one matching covered graph, with its perfect matchings enumerated once.
#[derive(Clone, Debug)]
pub struct CutOracle {
    pub graph: UndirectedGraph,
    pub matchings: Vec<Matching>,
    side: Option<Vec<u8>>,
}

impl CutOracle {
    pub fn new(g: &UndirectedGraph) -> Result<Self> {
        if !is_matching_covered(g)? {
            return Err(Error::NotMatchingCovered);
        }
        Ok(CutOracle { graph: g.clone(), matchings: perfect_matchings(g, DEFAULT_MATCHING_CAP)?, side: g.bipartition() })
    }

    fn crossings(&self, m: &[(usize, usize)], inside: &[bool]) -> usize {
        m.iter().filter(|&&(u, v)| inside[u] != inside[v]).count()
    }

    /// Every perfect matching crosses the cut exactly once.
    pub fn tight_by_matchings(&self, x: &CutSpec) -> bool {
        let inside = x.mask(self.graph.n());
        self.matchings.iter().all(|m| self.crossings(m, &inside) == 1)
    }

    /// Majority/minority criterion for bipartite graphs; None for non-bipartite ones.
    pub fn tight_by_minority(&self, x: &CutSpec) -> Option<bool> {
        let side = self.side.as_ref()?;
        if x.shore.len() % 2 == 0 {
            return Some(false);
        }
        let inside = x.mask(self.graph.n());
        let in_a = x.shore.iter().filter(|&&v| side[v] == 0).count();
        let in_b = x.shore.len() - in_a;
        if in_a.abs_diff(in_b) != 1 {
            return Some(false);
        }
        let minority = if in_a < in_b { 0 } else { 1 };
        let leaks = x
            .shore
            .iter()
            .filter(|&&v| side[v] == minority)
            .any(|&v| self.graph.neighbours(v).iter().any(|&w| !inside[w]));
        Some(!leaks)
    }

    /// Tightness by both routes where both apply; a disagreement is reported as an error.
    pub fn is_tight(&self, x: &CutSpec) -> Result<bool> {
        let b = self.tight_by_matchings(x);
        match self.tight_by_minority(x) {
            Some(a) if a != b => Err(Error::CertificateFailed(format!("tight-cut routes disagree on {:?}", x.shore))),
            _ => Ok(b),
        }
    }

    /// Every edge lies in a perfect matching crossing the cut exactly once.
    pub fn separating_by_matchings(&self, x: &CutSpec) -> bool {
        let inside = x.mask(self.graph.n());
        let mut hit = vec![false; self.graph.m()];
        for m in &self.matchings {
            if self.crossings(m, &inside) == 1 {
                for &(u, v) in m {
                    hit[self.graph.edge_index(u, v).expect("matching edge")] = true;
                }
            }
        }
        hit.into_iter().all(|h| h)
    }

    /// Both shore contractions are matching covered.
    pub fn separating_by_contractions(&self, x: &CutSpec) -> Result<bool> {
        let n = self.graph.n();
        for s in [x.clone(), x.complement(n)] {
            let (c, _) = contract_shore(&self.graph, &s);
            if !is_matching_covered(&c)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn is_separating(&self, x: &CutSpec) -> Result<bool> {
        let a = self.separating_by_matchings(x);
        if a != self.separating_by_contractions(x)? {
            return Err(Error::CertificateFailed(format!("separating-cut routes disagree on {:?}", x.shore)));
        }
        Ok(a)
    }

    /// Odd shores containing vertex 0, one per cut.
    pub fn odd_shores(&self) -> Result<Vec<CutSpec>> {
        let n = self.graph.n();
        if n > 20 {
            return Err(Error::TooLarge(format!("{n} vertices for shore enumeration")));
        }
        let mut out = Vec::new();
        for mask in 0u32..1 << (n - 1) {
            let shore: Vec<usize> =
                std::iter::once(0).chain((1..n).filter(|&v| mask >> (v - 1) & 1 == 1)).collect();
            if shore.len() % 2 == 1 && shore.len() < n {
                out.push(CutSpec { shore });
            }
        }
        Ok(out)
    }

    /// Non-trivial tight cuts, one shore per cut (the one containing vertex 0).
    pub fn nontrivial_tight_cuts(&self) -> Result<Vec<CutSpec>> {
        let n = self.graph.n();
        let mut out = Vec::new();
        for x in self.odd_shores()? {
            if !x.is_trivial(n) && self.is_tight(&x)? {
                out.push(x);
            }
        }
        Ok(out)
    }

    /// Every non-trivial separating cut is tight.
    pub fn is_solid(&self) -> Result<bool> {
        let n = self.graph.n();
        for x in self.odd_shores()? {
            if !x.is_trivial(n) && self.is_separating(&x)? && !self.is_tight(&x)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

pub fn is_tight_cut(g: &UndirectedGraph, shore: &[usize]) -> Result<bool> {
    let x = CutSpec::new(g.n(), shore)?;
    CutOracle::new(g)?.is_tight(&x)
}

pub fn is_separating_cut(g: &UndirectedGraph, shore: &[usize]) -> Result<bool> {
    let x = CutSpec::new(g.n(), shore)?;
    CutOracle::new(g)?.is_separating(&x)
}

pub fn is_solid(g: &UndirectedGraph) -> Result<bool> {
    CutOracle::new(g)?.is_solid()
}

/// Contract the shore of a non-trivial tight cut. Returns the graph and the contraction map.
pub fn tight_cut_contraction(g: &UndirectedGraph, shore: &[usize]) -> Result<(UndirectedGraph, Vec<usize>)> {
    let x = CutSpec::new(g.n(), shore)?;
    if x.shore.len() < 2 || !CutOracle::new(g)?.is_tight(&x)? {
        return Err(Error::NotTight);
    }
    Ok(contract_shore(g, &x))
}

/// No edge from Y \ X to X \ Y, and X, Y cover V.
pub fn is_directed_separation(d: &Digraph, x: &[usize], y: &[usize]) -> bool {
    let n = d.n();
    let (mut in_x, mut in_y) = (vec![false; n], vec![false; n]);
    for &v in x {
        in_x[v] = true;
    }
    for &v in y {
        in_y[v] = true;
    }
    (0..n).all(|v| in_x[v] || in_y[v])
        && d.edges().into_iter().all(|(u, v)| !(in_y[u] && !in_x[u] && in_x[v] && !in_y[v]))
}

pub const SEPARATION_VERTEX_LIMIT: usize = 16;

/// All directed separations (X, Y) with |X ∩ Y| = 1, trivial ones included.
pub fn directed_separations_order1(d: &Digraph) -> Result<Vec<(Vec<usize>, Vec<usize>)>> {
    let n = d.n();
    if n > SEPARATION_VERTEX_LIMIT {
        return Err(Error::TooLarge(format!("{n} vertices exceeds separation limit {SEPARATION_VERTEX_LIMIT}")));
    }
    let mut out = Vec::new();
    for w in 0..n {
        let rest: Vec<usize> = (0..n).filter(|&v| v != w).collect();
        for mask in 0u32..1 << rest.len() {
            let only_x: Vec<usize> = (0..rest.len()).filter(|&i| mask >> i & 1 == 1).map(|i| rest[i]).collect();
            let only_y: Vec<usize> = (0..rest.len()).filter(|&i| mask >> i & 1 == 0).map(|i| rest[i]).collect();
            let mut x = only_x;
            x.push(w);
            x.sort_unstable();
            let mut y = only_y;
            y.push(w);
            y.sort_unstable();
            if is_directed_separation(d, &x, &y) {
                out.push((x, y));
            }
        }
    }
    Ok(out)
}

/// The pair of M-direction vertex sets belonging to a cut: matching edges meeting X, and
/// matching edges meeting its complement. The pair is ordered so that, for a tight cut, it is a
/// directed separation: if B is the minority of X the X side comes first, otherwise second.
/// None when the two sets do not meet in exactly one vertex.
pub fn cut_separation(g: &BipartiteMatchingGraph, shore: &[usize]) -> Result<Option<(Vec<usize>, Vec<usize>)>> {
    let x = CutSpec::new(g.n(), shore)?;
    let inside = x.mask(g.n());
    let (mut near, mut far) = (Vec::new(), Vec::new());
    for (i, &(a, b)) in g.matching.iter().enumerate() {
        if inside[a] || inside[b] {
            near.push(i);
        }
        if !inside[a] || !inside[b] {
            far.push(i);
        }
    }
    if near.iter().filter(|v| far.contains(v)).count() != 1 {
        return Ok(None);
    }
    let in_a = x.shore.iter().filter(|&&v| g.is_in_a(v)).count();
    let in_b = x.shore.len() - in_a;
    Ok(Some(if in_b < in_a { (near, far) } else { (far, near) }))
}

/// Tightness read off the M-direction: the cut's vertex pair is an order-1 directed separation.
pub fn tight_by_separation(g: &BipartiteMatchingGraph, shore: &[usize]) -> Result<bool> {
    let d = crate::matching::mdirection::m_direction(g).digraph;
    Ok(cut_separation(g, shore)?.is_some_and(|(x, y)| is_directed_separation(&d, &x, &y)))
}
