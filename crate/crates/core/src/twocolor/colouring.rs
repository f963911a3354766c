use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::bits::BitDigraph;
use crate::graph::structure::find_cycle_in;
use crate::graph::Digraph;

pub const DEFAULT_EXACT_LIMIT: usize = 14;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexColouring {
    pub colours: Vec<usize>,
    pub k: usize,
}

impl VertexColouring {
    pub fn new(colours: Vec<usize>, k: usize) -> Self {
        VertexColouring { colours, k }
    }

    /// k is one more than the largest colour used.
    pub fn from_colours(colours: Vec<usize>) -> Self {
        let k = colours.iter().max().map_or(0, |&c| c + 1);
        VertexColouring { colours, k }
    }

    pub fn class(&self, c: usize) -> Vec<usize> {
        (0..self.colours.len()).filter(|&v| self.colours[v] == c).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ColouringCheck {
    Proper,
    Monochromatic { colour: usize, cycle: Vec<usize> },
}

impl ColouringCheck {
    pub fn is_proper(&self) -> bool {
        matches!(self, ColouringCheck::Proper)
    }
}

/// Accepts iff every colour class is acyclic; otherwise returns a monochromatic cycle.
pub fn verify_colouring(d: &Digraph, c: &VertexColouring) -> Result<ColouringCheck> {
    if c.colours.len() < d.n() {
        return Err(Error::PartialColouring(c.colours.len()));
    }
    if c.colours.len() > d.n() {
        return Err(Error::InvalidParameter("colouring has more entries than vertices".into()));
    }
    if let Some(v) = (0..d.n()).find(|&v| c.colours[v] >= c.k) {
        return Err(Error::InvalidParameter(format!("colour of vertex {v} is not below k = {}", c.k)));
    }
    Ok(check_classes(d, &c.colours))
}

/// Monochromatic-cycle check for an arbitrary colour vector.
pub fn check_classes(d: &Digraph, colours: &[usize]) -> ColouringCheck {
    // A monochromatic cycle is a cycle in the subdigraph of monochromatic edges.
    let mono = Digraph::from_edges_unified(d.n(), d.edges().into_iter().filter(|&(u, v)| colours[u] == colours[v]));
    match find_cycle_in(&mono, &vec![true; d.n()]) {
        None => ColouringCheck::Proper,
        Some(cycle) => ColouringCheck::Monochromatic { colour: colours[cycle[0]], cycle },
    }
}

pub fn exact_dichromatic(d: &Digraph) -> Result<(usize, VertexColouring)> {
    exact_dichromatic_with_limit(d, DEFAULT_EXACT_LIMIT)
}

/// Smallest k admitting a proper colouring, by backtracking over k = 1, 2, ...
pub fn exact_dichromatic_with_limit(d: &Digraph, limit: usize) -> Result<(usize, VertexColouring)> {
    let n = d.n();
    if n > limit || n > 64 {
        return Err(Error::TooLarge(format!("{n} vertices exceeds exact limit {limit}")));
    }
    if n == 0 {
        return Ok((0, VertexColouring::new(Vec::new(), 0)));
    }
    let bd = BitDigraph::new(d)?;
    let order = search_order(d);
    for k in 1..=n {
        if let Some(c) = colour_with(&bd, &order, k) {
            return Ok((k, VertexColouring::new(c, k)));
        }
    }
    unreachable!("n colours always suffice")
}

/// Vertices in an order that closes cycles early: each next vertex has the most edges to those
/// already placed, ties broken by degree.
pub fn search_order(d: &Digraph) -> Vec<usize> {
    let n = d.n();
    let deg: Vec<usize> = (0..n).map(|v| d.out_degree(v) + d.in_degree(v)).collect();
    let mut links = vec![0usize; n];
    let mut placed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n).filter(|&v| !placed[v]).max_by_key(|&v| (links[v], deg[v], std::cmp::Reverse(v))).expect("vertex left");
        placed[v] = true;
        order.push(v);
        for &w in d.out(v).iter().chain(d.inn(v)) {
            links[w] += 1;
        }
    }
    order
}

/// Proper k-colouring search with classes kept as bitmasks.
pub fn colour_with(bd: &BitDigraph, order: &[usize], k: usize) -> Option<Vec<usize>> {
    fn rec(bd: &BitDigraph, order: &[usize], i: usize, k: usize, classes: &mut Vec<u64>, col: &mut Vec<usize>) -> bool {
        if i == order.len() {
            return true;
        }
        let v = order[i];
        let used = classes.iter().filter(|&&m| m != 0).count();
        for c in 0..k.min(used + 1) {
            let m = classes[c] | 1 << v;
            if bd.is_acyclic(m) {
                let old = classes[c];
                classes[c] = m;
                col[v] = c;
                if rec(bd, order, i + 1, k, classes, col) {
                    return true;
                }
                classes[c] = old;
            }
        }
        false
    }
    let mut classes = vec![0u64; k];
    let mut col = vec![0usize; bd.n];
    rec(bd, order, 0, k, &mut classes, &mut col).then_some(col)
}

/// The two colour classes of a proper 2-colouring, as disjoint feedback vertex sets:
/// F_i is the class of colour 1 - i, the complement of the acyclic class i.
pub fn fvs_pair_from_colouring(d: &Digraph, c: &VertexColouring) -> Result<(Vec<usize>, Vec<usize>)> {
    if c.k > 2 || !verify_colouring(d, c)?.is_proper() {
        return Err(Error::NotProper);
    }
    Ok((c.class(1), c.class(0)))
}
