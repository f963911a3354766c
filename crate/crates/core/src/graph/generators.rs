use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::bipartite::BipartiteMatchingGraph;
use crate::graph::digraph::Digraph;
use crate::graph::undirected::UndirectedGraph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    DirectedCycle(usize),
    Bidirected(UndirectedGraph),
    OddBicycle(usize),
    F7,
    OddWheel(usize),
    /// Parameter is the order 2m + 2 of the staircase.
    Staircase(usize),
    Tricorn,
    GridExample,
    ListExample,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Generated {
    Digraph(Digraph),
    Graph(UndirectedGraph),
}

pub fn generate(family: &Family) -> Result<Generated> {
    Ok(match family {
        Family::DirectedCycle(n) => Generated::Digraph(directed_cycle(*n)?),
        Family::Bidirected(g) => Generated::Digraph(bidirected(g)),
        Family::OddBicycle(k) => Generated::Digraph(odd_bicycle(*k)?),
        Family::F7 => Generated::Digraph(f7()),
        Family::OddWheel(k) => Generated::Graph(odd_wheel(*k)?),
        Family::Staircase(order) => Generated::Graph(staircase(*order)?),
        Family::Tricorn => Generated::Graph(tricorn()),
        Family::GridExample => Generated::Digraph(grid_example()),
        Family::ListExample => Generated::Digraph(list_example()),
    })
}

pub fn directed_cycle(n: usize) -> Result<Digraph> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("directed cycle needs n >= 2, got {n}")));
    }
    Digraph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn bidirected(g: &UndirectedGraph) -> Digraph {
    Digraph::from_edges_unified(g.n(), g.edges().into_iter().flat_map(|(u, v)| [(u, v), (v, u)]))
}

pub fn cycle_graph(n: usize) -> Result<UndirectedGraph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("cycle needs n >= 3, got {n}")));
    }
    UndirectedGraph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn odd_bicycle(k: usize) -> Result<Digraph> {
    if k < 3 || k % 2 == 0 {
        return Err(Error::InvalidParameter(format!("odd bicycle needs odd k >= 3, got {k}")));
    }
    Ok(bidirected(&cycle_graph(k)?))
}

/// Vertex set Z_7 with edges i -> i+1 and i -> i+5.
pub fn f7() -> Digraph {
    Digraph::from_edges(7, (0..7).flat_map(|i| [(i, (i + 1) % 7), (i, (i + 5) % 7)])).expect("F7")
}

/// Hub 0 joined to the rim cycle 1..=k.
pub fn odd_wheel(k: usize) -> Result<UndirectedGraph> {
    if k < 3 || k % 2 == 0 {
        return Err(Error::InvalidParameter(format!("odd wheel needs odd k >= 3, got {k}")));
    }
    let rim = (0..k).map(|i| (1 + i, 1 + (i + 1) % k));
    UndirectedGraph::from_edges(k + 1, (1..=k).map(|i| (0, i)).chain(rim))
}

/// Vertex ids of the staircase of the given order: x, y, u_1..u_m, v_1..v_m.
#[derive(Clone, Copy, Debug)]
pub struct StaircaseIds {
    pub m: usize,
}

impl StaircaseIds {
    pub fn x(&self) -> usize {
        0
    }
    pub fn y(&self) -> usize {
        1
    }
    /// 1-based index along the inner path.
    pub fn u(&self, i: usize) -> usize {
        1 + i
    }
    pub fn v(&self, i: usize) -> usize {
        1 + self.m + i
    }
}

pub fn staircase(order: usize) -> Result<UndirectedGraph> {
    if order < 6 || order % 2 == 1 {
        return Err(Error::InvalidParameter(format!("staircase order must be even and >= 6, got {order}")));
    }
    let s = StaircaseIds { m: (order - 2) / 2 };
    let m = s.m;
    let mut e = vec![(s.x(), s.y()), (s.x(), s.u(1)), (s.x(), s.v(1)), (s.y(), s.u(m)), (s.y(), s.v(m))];
    for i in 1..m {
        e.push((s.u(i), s.u(i + 1)));
        e.push((s.v(i), s.v(i + 1)));
    }
    for i in 1..=m {
        e.push((s.u(i), s.v(i)));
    }
    UndirectedGraph::from_edges(order, e)
}

/// The triangular prism (staircase of order 6).
pub fn prism() -> UndirectedGraph {
    staircase(6).expect("prism")
}

/// The prism matching made of the three edges joining its triangles.
pub fn prism_rung_matching() -> Vec<(usize, usize)> {
    let s = StaircaseIds { m: 2 };
    vec![(s.x(), s.y()), (s.u(1), s.u(2)), (s.v(1), s.v(2))]
}

/// Tricorn vertex ids: centre 0, triangles l = 1..=3, t = 4..=6, r = 7..=9.
pub mod tricorn_ids {
    pub const CENTRE: usize = 0;
    pub const L: [usize; 3] = [1, 2, 3];
    pub const T: [usize; 3] = [4, 5, 6];
    pub const R: [usize; 3] = [7, 8, 9];
}

pub fn tricorn() -> UndirectedGraph {
    use tricorn_ids::*;
    let mut e = Vec::new();
    for tri in [L, T, R] {
        e.push((tri[0], tri[1]));
        e.push((tri[0], tri[2]));
        e.push((tri[1], tri[2]));
        e.push((CENTRE, tri[0]));
    }
    // connectors between the outer corners
    e.push((T[2], R[1]));
    e.push((L[1], T[1]));
    e.push((L[2], R[2]));
    UndirectedGraph::from_edges(10, e).expect("tricorn")
}

/// An 8-vertex strongly planar digraph, the M-direction of the 4x4 grid under a fixed matching.
/// Vertex ids: ab=0, ei=1, fj=2, mn=3, cg=4, dh=5, kl=6, op=7.
pub fn grid_example() -> Digraph {
    let edges = [
        (0, 2),
        (0, 4),
        (1, 2),
        (1, 0),
        (2, 1),
        (2, 3),
        (2, 6),
        (3, 1),
        (4, 5),
        (4, 2),
        (4, 6),
        (5, 4),
        (6, 5),
        (6, 7),
        (7, 3),
        (7, 6),
    ];
    Digraph::from_edges(8, edges).expect("grid example")
}

/// The 4x4 grid (rows a b c d / e f g h / i j k l / m n o p, ids 0..16 row-major) with the
/// matching whose M-direction is `grid_example`, listed in the same vertex order.
pub fn grid_example_bigraph() -> BipartiteMatchingGraph {
    let mut e = Vec::new();
    for r in 0..4 {
        for c in 0..4 {
            let v = 4 * r + c;
            if c < 3 {
                e.push((v, v + 1));
            }
            if r < 3 {
                e.push((v, v + 4));
            }
        }
    }
    let g = UndirectedGraph::from_edges(16, e).expect("grid");
    let part_a: Vec<usize> = (0..16).filter(|v| (v / 4 + v % 4) % 2 == 1).collect();
    let part_b: Vec<usize> = (0..16).filter(|v| (v / 4 + v % 4) % 2 == 0).collect();
    let (a, b, c, d, e_, f, g_, h, i, j, k, l, m, n, o, p) = (0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15);
    let matching = vec![(b, a), (e_, i), (j, f), (m, n), (g_, c), (d, h), (l, k), (o, p)];
    BipartiteMatchingGraph::new(g, part_a, part_b, matching).expect("grid bigraph")
}

/// Bidirected 6-cycle on v1..v6 (ids 0..6) plus the digon v1 v4.
pub fn list_example() -> Digraph {
    let mut g: Vec<(usize, usize)> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
    g.push((0, 3));
    bidirected(&UndirectedGraph::from_edges(6, g).expect("list example"))
}

pub fn complete_bipartite(p: usize, q: usize) -> UndirectedGraph {
    UndirectedGraph::from_edges(p + q, (0..p).flat_map(|a| (0..q).map(move |b| (a, p + b)))).expect("K_pq")
}

/// 3-dimensional cube graph; vertex ids are bit strings.
pub fn cube() -> UndirectedGraph {
    let e = (0..8usize).flat_map(|v| (0..3).map(move |b| (v, v ^ (1 << b)))).filter(|&(u, v)| u < v);
    UndirectedGraph::from_edges(8, e).expect("cube")
}

/// Heawood graph: incidence graph of the Fano plane. Points 0..7, lines 7..14.
pub fn heawood() -> UndirectedGraph {
    let e = (0..7usize).flat_map(|i| [0usize, 1, 3].into_iter().map(move |s| (i, 7 + (i + 7 - s) % 7)));
    UndirectedGraph::from_edges(14, e).expect("heawood")
}
