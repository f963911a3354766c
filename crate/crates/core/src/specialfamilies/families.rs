use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::bipartite::{mates, normalise_matching, Matching};
use crate::graph::generators::{odd_wheel, staircase, tricorn, tricorn_ids, StaircaseIds};
use crate::graph::undirected::{norm, UndirectedGraph};
use crate::matching::mcolour::{verify_m_colouring, EdgeColouring};
use crate::matching::perfect::{for_each_alternating_cycle, for_each_perfect_matching};

/// The hub's matching edge gets colour 0, every other matching edge colour 1.
/// All alternating cycles of an odd wheel pass through the hub.
pub fn wheel_matching_colouring(k: usize, m: &[(usize, usize)]) -> Result<EdgeColouring> {
    let w = odd_wheel(k)?;
    let mate = mates(&w, m)?;
    Ok(EdgeColouring::from_pairs(normalise_matching(m).into_iter().map(|e| (e, usize::from(e != norm(0, mate[0]))))))
}

/// Colours of all edges of a staircase of order divisible by 4; its restriction to any perfect
/// matching is a proper M-colouring. Ids follow `staircase(order)`.
pub fn staircase_super_colouring(order: usize) -> Result<EdgeColouring> {
    if order < 8 || order % 4 != 0 {
        return Err(Error::InvalidOrder(order));
    }
    let s = StaircaseIds { m: (order - 2) / 2 };
    let m = s.m;
    let mut c = EdgeColouring::default();
    c.set(s.x(), s.y(), 0);
    // outer path x, v_1, ..., v_m, y has m + 1 edges: pairs 0 0 1 1 0 0 ..., the last pair 1 1
    let outer = |j: usize| if j + 2 > m { 1 } else { (j / 2) % 2 };
    c.set(s.x(), s.v(1), outer(0));
    for i in 1..m {
        c.set(s.v(i), s.v(i + 1), outer(i));
        c.set(s.u(i), s.u(i + 1), 1 - outer(i));
    }
    c.set(s.v(m), s.y(), outer(m));
    c.set(s.x(), s.u(1), 1);
    c.set(s.y(), s.u(m), 0);
    for i in 1..=m {
        c.set(s.v(i), s.u(i), i % 2);
    }
    debug_assert_eq!(c.colours.len(), staircase(order)?.m());
    Ok(c)
}

/// A perfect matching that has an alternating cycle monochromatic under `c`, with that cycle.
/// None means `c` restricts to a proper M-colouring for every perfect matching.
pub fn super_colouring_violation(g: &UndirectedGraph, c: &EdgeColouring) -> Result<Option<(Matching, Vec<usize>)>> {
    if let Some((u, v)) = g.edges().into_iter().find(|&(u, v)| c.get(u, v).is_none()) {
        return Err(Error::InvalidParameter(format!("edge {{{u}, {v}}} has no colour")));
    }
    let mut out = Ok(None);
    let _ = for_each_perfect_matching(g, |m| match verify_m_colouring(g, m, c) {
        Ok(None) => ControlFlow::Continue(()),
        Ok(Some(cycle)) => {
            out = Ok(Some((m.clone(), cycle)));
            ControlFlow::Break(())
        }
        Err(e) => {
            out = Err(e);
            ControlFlow::Break(())
        }
    });
    out
}

/// Exhaustive search over all 2-colourings of the edges for one that is proper for every
/// perfect matching. Colourings and their complements are searched once.
pub fn find_super_colouring(g: &UndirectedGraph) -> Result<Option<EdgeColouring>> {
    let edges = g.edges();
    if edges.len() > 26 {
        return Err(Error::TooLarge(format!("{} edges for exhaustive colouring search", edges.len())));
    }
    // matching-edge sets of every alternating cycle of every perfect matching
    let mut sets: Vec<u32> = Vec::new();
    let mut err = None;
    let _ = for_each_perfect_matching(g, |m| {
        let r = for_each_alternating_cycle(g, m, |cyc| {
            let s = cyc.chunks(2).fold(0u32, |acc, p| acc | 1 << g.edge_index(p[0], p[1]).expect("edge"));
            sets.push(s);
            ControlFlow::Continue(())
        });
        if let Err(e) = r {
            err = Some(e);
            return ControlFlow::Break(());
        }
        ControlFlow::Continue(())
    });
    if let Some(e) = err {
        return Err(e);
    }
    sets.sort_unstable();
    sets.dedup();
    let e = edges.len();
    // edge 0 keeps colour 0: a colouring and its complement are equally good
    for mask in 0u32..1 << e.saturating_sub(1) {
        let ones = mask << 1;
        if sets.iter().all(|&s| s & ones != s && s & ones != 0) {
            let c = EdgeColouring::from_pairs(edges.iter().enumerate().map(|(i, &(u, v))| ((u, v), (ones >> i & 1) as usize)));
            return Ok(Some(c));
        }
    }
    Ok(None)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum TricornType {
    /// Contains one triangle edge of the outer face; that edge alone forces the matching.
    One,
    /// Contains no triangle edge of the outer face but two outer connecting edges.
    Two,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TricornColouring {
    pub kind: TricornType,
    /// The edges coloured 0; they form a forcing set of the matching.
    pub forcing: Vec<(usize, usize)>,
    pub colouring: EdgeColouring,
}

pub fn tricorn_outer_triangle_edges() -> [(usize, usize); 3] {
    use tricorn_ids::*;
    [(L[1], L[2]), (T[1], T[2]), (R[1], R[2])]
}

pub fn tricorn_connectors() -> [(usize, usize); 3] {
    use tricorn_ids::*;
    [norm(T[2], R[1]), norm(L[1], T[1]), norm(L[2], R[2])]
}

/// Colour a perfect matching of `tricorn()` by its type.
pub fn tricorn_matching_colouring(m: &[(usize, usize)]) -> Result<TricornColouring> {
    mates(&tricorn(), m)?;
    let m = normalise_matching(m);
    let tri: Vec<(usize, usize)> = tricorn_outer_triangle_edges().into_iter().filter(|e| m.contains(e)).collect();
    let con: Vec<(usize, usize)> = tricorn_connectors().into_iter().filter(|e| m.contains(e)).collect();
    let (kind, forcing) = match (tri.len(), con.len()) {
        (1, _) => (TricornType::One, tri),
        (0, 2) => (TricornType::Two, con),
        _ => return Err(Error::UnclassifiableMatching),
    };
    let colouring = EdgeColouring::from_pairs(m.iter().map(|&e| (e, usize::from(!forcing.contains(&e)))));
    Ok(TricornColouring { kind, forcing, colouring })
}

/// Planar bipartite graph on a1..a4 (ids 0..4) and b1..b4 (ids 4..8) without an edge
/// 2-colouring that is proper for all of its perfect matchings.
pub fn no_super_colouring_example() -> UndirectedGraph {
    let (a, b) = (|i: usize| i - 1, |i: usize| 3 + i);
    let e = [
        (a(1), b(1)),
        (a(1), b(2)),
        (a(1), b(3)),
        (a(2), b(2)),
        (a(2), b(3)),
        (a(2), b(4)),
        (a(3), b(3)),
        (a(3), b(4)),
        (a(4), b(1)),
        (a(4), b(2)),
        (a(3), b(1)),
        (a(3), b(2)),
    ];
    UndirectedGraph::from_edges(8, e).expect("fixture")
}
