use crate::error::{Error, Result};
use crate::evenness::packing::for_each_subset;
use crate::graph::structure::is_strongly_connected;
use crate::graph::undirected::UndirectedGraph;
use crate::graph::Digraph;
use crate::matching::perfect::has_perfect_matching;

pub const EXTEND_EDGE_LIMIT: usize = 64;

/// Connected, at least 2k + 2 vertices, and every k-matching extends to a perfect matching.
pub fn is_k_extendable(g: &UndirectedGraph, k: usize) -> Result<bool> {
    if g.m() > EXTEND_EDGE_LIMIT {
        return Err(Error::TooLarge(format!("{} edges exceeds limit {EXTEND_EDGE_LIMIT}", g.m())));
    }
    if !g.is_connected() || g.n() < 2 * k + 2 || !has_perfect_matching(g) {
        return Ok(false);
    }
    let edges = g.edges();
    fn rec(g: &UndirectedGraph, edges: &[(usize, usize)], from: usize, left: usize, used: &mut Vec<bool>) -> bool {
        if left == 0 {
            let rest: Vec<usize> = (0..g.n()).filter(|&v| !used[v]).collect();
            return has_perfect_matching(&g.induced(&rest).0);
        }
        for i in from..edges.len() {
            let (u, v) = edges[i];
            if used[u] || used[v] {
                continue;
            }
            used[u] = true;
            used[v] = true;
            let ok = rec(g, edges, i + 1, left - 1, used);
            used[u] = false;
            used[v] = false;
            if !ok {
                return false;
            }
        }
        true
    }
    Ok(rec(g, &edges, 0, k, &mut vec![false; g.n()]))
}

pub const CONNECTIVITY_VERTEX_LIMIT: usize = 24;

/// Largest k with |V| >= k + 1 and D - S strongly connected whenever |S| < k.
pub fn strong_vertex_connectivity(d: &Digraph) -> Result<usize> {
    let n = d.n();
    if n > CONNECTIVITY_VERTEX_LIMIT {
        return Err(Error::TooLarge(format!("{n} vertices exceeds limit {CONNECTIVITY_VERTEX_LIMIT}")));
    }
    for s in 0..n.saturating_sub(1) {
        let mut broken = false;
        for_each_subset(n, s, &mut |mask| {
            if !broken {
                let del: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
                broken = !is_strongly_connected(&d.remove_vertices(&del).0);
            }
        });
        if broken {
            return Ok(s);
        }
    }
    Ok(n.saturating_sub(1))
}

pub fn is_strongly_k_connected(d: &Digraph, k: usize) -> Result<bool> {
    Ok(strong_vertex_connectivity(d)? >= k)
}
