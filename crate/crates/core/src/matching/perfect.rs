use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::bipartite::{mates, normalise_matching, Matching};
use crate::graph::undirected::{norm, UndirectedGraph};

pub const DEFAULT_MATCHING_CAP: usize = 100_000;

/// Calls `f` on every perfect matching of `g` (normalised, sorted).
pub fn for_each_perfect_matching<F: FnMut(&Matching) -> ControlFlow<()>>(g: &UndirectedGraph, mut f: F) -> ControlFlow<()> {
    fn rec<F: FnMut(&Matching) -> ControlFlow<()>>(
        g: &UndirectedGraph,
        covered: &mut Vec<bool>,
        cur: &mut Vec<(usize, usize)>,
        f: &mut F,
    ) -> ControlFlow<()> {
        let Some(u) = covered.iter().position(|&c| !c) else {
            return f(&normalise_matching(cur));
        };
        // dead end if an uncovered vertex has no uncovered neighbour left
        for v in 0..g.n() {
            if !covered[v] && g.neighbours(v).iter().all(|&w| covered[w]) {
                return ControlFlow::Continue(());
            }
        }
        covered[u] = true;
        for &w in g.neighbours(u) {
            if !covered[w] {
                covered[w] = true;
                cur.push((u, w));
                rec(g, covered, cur, f)?;
                cur.pop();
                covered[w] = false;
            }
        }
        covered[u] = false;
        ControlFlow::Continue(())
    }
    if g.n() % 2 == 1 {
        return ControlFlow::Continue(());
    }
    rec(g, &mut vec![false; g.n()], &mut Vec::new(), &mut f)
}

/// All perfect matchings, or `EnumerationCapExceeded` past `cap`.
pub fn perfect_matchings(g: &UndirectedGraph, cap: usize) -> Result<Vec<Matching>> {
    let mut out = Vec::new();
    let flow = for_each_perfect_matching(g, |m| {
        if out.len() == cap {
            return ControlFlow::Break(());
        }
        out.push(m.clone());
        ControlFlow::Continue(())
    });
    if flow.is_break() {
        return Err(Error::EnumerationCapExceeded { cap, seen: cap });
    }
    Ok(out)
}

pub fn first_perfect_matching(g: &UndirectedGraph) -> Option<Matching> {
    let mut found = None;
    let _ = for_each_perfect_matching(g, |m| {
        found = Some(m.clone());
        ControlFlow::Break(())
    });
    found
}

pub fn has_perfect_matching(g: &UndirectedGraph) -> bool {
    first_perfect_matching(g).is_some()
}

/// Connected, with at least one edge, and every edge in some perfect matching.
pub fn is_matching_covered(g: &UndirectedGraph) -> Result<bool> {
    if g.m() == 0 || !g.is_connected() {
        return Ok(false);
    }
    let mut seen = vec![false; g.m()];
    for m in perfect_matchings(g, DEFAULT_MATCHING_CAP)? {
        for (u, v) in m {
            seen[g.edge_index(u, v).expect("matching edge")] = true;
        }
    }
    Ok(seen.into_iter().all(|b| b))
}

/// Alternating cycles as vertex sequences starting at their least vertex, whose first edge is
/// a matching edge.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlternatingCycleList {
    pub cycles: Vec<Vec<usize>>,
    pub complete: bool,
}

/// Calls `f` on each M-alternating cycle exactly once.
pub fn for_each_alternating_cycle<F: FnMut(&[usize]) -> ControlFlow<()>>(
    g: &UndirectedGraph,
    m: &[(usize, usize)],
    mut f: F,
) -> Result<ControlFlow<()>> {
    let mate = mates(g, m)?;
    // path alternates matching, non-matching, ...; its last edge is always a matching edge
    fn extend<F: FnMut(&[usize]) -> ControlFlow<()>>(
        g: &UndirectedGraph,
        mate: &[usize],
        path: &mut Vec<usize>,
        on: &mut Vec<bool>,
        f: &mut F,
    ) -> ControlFlow<()> {
        let start = path[0];
        let x = *path.last().expect("path");
        for &w in g.neighbours(x) {
            if w == mate[x] {
                continue;
            }
            if w == start {
                if path.len() >= 4 {
                    f(path)?;
                }
                continue;
            }
            if w < start || on[w] || on[mate[w]] {
                continue;
            }
            let y = mate[w];
            if y < start {
                continue;
            }
            path.push(w);
            path.push(y);
            on[w] = true;
            on[y] = true;
            extend(g, mate, path, on, f)?;
            on[w] = false;
            on[y] = false;
            path.pop();
            path.pop();
        }
        ControlFlow::Continue(())
    }
    let mut on = vec![false; g.n()];
    for s in 0..g.n() {
        if mate[s] < s {
            continue;
        }
        let mut path = vec![s, mate[s]];
        on[s] = true;
        on[mate[s]] = true;
        let flow = extend(g, &mate, &mut path, &mut on, &mut f);
        on[s] = false;
        on[mate[s]] = false;
        if flow.is_break() {
            return Ok(flow);
        }
    }
    Ok(ControlFlow::Continue(()))
}

pub fn alternating_cycles(g: &UndirectedGraph, m: &[(usize, usize)], cap: usize) -> Result<AlternatingCycleList> {
    let mut cycles = Vec::new();
    let flow = for_each_alternating_cycle(g, m, |c| {
        if cycles.len() == cap {
            return ControlFlow::Break(());
        }
        cycles.push(c.to_vec());
        ControlFlow::Continue(())
    })?;
    Ok(AlternatingCycleList { cycles, complete: flow.is_continue() })
}

/// Some M-alternating cycle avoiding every vertex in `avoid`, if there is one.
pub fn find_alternating_cycle(g: &UndirectedGraph, m: &[(usize, usize)], avoid: &[usize]) -> Result<Option<Vec<usize>>> {
    let mut keep = vec![true; g.n()];
    for &v in avoid {
        keep[v] = false;
    }
    let verts: Vec<usize> = (0..g.n()).filter(|&v| keep[v]).collect();
    let (sub, back) = g.induced(&verts);
    let mut new_id = vec![usize::MAX; g.n()];
    for (i, &v) in back.iter().enumerate() {
        new_id[v] = i;
    }
    let sub_m: Vec<(usize, usize)> =
        m.iter().filter(|&&(u, v)| keep[u] && keep[v]).map(|&(u, v)| (new_id[u], new_id[v])).collect();
    let mut found = None;
    let _ = for_each_alternating_cycle(&sub, &sub_m, |c| {
        found = Some(c.iter().map(|&v| back[v]).collect());
        ControlFlow::Break(())
    })?;
    Ok(found)
}

/// Matching edges of an alternating cycle given as a vertex sequence whose first edge is matched.
pub fn cycle_matching_edges(cycle: &[usize]) -> Vec<(usize, usize)> {
    cycle.chunks(2).map(|p| norm(p[0], p[1])).collect()
}

/// Edges of a cycle given as a vertex sequence, normalised.
pub fn cycle_edges(cycle: &[usize]) -> Vec<(usize, usize)> {
    (0..cycle.len()).map(|i| norm(cycle[i], cycle[(i + 1) % cycle.len()])).collect()
}
