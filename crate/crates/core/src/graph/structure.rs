use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::digraph::Digraph;

/// Strong components, listed in reverse topological order of the condensation
/// (a component appears before every component that has an edge into it).
/// Each part is sorted.
pub fn strong_components(d: &Digraph) -> Vec<Vec<usize>> {
    let n = d.n();
    let mut index = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut comps = Vec::new();
    let mut next = 0usize;
    // explicit DFS stack of (vertex, next out-neighbour position)
    let mut call: Vec<(usize, usize)> = Vec::new();
    for s in 0..n {
        if index[s] != usize::MAX {
            continue;
        }
        call.push((s, 0));
        index[s] = next;
        low[s] = next;
        next += 1;
        stack.push(s);
        on_stack[s] = true;
        while let Some(&mut (v, ref mut pos)) = call.last_mut() {
            if *pos < d.out(v).len() {
                let w = d.out(v)[*pos];
                *pos += 1;
                if index[w] == usize::MAX {
                    index[w] = next;
                    low[w] = next;
                    next += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
            } else {
                call.pop();
                if let Some(&(p, _)) = call.last() {
                    low[p] = low[p].min(low[v]);
                }
                if low[v] == index[v] {
                    let mut comp = Vec::new();
                    loop {
                        let w = stack.pop().expect("tarjan stack");
                        on_stack[w] = false;
                        comp.push(w);
                        if w == v {
                            break;
                        }
                    }
                    comp.sort_unstable();
                    comps.push(comp);
                }
            }
        }
    }
    comps
}

pub fn is_strongly_connected(d: &Digraph) -> bool {
    if d.n() == 0 {
        return true;
    }
    let fwd = reachable_from(d, 0, false);
    let bwd = reachable_from(d, 0, true);
    fwd.iter().all(|&x| x) && bwd.iter().all(|&x| x)
}

/// Reachability from `s` (following edges backwards if `reverse`).
pub fn reachable_from(d: &Digraph, s: usize, reverse: bool) -> Vec<bool> {
    let mut seen = vec![false; d.n()];
    seen[s] = true;
    let mut q = VecDeque::from([s]);
    while let Some(u) = q.pop_front() {
        let nb = if reverse { d.inn(u) } else { d.out(u) };
        for &v in nb {
            if !seen[v] {
                seen[v] = true;
                q.push_back(v);
            }
        }
    }
    seen
}

/// Vertices whose removal destroys strong connectivity.
pub fn cut_vertices(d: &Digraph) -> Result<Vec<usize>> {
    if !is_strongly_connected(d) {
        return Err(Error::NotStronglyConnected);
    }
    Ok((0..d.n())
        .filter(|&v| {
            let (rest, _) = d.remove_vertices(&[v]);
            !is_strongly_connected(&rest)
        })
        .collect())
}

/// The two halves of a 1-sum split at a cut vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OneSumSplit {
    pub vertex: usize,
    /// Side whose vertices have no in-edges from `y` (a source component of D - v).
    pub x: Vec<usize>,
    pub y: Vec<usize>,
    /// D with Y and v identified: vertices of X in order, then the identification vertex.
    pub d1: Digraph,
    /// D with X and v identified: vertices of Y in order, then the identification vertex.
    pub d2: Digraph,
    /// Old id to id in d1 (`usize::MAX` for vertices of Y).
    pub map1: Vec<usize>,
    /// Old id to id in d2 (`usize::MAX` for vertices of X).
    pub map2: Vec<usize>,
    pub v1: usize,
    pub v2: usize,
}

pub fn one_sum_split(d: &Digraph, v: usize) -> Result<OneSumSplit> {
    if v >= d.n() {
        return Err(Error::NotACutVertex(v));
    }
    if !is_strongly_connected(d) {
        return Err(Error::NotStronglyConnected);
    }
    let (rest, back) = d.remove_vertices(&[v]);
    let comps = strong_components(&rest);
    if comps.len() < 2 {
        return Err(Error::NotACutVertex(v));
    }
    // The last component in reverse topological order is a source component. When D - v falls
    // apart into several weak components, take the whole weak component containing it instead.
    let source = comps.last().expect("components");
    let weak = rest.underlying().components();
    let mut in_x = vec![false; d.n()];
    let part: &[usize] = match weak.iter().find(|w| w.contains(&source[0])) {
        Some(w) if weak.len() > 1 => w,
        _ => source,
    };
    for &c in part {
        in_x[back[c]] = true;
    }
    let x: Vec<usize> = (0..d.n()).filter(|&u| in_x[u]).collect();
    let y: Vec<usize> = (0..d.n()).filter(|&u| u != v && !in_x[u]).collect();
    debug_assert!(d.edges().iter().all(|&(a, b)| !(in_x[b] && !in_x[a] && a != v)));

    let mut map1 = vec![usize::MAX; d.n()];
    for (i, &u) in x.iter().enumerate() {
        map1[u] = i;
    }
    let v1 = x.len();
    let mut full1 = map1.clone();
    for &u in y.iter().chain(std::iter::once(&v)) {
        full1[u] = v1;
    }
    map1[v] = v1;
    let d1 = d.quotient(&full1, x.len() + 1);

    let mut map2 = vec![usize::MAX; d.n()];
    for (i, &u) in y.iter().enumerate() {
        map2[u] = i;
    }
    let v2 = y.len();
    let mut full2 = map2.clone();
    for &u in x.iter().chain(std::iter::once(&v)) {
        full2[u] = v2;
    }
    map2[v] = v2;
    let d2 = d.quotient(&full2, y.len() + 1);
    Ok(OneSumSplit { vertex: v, x, y, d1, d2, map1, map2, v1, v2 })
}

pub fn is_butterfly_contractible(d: &Digraph, u: usize, v: usize) -> bool {
    d.has_edge(u, v) && (d.out_degree(u) == 1 || d.in_degree(v) == 1)
}

/// Butterfly contraction of (u, v). Returns the contracted digraph and the old-to-new id map
/// (u and v share their image). If (u, v) is the only out-edge of u, u is removed and the
/// merged vertex takes v's place; otherwise v is removed and the merged vertex takes u's place.
pub fn butterfly_contract(d: &Digraph, u: usize, v: usize) -> Result<(Digraph, Vec<usize>)> {
    if !is_butterfly_contractible(d, u, v) {
        return Err(Error::NotButterflyContractible(u, v));
    }
    let (gone, stay) = if d.out_degree(u) == 1 { (u, v) } else { (v, u) };
    let mut map = vec![0usize; d.n()];
    let mut next = 0;
    for (w, slot) in map.iter_mut().enumerate() {
        if w != gone {
            *slot = next;
            next += 1;
        }
    }
    map[gone] = map[stay];
    Ok((d.quotient(&map, d.n() - 1), map))
}

/// Length of a shortest directed cycle, or None for acyclic digraphs.
pub fn girth(d: &Digraph) -> Option<usize> {
    let mut best: Option<usize> = None;
    for s in 0..d.n() {
        let mut dist = vec![usize::MAX; d.n()];
        dist[s] = 0;
        let mut q = VecDeque::from([s]);
        while let Some(u) = q.pop_front() {
            for &w in d.out(u) {
                if w == s {
                    let len = dist[u] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                } else if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    q.push_back(w);
                }
            }
        }
    }
    best
}

/// Topological order, or None if the digraph has a directed cycle.
pub fn topological_order(d: &Digraph) -> Option<Vec<usize>> {
    let mut indeg: Vec<usize> = (0..d.n()).map(|v| d.in_degree(v)).collect();
    let mut q: VecDeque<usize> = (0..d.n()).filter(|&v| indeg[v] == 0).collect();
    let mut order = Vec::with_capacity(d.n());
    while let Some(u) = q.pop_front() {
        order.push(u);
        for &w in d.out(u) {
            indeg[w] -= 1;
            if indeg[w] == 0 {
                q.push_back(w);
            }
        }
    }
    (order.len() == d.n()).then_some(order)
}

pub fn is_acyclic(d: &Digraph) -> bool {
    topological_order(d).is_some()
}

/// A directed cycle in the subdigraph induced by the vertices with `keep[v]`.
pub fn find_cycle_in(d: &Digraph, keep: &[bool]) -> Option<Vec<usize>> {
    // 0 = unvisited, 1 = on stack, 2 = done
    let mut state = vec![0u8; d.n()];
    let mut parent = vec![usize::MAX; d.n()];
    for s in 0..d.n() {
        if !keep[s] || state[s] != 0 {
            continue;
        }
        let mut call: Vec<(usize, usize)> = vec![(s, 0)];
        state[s] = 1;
        while let Some(&mut (v, ref mut pos)) = call.last_mut() {
            if *pos < d.out(v).len() {
                let w = d.out(v)[*pos];
                *pos += 1;
                if !keep[w] {
                    continue;
                }
                if state[w] == 1 {
                    let mut cyc = vec![v];
                    let mut x = v;
                    while x != w {
                        x = parent[x];
                        cyc.push(x);
                    }
                    cyc.reverse();
                    return Some(cyc);
                }
                if state[w] == 0 {
                    state[w] = 1;
                    parent[w] = v;
                    call.push((w, 0));
                }
            } else {
                state[v] = 2;
                call.pop();
            }
        }
    }
    None
}

/// Exact out-degeneracy: repeatedly place the vertex of minimum residual out-degree last.
/// The returned ordering lists vertices from first to last.
pub fn out_degeneracy(d: &Digraph) -> (usize, Vec<usize>) {
    let n = d.n();
    let mut alive = vec![true; n];
    let mut deg: Vec<usize> = (0..n).map(|v| d.out_degree(v)).collect();
    let mut rev = Vec::with_capacity(n);
    let mut value = 0;
    for _ in 0..n {
        let v = (0..n).filter(|&v| alive[v]).min_by_key(|&v| (deg[v], v)).expect("vertex left");
        value = value.max(deg[v]);
        alive[v] = false;
        rev.push(v);
        for &u in d.inn(v) {
            if alive[u] {
                deg[u] -= 1;
            }
        }
    }
    rev.reverse();
    (value, rev)
}

/// Maximum number of out-neighbours placed before a vertex in `order`.
pub fn back_degree(d: &Digraph, order: &[usize]) -> Option<usize> {
    if order.len() != d.n() {
        return None;
    }
    let mut pos = vec![usize::MAX; d.n()];
    for (i, &v) in order.iter().enumerate() {
        if v >= d.n() || pos[v] != usize::MAX {
            return None;
        }
        pos[v] = i;
    }
    Some((0..d.n()).map(|v| d.out(v).iter().filter(|&&u| pos[u] < pos[v]).count()).max().unwrap_or(0))
}
