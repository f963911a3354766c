use crate::graph::undirected::UndirectedGraph;

/// A bijection `phi` from the vertices of `g` to those of `h` with uv an edge iff phi(u)phi(v) is.
/// Plain backtracking with degree filtering; meant for graphs of a few dozen vertices.
pub fn find_isomorphism(g: &UndirectedGraph, h: &UndirectedGraph) -> Option<Vec<usize>> {
    let n = g.n();
    if n != h.n() || g.m() != h.m() {
        return None;
    }
    let mut dg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut dh: Vec<usize> = (0..n).map(|v| h.degree(v)).collect();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return None;
    }
    // place vertices so that each one after the first of its component has a placed neighbour
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    while order.len() < n {
        let start = (0..n).filter(|&v| !placed[v]).max_by_key(|&v| g.degree(v)).expect("vertex left");
        placed[start] = true;
        order.push(start);
        let mut i = order.len() - 1;
        while i < order.len() {
            for &w in g.neighbours(order[i]) {
                if !placed[w] {
                    placed[w] = true;
                    order.push(w);
                }
            }
            i += 1;
        }
    }
    fn rec(g: &UndirectedGraph, h: &UndirectedGraph, order: &[usize], i: usize, phi: &mut [usize], used: &mut [bool]) -> bool {
        if i == order.len() {
            return true;
        }
        let v = order[i];
        for w in 0..h.n() {
            if used[w] || h.degree(w) != g.degree(v) {
                continue;
            }
            let fits = order[..i].iter().all(|&u| g.has_edge(u, v) == h.has_edge(phi[u], w));
            if fits {
                phi[v] = w;
                used[w] = true;
                if rec(g, h, order, i + 1, phi, used) {
                    return true;
                }
                used[w] = false;
            }
        }
        false
    }
    let mut phi = vec![usize::MAX; n];
    let mut used = vec![false; n];
    rec(g, h, &order, 0, &mut phi, &mut used).then_some(phi)
}
