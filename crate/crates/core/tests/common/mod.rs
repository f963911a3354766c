//! Independent oracles and corpora shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;

use dichromatic::graph::{norm, Digraph, UndirectedGraph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// All simple directed cycles as canonical vertex sequences (rotated to start at the minimum),
/// by brute-force DFS over every start vertex.
pub fn oracle_cycles(d: &Digraph) -> BTreeSet<Vec<usize>> {
    fn go(d: &Digraph, path: &mut Vec<usize>, out: &mut BTreeSet<Vec<usize>>) {
        let v = *path.last().unwrap();
        for &w in d.out(v) {
            if w == path[0] {
                let mut c = path.clone();
                let m = (0..c.len()).min_by_key(|&i| c[i]).unwrap();
                c.rotate_left(m);
                out.insert(c);
            } else if !path.contains(&w) {
                path.push(w);
                go(d, path, out);
                path.pop();
            }
        }
    }
    let mut out = BTreeSet::new();
    for s in 0..d.n() {
        go(d, &mut vec![s], &mut out);
    }
    out
}

pub fn oracle_acyclic(d: &Digraph, set: &[usize]) -> bool {
    let keep: BTreeSet<usize> = set.iter().copied().collect();
    oracle_cycles(d).iter().all(|c| !c.iter().all(|v| keep.contains(v)))
}

/// Dichromatic number by trying all colourings with k = 1, 2, ... colours.
pub fn oracle_dichromatic(d: &Digraph) -> usize {
    let cycles = oracle_cycles(d);
    let n = d.n();
    for k in 1..=n.max(1) {
        let total = k.pow(n as u32);
        for code in 0..total {
            let mut c = vec![0; n];
            let mut x = code;
            for slot in c.iter_mut() {
                *slot = x % k;
                x /= k;
            }
            if cycles.iter().all(|cy| cy.iter().any(|&v| c[v] != c[cy[0]])) {
                return k;
            }
        }
    }
    n
}

/// Weighting search written directly from the definition, over oracle cycles.
pub fn oracle_noneven(d: &Digraph) -> bool {
    let edges = d.edges();
    let cycles: Vec<Vec<usize>> = oracle_cycles(d).into_iter().collect();
    let idx = |u: usize, v: usize| edges.iter().position(|&e| e == (u, v)).unwrap();
    let masks: Vec<u64> = cycles
        .iter()
        .map(|c| (0..c.len()).fold(0u64, |m, i| m | 1 << idx(c[i], c[(i + 1) % c.len()])))
        .collect();
    (0u64..1 << edges.len()).any(|w| masks.iter().all(|&m| (m & w).count_ones() % 2 == 1))
}

pub fn random_digraph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Digraph {
    let mut e = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u != v && rng.gen_bool(p) {
                e.push((u, v));
            }
        }
    }
    Digraph::from_edges(n, e).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// One representative per isomorphism class of digraphs on n vertices (n <= 5).
pub fn all_digraphs(n: usize) -> Vec<Digraph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (0..n).map(move |v| (u, v))).filter(|(u, v)| u != v).collect();
    let perms = permutations(n);
    let index = |u: usize, v: usize| pairs.iter().position(|&p| p == (u, v)).unwrap();
    let perm_maps: Vec<Vec<usize>> =
        perms.iter().map(|p| pairs.iter().map(|&(u, v)| index(p[u], p[v])).collect()).collect();
    let mut out = Vec::new();
    'codes: for code in 0u32..(1u32 << pairs.len()) {
        for pm in &perm_maps {
            let mut img = 0u32;
            let mut rest = code;
            while rest != 0 {
                let i = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                img |= 1 << pm[i];
            }
            if img < code {
                continue 'codes;
            }
        }
        let e = (0..pairs.len()).filter(|&i| code >> i & 1 == 1).map(|i| pairs[i]);
        out.push(Digraph::from_edges(n, e).unwrap());
    }
    out
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Exhaustive out-degeneracy over all orderings.
pub fn oracle_out_degeneracy(d: &Digraph) -> usize {
    permutations(d.n())
        .into_iter()
        .map(|order| {
            let mut pos = vec![0; d.n()];
            for (i, &v) in order.iter().enumerate() {
                pos[v] = i;
            }
            (0..d.n()).map(|v| d.out(v).iter().filter(|&&u| pos[u] < pos[v]).count()).max().unwrap_or(0)
        })
        .min()
        .unwrap_or(0)
}

pub fn is_isomorphic(a: &Digraph, b: &Digraph) -> bool {
    a.n() == b.n() && a.m() == b.m() && permutations(a.n()).into_iter().any(|p| &a.relabel(&p) == b)
}

/// Perfect matchings as sorted edge lists, from all edge subsets of size n/2.
pub fn oracle_perfect_matchings(g: &UndirectedGraph) -> BTreeSet<Vec<(usize, usize)>> {
    let edges = g.edges();
    let half = g.n() / 2;
    let mut out = BTreeSet::new();
    if g.n() % 2 == 1 {
        return out;
    }
    assert!(edges.len() <= 24);
    for mask in 0u32..1 << edges.len() {
        if mask.count_ones() as usize != half {
            continue;
        }
        let chosen: Vec<(usize, usize)> = (0..edges.len()).filter(|&i| mask >> i & 1 == 1).map(|i| edges[i]).collect();
        let mut used = vec![false; g.n()];
        if chosen.iter().all(|&(u, v)| !std::mem::replace(&mut used[u], true) & !std::mem::replace(&mut used[v], true)) {
            out.insert(chosen);
        }
    }
    out
}

/// Simple cycles of an undirected graph as sorted edge lists.
pub fn oracle_undirected_cycles(g: &UndirectedGraph) -> BTreeSet<Vec<(usize, usize)>> {
    fn go(g: &UndirectedGraph, path: &mut Vec<usize>, out: &mut BTreeSet<Vec<(usize, usize)>>) {
        let v = *path.last().unwrap();
        for &w in g.neighbours(v) {
            if w == path[0] && path.len() >= 3 {
                let mut e: Vec<(usize, usize)> =
                    (0..path.len()).map(|i| norm(path[i], path[(i + 1) % path.len()])).collect();
                e.sort_unstable();
                out.insert(e);
            } else if w > path[0] && !path.contains(&w) {
                path.push(w);
                go(g, path, out);
                path.pop();
            }
        }
    }
    let mut out = BTreeSet::new();
    for s in 0..g.n() {
        go(g, &mut vec![s], &mut out);
    }
    out
}

/// Cycles whose edges alternate in and out of m: exactly half lie in m and no two m-edges share
/// a vertex (automatic) while each vertex of the cycle is covered by an m-edge of the cycle.
pub fn oracle_alternating_cycles(g: &UndirectedGraph, m: &[(usize, usize)]) -> BTreeSet<Vec<(usize, usize)>> {
    let ms: BTreeSet<(usize, usize)> = m.iter().map(|&(u, v)| norm(u, v)).collect();
    oracle_undirected_cycles(g)
        .into_iter()
        .filter(|c| {
            let inside: Vec<&(usize, usize)> = c.iter().filter(|e| ms.contains(e)).collect();
            let mut verts: Vec<usize> = c.iter().flat_map(|&(u, v)| [u, v]).collect();
            verts.sort_unstable();
            verts.dedup();
            let mut covered: Vec<usize> = inside.iter().flat_map(|&&(u, v)| [u, v]).collect();
            covered.sort_unstable();
            2 * inside.len() == c.len() && covered == verts
        })
        .collect()
}

pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> UndirectedGraph {
    let e: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    UndirectedGraph::from_edges(n, e.into_iter().filter(|_| rng.gen_bool(p))).unwrap()
}

/// Random bipartite graph on sides 0..k and k..2k containing the matching i -- k + i.
pub fn random_bigraph(rng: &mut ChaCha8Rng, k: usize, p: f64) -> (UndirectedGraph, Vec<(usize, usize)>) {
    let mut e: Vec<(usize, usize)> = (0..k).map(|i| (i, k + i)).collect();
    for a in 0..k {
        for b in 0..k {
            if a != b && rng.gen_bool(p) {
                e.push((a, k + b));
            }
        }
    }
    (UndirectedGraph::from_edges(2 * k, e).unwrap(), (0..k).map(|i| (i, k + i)).collect())
}

/// Satisfying assignment by trying all 2^vars assignments; clauses are DIMACS literal lists.
pub fn oracle_sat(vars: usize, clauses: &[Vec<i64>]) -> Option<Vec<bool>> {
    (0u32..1 << vars).map(|code| (0..vars).map(|j| code >> j & 1 == 1).collect::<Vec<bool>>()).find(|beta| {
        clauses.iter().all(|c| c.iter().any(|&l| beta[l.unsigned_abs() as usize - 1] == (l > 0)))
    })
}

/// Random 3-CNF clauses with distinct variables per clause.
pub fn random_3cnf(rng: &mut ChaCha8Rng, vars: usize, clauses: usize) -> Vec<Vec<i64>> {
    (0..clauses)
        .map(|_| {
            let width = rng.gen_range(1..=3.min(vars));
            let mut picked: Vec<i64> = Vec::new();
            while picked.len() < width {
                let v = rng.gen_range(1..=vars as i64);
                if !picked.iter().any(|l| l.abs() == v) {
                    picked.push(if rng.gen_bool(0.5) { v } else { -v });
                }
            }
            picked
        })
        .collect()
}
