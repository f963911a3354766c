//! Deterministic workloads shared by the benchmarks.

use dichromatic::matching::first_perfect_matching;
use dichromatic::hardness::CnfFormula;
use dichromatic::matching::m_direction;
use dichromatic::{BipartiteMatchingGraph, Digraph, UndirectedGraph};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// The k x k grid (k even) with one of its perfect matchings.
pub fn grid_bigraph(k: usize) -> BipartiteMatchingGraph {
    assert!(k % 2 == 0 && k >= 2);
    let mut e = Vec::new();
    for r in 0..k {
        for c in 0..k {
            let v = k * r + c;
            if c + 1 < k {
                e.push((v, v + 1));
            }
            if r + 1 < k {
                e.push((v, v + k));
            }
        }
    }
    let g = UndirectedGraph::from_edges(k * k, e).expect("grid");
    let (a, b): (Vec<usize>, Vec<usize>) = (0..k * k).partition(|v| (v / k + v % k) % 2 == 0);
    let m = first_perfect_matching(&g).expect("grid has a perfect matching");
    BipartiteMatchingGraph::new(g, a, b, m).expect("grid bigraph")
}

/// Non-even digraph on k^2/2 vertices: the M-direction of a planar grid.
pub fn noneven_grid(k: usize) -> Digraph {
    m_direction(&grid_bigraph(k)).digraph
}

pub fn random_digraph(n: usize, p: f64, seed: u64) -> Digraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let e: Vec<(usize, usize)> = (0..n).flat_map(|u| (0..n).map(move |v| (u, v))).filter(|&(u, v)| u != v).collect();
    Digraph::from_edges(n, e.into_iter().filter(|_| rng.gen_bool(p))).expect("random digraph")
}

pub fn random_3cnf(vars: usize, clauses: usize, seed: u64) -> CnfFormula {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let all: Vec<i64> = (1..=vars as i64).collect();
    let cs = (0..clauses).map(|_| all.choose_multiple(&mut rng, 3).map(|&x| if rng.gen_bool(0.5) { x } else { -x }).collect()).collect();
    CnfFormula::new(vars, cs).expect("cnf")
}
