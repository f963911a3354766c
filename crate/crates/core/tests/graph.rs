mod common;

use common::*;
use dichromatic::graph::format::*;
use dichromatic::graph::generators::*;
use dichromatic::graph::structure::*;
use dichromatic::graph::{Digraph, UndirectedGraph};
use dichromatic::Error;
use proptest::prelude::*;

fn dg(n: usize, e: &[(usize, usize)]) -> Digraph {
    Digraph::from_edges(n, e.iter().copied()).unwrap()
}

fn bipath3() -> Digraph {
    dg(3, &[(0, 1), (1, 0), (1, 2), (2, 1)])
}

fn digon() -> Digraph {
    dg(2, &[(0, 1), (1, 0)])
}

#[test]
fn constructor_rejects_loops_and_duplicates() {
    assert!(matches!(Digraph::from_edges(2, [(0, 0)]), Err(Error::InvalidGraph(_))));
    assert!(matches!(Digraph::from_edges(2, [(0, 1), (0, 1)]), Err(Error::InvalidGraph(_))));
    assert!(Digraph::from_edges(2, [(0, 1), (1, 0)]).is_ok());
}

#[test]
fn edge_indices_follow_sorted_order() {
    let d = f7();
    for (i, (u, v)) in d.edges().into_iter().enumerate() {
        assert_eq!(d.edge_index(u, v), Some(i));
    }
    assert_eq!(d.edge_index(0, 3), None);
}

#[test]
fn strong_components_examples() {
    let c3 = directed_cycle(3).unwrap();
    assert_eq!(strong_components(&c3), vec![vec![0, 1, 2]]);
    assert_eq!(strong_components(&Digraph::empty(4)).len(), 4);
    assert_eq!(strong_components(&f7()), vec![(0..7).collect::<Vec<_>>()]);
}

#[test]
fn strong_components_are_reverse_topological() {
    let mut r = rng(11);
    for _ in 0..200 {
        let d = random_digraph(&mut r, 7, 0.2);
        let comps = strong_components(&d);
        let mut comp_of = vec![0; d.n()];
        for (i, c) in comps.iter().enumerate() {
            for &v in c {
                comp_of[v] = i;
            }
        }
        for (u, v) in d.edges() {
            assert!(comp_of[u] >= comp_of[v]);
        }
        for (i, c) in comps.iter().enumerate() {
            let reach = reachable_from(&d, c[0], false);
            let back = reachable_from(&d, c[0], true);
            for v in 0..d.n() {
                assert_eq!(reach[v] && back[v], comp_of[v] == i);
            }
        }
    }
}

#[test]
fn cut_vertex_examples() {
    assert_eq!(cut_vertices(&bipath3()).unwrap(), vec![1]);
    let c4 = bidirected(&cycle_graph(4).unwrap());
    assert!(cut_vertices(&c4).unwrap().is_empty());
    assert_eq!(cut_vertices(&directed_cycle(5).unwrap()).unwrap(), vec![0, 1, 2, 3, 4]);
    assert_eq!(cut_vertices(&Digraph::empty(2)), Err(Error::NotStronglyConnected));
}

#[test]
fn one_sum_split_of_two_triangles() {
    // directed triangles 0-1-2 and 0-3-4 sharing vertex 0
    let d = dg(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]);
    let s = one_sum_split(&d, 0).unwrap();
    assert!(is_isomorphic(&s.d1, &directed_cycle(3).unwrap()));
    assert!(is_isomorphic(&s.d2, &directed_cycle(3).unwrap()));
    assert_eq!(s.map1[0], s.v1);
    assert_eq!(s.map2[0], s.v2);
    assert_eq!(one_sum_split(&f7(), 0).unwrap_err(), Error::NotACutVertex(0));
}

#[test]
fn one_sum_split_of_bidirected_path() {
    let s = one_sum_split(&bipath3(), 1).unwrap();
    assert_eq!(s.d1, digon());
    assert_eq!(s.d2, digon());
}

#[test]
fn one_sum_split_recovers_f7_and_digon() {
    // F7 on 0..7 plus a digon 6 <-> 7
    let d = f7().with_edges(&[]);
    let glued = Digraph::from_edges_unified(8, d.edges().into_iter().chain([(6, 7), (7, 6)]));
    assert_eq!(cut_vertices(&glued).unwrap(), vec![6]);
    let s = one_sum_split(&glued, 6).unwrap();
    let parts = [&s.d1, &s.d2];
    assert!(parts.iter().any(|p| is_isomorphic(p, &f7())));
    assert!(parts.iter().any(|p| **p == digon()));
}

#[test]
fn one_sum_split_has_no_edge_into_x_from_y() {
    let mut r = rng(5);
    let mut checked = 0;
    for _ in 0..400 {
        let d = random_digraph(&mut r, 6, 0.35);
        if !is_strongly_connected(&d) {
            continue;
        }
        for w in cut_vertices(&d).unwrap() {
            let s = one_sum_split(&d, w).unwrap();
            for (u, v) in d.edges() {
                assert!(!(s.x.contains(&v) && s.y.contains(&u)));
            }
            // every cycle of D through neither side's interior maps to a closed walk in a part
            for c in oracle_cycles(&d) {
                let in_x = c.iter().all(|v| !s.y.contains(v));
                let in_y = c.iter().all(|v| !s.x.contains(v));
                if in_x {
                    let img: Vec<usize> = c.iter().map(|&v| s.map1[v]).collect();
                    assert!(s.d1.is_cycle(&img));
                }
                if in_y {
                    let img: Vec<usize> = c.iter().map(|&v| s.map2[v]).collect();
                    assert!(s.d2.is_cycle(&img));
                }
            }
            checked += 1;
        }
    }
    assert!(checked > 10);
}

#[test]
fn butterfly_contraction_examples() {
    let (d, _) = butterfly_contract(&directed_cycle(3).unwrap(), 0, 1).unwrap();
    assert_eq!(d, digon());
    // digon {u=0, v=1} plus (w=2, u): (0,1) is the only out-edge of 0
    let d = dg(3, &[(0, 1), (1, 0), (2, 0)]);
    let (c, map) = butterfly_contract(&d, 0, 1).unwrap();
    assert_eq!(c.n(), 2);
    assert!(c.has_edge(map[2], map[1]));
    assert_eq!(c.m(), 1);
    assert!(butterfly_contract(&bidirected(&cycle_graph(4).unwrap()), 0, 1).is_err());
}

#[test]
fn butterfly_contraction_in_f7() {
    // F7 with v1 = 1, v2 = 2, v6 = 6 (i -> i+1 and i -> i+5 mod 7): drop (1, 6), contract (1, 2)
    let d = f7().remove_edges(&[(1, 6)]);
    let (c, map) = butterfly_contract(&d, 1, 2).unwrap();
    assert_eq!(c.n(), 6);
    let mut expected: Vec<(usize, usize)> = Vec::new();
    for (u, v) in d.edges() {
        let u2 = if u == 1 { 2 } else { u };
        let v2 = if v == 1 { 2 } else { v };
        if u2 != v2 {
            expected.push((map[u2], map[v2]));
        }
    }
    expected.sort_unstable();
    expected.dedup();
    assert_eq!(c.edges(), expected);
    // in-edges of v1 now point at v2
    for &x in d.inn(1) {
        assert!(c.has_edge(map[x], map[2]));
    }
}

proptest! {
    #[test]
    fn butterfly_contraction_keeps_graph_simple(seed in 0u64..5000) {
        let mut r = rng(seed);
        let d = random_digraph(&mut r, 6, 0.3);
        for (u, v) in d.edges() {
            if is_butterfly_contractible(&d, u, v) {
                let (c, map) = butterfly_contract(&d, u, v).unwrap();
                prop_assert_eq!(c.n(), d.n() - 1);
                prop_assert!(c.edges().iter().all(|&(a, b)| a != b));
                prop_assert_eq!(map[u], map[v]);
            }
        }
    }

    #[test]
    fn out_degeneracy_witness_attains_value(seed in 0u64..5000) {
        let mut r = rng(seed);
        let d = random_digraph(&mut r, 7, 0.4);
        let (x, order) = out_degeneracy(&d);
        prop_assert_eq!(back_degree(&d, &order), Some(x));
    }
}

#[test]
fn girth_examples() {
    assert_eq!(girth(&digon()), Some(2));
    assert_eq!(girth(&directed_cycle(5).unwrap()), Some(5));
    assert_eq!(girth(&Digraph::empty(3)), None);
    // the grid digraph contains digons (e.g. ei <-> fj)
    assert_eq!(girth(&grid_example()), Some(2));
    let mut r = rng(3);
    for _ in 0..100 {
        let d = random_digraph(&mut r, 6, 0.25);
        let oracle = oracle_cycles(&d).iter().map(Vec::len).min();
        assert_eq!(girth(&d), oracle);
    }
}

#[test]
fn out_degeneracy_examples() {
    let (x, _) = out_degeneracy(&directed_cycle(4).unwrap().remove_edges(&[(3, 0)]));
    assert_eq!(x, 0);
    assert_eq!(out_degeneracy(&digon()).0, 1);
    let k4 = bidirected(&UndirectedGraph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap());
    assert_eq!(out_degeneracy(&k4).0, 3);
    assert_eq!(oracle_out_degeneracy(&k4), 3);
}

#[test]
fn out_degeneracy_matches_exhaustive_search() {
    let mut r = rng(17);
    for n in 2..=7 {
        for _ in 0..15 {
            let d = random_digraph(&mut r, n, 0.45);
            assert_eq!(out_degeneracy(&d).0, oracle_out_degeneracy(&d), "{:?}", d.edges());
        }
    }
}

#[test]
fn generator_counts() {
    let f = f7();
    assert_eq!((f.n(), f.m()), (7, 14));
    let t = tricorn();
    assert_eq!((t.n(), t.m()), (10, 15));
    let w3 = odd_wheel(3).unwrap();
    assert_eq!((w3.n(), w3.m()), (4, 6));
    assert!((0..4).all(|v| w3.degree(v) == 3));
    assert_eq!(odd_bicycle(5).unwrap().m(), 10);
    assert!(odd_bicycle(4).is_err());
    assert!(odd_wheel(4).is_err());
    let g = grid_example();
    assert_eq!((g.n(), g.m()), (8, 16));
    assert_eq!(list_example().m(), 14);
    let s8 = staircase(8).unwrap();
    assert_eq!((s8.n(), s8.m()), (8, 12));
    assert!(staircase(7).is_err());
    assert_eq!(heawood().m(), 21);
    assert!((0..14).all(|v| heawood().degree(v) == 3));
    assert_eq!(cube().m(), 12);
}

#[test]
fn grid_bigraph_direction_matches_grid_example() {
    let g = grid_example_bigraph();
    // edge (i, j) of the M-direction iff a_i b_j is an edge, i != j
    let m = &g.matching;
    let mut e = Vec::new();
    for i in 0..m.len() {
        for j in 0..m.len() {
            if i != j && g.base.has_edge(m[i].0, m[j].1) {
                e.push((i, j));
            }
        }
    }
    assert_eq!(Digraph::from_edges(8, e).unwrap(), grid_example());
}

#[test]
fn digraph_text_round_trip() {
    let d = f7();
    assert_eq!(parse_digraph(&write_digraph(&d)).unwrap(), d);
    let text = "# comment\ndigraph 3\n0 1  # edge\n\n1 2\n";
    assert_eq!(parse_digraph(text).unwrap().m(), 2);
}

#[test]
fn parser_reports_line_numbers() {
    let err = parse_digraph("digraph 3\n0 1\n1 1\n").unwrap_err();
    assert!(matches!(err, Error::Parse { line: 3, .. }));
    let err = parse_digraph("digraph 3\n0 1\n\n0 1\n").unwrap_err();
    assert!(matches!(err, Error::Parse { line: 4, .. }));
    let err = parse_digraph("digraph 3\n0 5\n").unwrap_err();
    assert!(matches!(err, Error::Parse { line: 2, .. }));
}

#[test]
fn bigraph_text_round_trip() {
    let text = "bigraph 2 2\n0 0\n0 1\n1 0\n1 1\nmatching\n0 1\n1 0\n";
    let g = parse_bigraph(text).unwrap();
    assert_eq!(g.base.m(), 4);
    assert_eq!(g.matching, vec![(0, 3), (1, 2)]);
    assert_eq!(parse_bigraph(&write_bigraph(&g)).unwrap(), g);
    assert!(parse_bigraph("bigraph 2 2\n0 0\n1 1\nmatching\n0 1\n1 0\n").is_err());
}

#[test]
fn graph_text_round_trip() {
    let t = tricorn();
    assert_eq!(parse_graph(&write_graph(&t)).unwrap(), t);
    assert_eq!(sniff("# x\ngraph 2\n0 1\n").as_deref(), Some("graph"));
}

#[test]
fn colouring_and_list_formats() {
    let c = vec![0, 1, 1, 0];
    assert_eq!(parse_colouring(&write_colouring(&c), 4).unwrap(), c);
    assert_eq!(parse_colouring("color 0 1\n", 2), Err(Error::PartialColouring(1)));
    let l = vec![vec![0, 1], vec![2]];
    assert_eq!(parse_lists(&write_lists(&l), 2).unwrap(), l);
}
