mod common;

use std::collections::BTreeSet;

use common::*;
use dichromatic::evenness::{is_noneven, packing::cycle_packing_and_transversal};
use dichromatic::graph::generators::*;
use dichromatic::graph::structure::is_strongly_connected;
use dichromatic::graph::{norm, BipartiteMatchingGraph, Digraph, UndirectedGraph};
use dichromatic::matching::perfect::cycle_edges;
use dichromatic::matching::*;
use dichromatic::twocolor::exact_dichromatic;
use dichromatic::Error;

fn ug(n: usize, e: &[(usize, usize)]) -> UndirectedGraph {
    UndirectedGraph::from_edges(n, e.iter().copied()).unwrap()
}

fn c_even(n: usize) -> (UndirectedGraph, Vec<(usize, usize)>) {
    (cycle_graph(n).unwrap(), (0..n / 2).map(|i| (2 * i, 2 * i + 1)).collect())
}

fn k33() -> UndirectedGraph {
    complete_bipartite(3, 3)
}

fn k33_matching() -> Vec<(usize, usize)> {
    vec![(0, 3), (1, 4), (2, 5)]
}

#[test]
fn m_direction_examples() {
    let (c4, m) = c_even(4);
    let d = m_direction_of(&c4, &m).unwrap().digraph;
    assert_eq!(d, Digraph::from_edges(2, [(0, 1), (1, 0)]).unwrap());
    let (c6, m) = c_even(6);
    assert!(is_isomorphic(&m_direction_of(&c6, &m).unwrap().digraph, &directed_cycle(3).unwrap()));
    let k3 = bidirected(&cycle_graph(3).unwrap());
    for pm in perfect_matchings(&k33(), 100).unwrap() {
        assert_eq!(m_direction_of(&k33(), &pm).unwrap().digraph, k3);
    }
    assert_eq!(m_direction_of(&prism(), &prism_rung_matching()).unwrap_err(), Error::NotBipartite);
}

#[test]
fn splitting_graph_examples() {
    let s = splitting_graph(&Digraph::from_edges(2, [(0, 1), (1, 0)]).unwrap());
    assert_eq!((s.base.n(), s.base.m()), (4, 4));
    assert!((0..4).all(|v| s.base.degree(v) == 2) && s.base.is_connected());
    let s = splitting_graph(&directed_cycle(3).unwrap());
    assert_eq!((s.base.n(), s.base.m()), (6, 6));
    assert!((0..6).all(|v| s.base.degree(v) == 2) && s.base.is_connected());
    let s = splitting_graph(&f7());
    assert_eq!((s.base.n(), s.base.m(), s.matching.len()), (14, 21, 7));
}

#[test]
fn m_direction_round_trip() {
    let mut r = rng(40);
    let mut all: Vec<Digraph> = (1..=4).flat_map(all_digraphs).collect();
    all.extend((0..200).map(|_| random_digraph(&mut r, 8, 0.3)));
    for d in all {
        let md = m_direction(&splitting_graph(&d));
        assert_eq!(md.digraph, d);
        for v in 0..d.n() {
            assert_eq!(md.vertex_of(v, d.n() + v), Some(v));
        }
    }
}

#[test]
fn perfect_matchings_match_oracle() {
    let mut r = rng(41);
    for _ in 0..150 {
        let g = random_graph(&mut r, 8, 0.4);
        let got: BTreeSet<Vec<(usize, usize)>> = perfect_matchings(&g, DEFAULT_MATCHING_CAP).unwrap().into_iter().collect();
        assert_eq!(got, oracle_perfect_matchings(&g));
    }
    assert_eq!(perfect_matchings(&k33(), 100).unwrap().len(), 6);
    assert_eq!(perfect_matchings(&cube(), 100).unwrap().len(), 9);
    assert!(matches!(perfect_matchings(&cube(), 3), Err(Error::EnumerationCapExceeded { .. })));
}

#[test]
fn alternating_cycle_examples() {
    let (c4, m) = c_even(4);
    assert_eq!(alternating_cycles(&c4, &m, 100).unwrap().cycles.len(), 1);
    let (c6, m) = c_even(6);
    assert_eq!(alternating_cycles(&c6, &m, 100).unwrap().cycles.len(), 1);
    let s = splitting_graph(&f7());
    assert_eq!(alternating_cycles(&s.base, &s.matching, 1000).unwrap().cycles.len(), 16);
}

#[test]
fn alternating_cycles_match_oracle() {
    let mut r = rng(42);
    let mut tested = 0;
    while tested < 150 {
        let g = random_graph(&mut r, 8, 0.45);
        let Some(m) = first_perfect_matching(&g) else { continue };
        let list = alternating_cycles(&g, &m, 100_000).unwrap();
        assert!(list.complete);
        let got: BTreeSet<Vec<(usize, usize)>> = list
            .cycles
            .iter()
            .map(|c| {
                let mut e = cycle_edges(c);
                e.sort_unstable();
                e
            })
            .collect();
        assert_eq!(got.len(), list.cycles.len());
        assert_eq!(got, oracle_alternating_cycles(&g, &m));
        tested += 1;
    }
}

#[test]
fn alternating_cycles_biject_with_directed_cycles() {
    let mut r = rng(43);
    for _ in 0..150 {
        let (g, m) = random_bigraph(&mut r, 5, 0.35);
        let md = m_direction_of(&g, &m).unwrap();
        let alt = alternating_cycles(&g, &m, 100_000).unwrap().cycles;
        // image of an alternating cycle: its matching edges, as digraph vertices
        let img: BTreeSet<BTreeSet<usize>> = alt
            .iter()
            .map(|c| c.chunks(2).map(|p| md.vertex_of(p[0], p[1]).unwrap()).collect())
            .collect();
        let dir: BTreeSet<BTreeSet<usize>> = oracle_cycles(&md.digraph).into_iter().map(|c| c.into_iter().collect()).collect();
        assert_eq!(alt.len(), oracle_cycles(&md.digraph).len());
        // vertex sets can coincide for distinct directed cycles only in non-simple cases; compare counts and sets
        assert!(img.is_subset(&dir) && dir.is_subset(&img));
    }
}

#[test]
fn matching_covered_examples() {
    assert!(is_matching_covered(&c_even(6).0).unwrap());
    assert!(is_matching_covered(&k33()).unwrap());
    assert!(is_matching_covered(&prism()).unwrap());
    // a path on four vertices: the middle edge is in no perfect matching
    assert!(!is_matching_covered(&ug(4, &[(0, 1), (1, 2), (2, 3)])).unwrap());
    // splitting graphs of strongly connected digraphs are matching covered
    let mut r = rng(44);
    for _ in 0..100 {
        let d = random_digraph(&mut r, 5, 0.35);
        assert_eq!(is_matching_covered(&splitting_graph(&d).base).unwrap(), is_strongly_connected(&d) && d.n() > 1);
    }
}

#[test]
fn tight_cut_examples() {
    let (c6, _) = c_even(6);
    assert!(is_tight_cut(&c6, &[3]).unwrap());
    assert!(is_tight_cut(&c6, &[0, 1, 2]).unwrap());
    assert!(!is_tight_cut(&c6, &[0, 1]).unwrap());
    // K33: two vertices of A and one of B; the B vertex has neighbours outside
    assert!(!is_tight_cut(&k33(), &[0, 1, 3]).unwrap());
    let oracle = CutOracle::new(&k33()).unwrap();
    for x in oracle.odd_shores().unwrap() {
        assert_eq!(oracle.is_tight(&x).unwrap(), x.is_trivial(6));
    }
    let path = ug(4, &[(0, 1), (1, 2), (2, 3)]);
    assert_eq!(is_tight_cut(&path, &[0]), Err(Error::NotMatchingCovered));
}

#[test]
fn tight_cut_routes_agree_on_splitting_graphs() {
    let mut r = rng(45);
    let mut tight_nontrivial = 0;
    let mut done = 0;
    while done < 60 {
        let d = random_digraph(&mut r, 5, 0.3);
        if !is_strongly_connected(&d) {
            continue;
        }
        let g = splitting_graph(&d).base;
        let oracle = CutOracle::new(&g).unwrap();
        for x in oracle.odd_shores().unwrap() {
            if oracle.is_tight(&x).unwrap() && !x.is_trivial(g.n()) {
                tight_nontrivial += 1;
            }
        }
        done += 1;
    }
    assert!(tight_nontrivial > 0);
}

#[test]
fn tight_cut_contraction_examples() {
    let (c6, _) = c_even(6);
    let (g, _) = tight_cut_contraction(&c6, &[0, 1, 2]).unwrap();
    assert_eq!((g.n(), g.m()), (4, 4));
    assert!((0..4).all(|v| g.degree(v) == 2));
    let (c8, _) = c_even(8);
    let (g, _) = tight_cut_contraction(&c8, &[2, 3, 4]).unwrap();
    assert_eq!((g.n(), g.m()), (6, 6));
    assert!(g.is_connected() && (0..6).all(|v| g.degree(v) == 2));
    assert_eq!(tight_cut_contraction(&c6, &[0]), Err(Error::NotTight));
    assert_eq!(tight_cut_contraction(&c6, &[0, 1, 3]), Err(Error::NotTight));
}

#[test]
fn tight_cut_contractions_stay_matching_covered() {
    let mut r = rng(46);
    let mut done = 0;
    while done < 40 {
        let d = random_digraph(&mut r, 5, 0.3);
        if !is_strongly_connected(&d) {
            continue;
        }
        let g = splitting_graph(&d).base;
        for x in CutOracle::new(&g).unwrap().nontrivial_tight_cuts().unwrap() {
            let (c, _) = tight_cut_contraction(&g, &x.shore).unwrap();
            assert!(is_matching_covered(&c).unwrap());
            let (c2, _) = tight_cut_contraction(&g, &x.complement(g.n()).shore).unwrap();
            assert!(is_matching_covered(&c2).unwrap());
        }
        done += 1;
    }
}

#[test]
fn directed_separation_examples() {
    let two = Digraph::from_edges(5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]).unwrap();
    let seps = directed_separations_order1(&two).unwrap();
    assert!(seps.contains(&(vec![0, 1, 2], vec![0, 3, 4])));
    let k3 = bidirected(&cycle_graph(3).unwrap());
    for (x, y) in directed_separations_order1(&k3).unwrap() {
        assert!(x.len() == 3 || y.len() == 3);
    }
}

#[test]
fn tight_cuts_are_order_one_separations() {
    let mut fixtures: Vec<BipartiteMatchingGraph> = Vec::new();
    for n in 2..=4 {
        for d in all_digraphs(n) {
            if is_strongly_connected(&d) {
                fixtures.push(splitting_graph(&d));
            }
        }
    }
    for g in [c_even(8).0, cube(), k33()] {
        for m in perfect_matchings(&g, 100).unwrap() {
            fixtures.push(BipartiteMatchingGraph::from_graph(g.clone(), &m).unwrap());
        }
    }
    let mut count = 0;
    for g in &fixtures {
        let oracle = CutOracle::new(&g.base).unwrap();
        let n = g.n();
        for mask in 1u32..(1 << n) - 1 {
            let shore: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            let x = CutSpec::new(n, &shore).unwrap();
            assert_eq!(oracle.is_tight(&x).unwrap(), tight_by_separation(g, &shore).unwrap(), "{:?} {:?}", g.base.edges(), shore);
            count += 1;
        }
    }
    assert!(count > 10_000);
}

#[test]
fn unoriented_separation_reading_has_a_counterexample() {
    // C6 as the splitting graph of a directed triangle; the shore {a0, a1, b0} is not tight
    let g = splitting_graph(&directed_cycle(3).unwrap());
    let shore = [0, 1, 3];
    assert!(!is_tight_cut(&g.base, &shore).unwrap());
    let (x, y) = cut_separation(&g, &shore).unwrap().unwrap();
    let d = m_direction(&g).digraph;
    assert!(!is_directed_separation(&d, &x, &y));
    assert!(is_directed_separation(&d, &y, &x));
}

#[test]
fn forcing_examples() {
    let (c4, m) = c_even(4);
    assert!(is_forcing(&c4, &m, &m).unwrap());
    assert!(!is_forcing(&c4, &m, &[]).unwrap());
    let (c6, m) = c_even(6);
    assert!(is_forcing(&c6, &m, &[(2, 3)]).unwrap());
    assert_eq!(is_forcing(&c6, &m, &[(1, 2)]), Err(Error::NotSubsetOfMatching));
}

#[test]
fn forcing_matches_matching_enumeration() {
    let mut r = rng(47);
    let mut done = 0;
    while done < 80 {
        let g = random_graph(&mut r, 8, 0.45);
        let pms = oracle_perfect_matchings(&g);
        let Some(m) = pms.iter().next().cloned() else { continue };
        for mask in 0u32..1 << m.len() {
            let s: Vec<(usize, usize)> = (0..m.len()).filter(|&i| mask >> i & 1 == 1).map(|i| m[i]).collect();
            let extensions = pms.iter().filter(|p| s.iter().all(|e| p.contains(e))).count();
            assert_eq!(is_forcing(&g, &m, &s).unwrap(), extensions == 1);
        }
        done += 1;
    }
}

#[test]
fn forcing_number_examples() {
    let (c4, m) = c_even(4);
    assert_eq!(forcing_number(&c4, &m).unwrap().0, 1);
    let (c6, m) = c_even(6);
    assert_eq!(forcing_number(&c6, &m).unwrap().0, 1);
    let s = splitting_graph(&f7());
    let (f, witness) = forcing_number(&s.base, &s.matching).unwrap();
    assert_eq!(f, cycle_packing_and_transversal(&f7()).unwrap().tau);
    assert!(is_forcing(&s.base, &s.matching, &witness).unwrap());
}

#[test]
fn forcing_number_equals_min_fvs() {
    let mut r = rng(48);
    for _ in 0..100 {
        let d = random_digraph(&mut r, 6, 0.35);
        let s = splitting_graph(&d);
        let (f, w) = forcing_number(&s.base, &s.matching).unwrap();
        assert_eq!(f, cycle_packing_and_transversal(&d).unwrap().tau);
        assert!(is_forcing(&s.base, &s.matching, &w).unwrap());
    }
}

#[test]
fn forcing_partition_examples() {
    let (c4, m) = c_even(4);
    let p = forcing_partition(&BipartiteMatchingGraph::from_graph(c4, &m).unwrap()).unwrap();
    assert_eq!((p.parts[0].len(), p.parts[1].len()), (1, 1));
    let (c6, m) = c_even(6);
    let g = BipartiteMatchingGraph::from_graph(c6, &m).unwrap();
    let p = forcing_partition(&g).unwrap();
    for part in &p.parts {
        assert!(is_forcing(&g.base, &g.matching, part).unwrap());
    }
    let grid = grid_example_bigraph();
    let p = forcing_partition(&grid).unwrap();
    for part in &p.parts {
        assert!(is_forcing(&grid.base, &grid.matching, part).unwrap());
    }
    assert_eq!(p.parts[0].len() + p.parts[1].len(), 8);
    let k = BipartiteMatchingGraph::from_graph(k33(), &k33_matching()).unwrap();
    assert_eq!(forcing_partition(&k), Err(Error::NotPfaffian));
}

#[test]
fn m_chromatic_examples() {
    let (c4, m) = c_even(4);
    assert_eq!(m_chromatic(&c4, &m).unwrap().0, 2);
    for pm in perfect_matchings(&k33(), 100).unwrap() {
        assert_eq!(m_chromatic(&k33(), &pm).unwrap().0, 3);
    }
    let (k, c) = m_chromatic(&prism(), &prism_rung_matching()).unwrap();
    assert_eq!(k, 3);
    assert_eq!(verify_m_colouring(&prism(), &prism_rung_matching(), &c).unwrap(), None);
}

#[test]
fn m_chromatic_equals_dichromatic_of_m_direction() {
    let mut r = rng(49);
    for _ in 0..150 {
        let (g, m) = random_bigraph(&mut r, 6, 0.35);
        let (k, c) = m_chromatic(&g, &m).unwrap();
        assert_eq!(k, exact_dichromatic(&m_direction_of(&g, &m).unwrap().digraph).unwrap().0);
        assert_eq!(verify_m_colouring(&g, &m, &c).unwrap(), None);
    }
}

#[test]
fn monochromatic_alternating_cycle_is_reported() {
    let (c4, m) = c_even(4);
    let c = EdgeColouring::from_pairs(m.iter().map(|&e| (e, 0)));
    let bad = verify_m_colouring(&c4, &m, &c).unwrap().unwrap();
    assert_eq!(bad.len(), 4);
}

#[test]
fn extendability_examples() {
    let (c6, _) = c_even(6);
    assert!(is_k_extendable(&c6, 1).unwrap());
    assert!(!is_k_extendable(&c6, 2).unwrap());
    assert!(is_k_extendable(&k33(), 2).unwrap());
    assert_eq!(strong_vertex_connectivity(&bidirected(&cycle_graph(3).unwrap())).unwrap(), 2);
    assert_eq!(strong_vertex_connectivity(&directed_cycle(4).unwrap()).unwrap(), 1);
}

#[test]
fn extendability_matches_strong_connectivity() {
    let mut r = rng(50);
    let mut fixtures: Vec<(UndirectedGraph, Vec<(usize, usize)>)> = (0..150).map(|_| random_bigraph(&mut r, 5, 0.5)).collect();
    fixtures.push((k33(), k33_matching()));
    fixtures.push((cube(), first_perfect_matching(&cube()).unwrap()));
    fixtures.push((heawood(), first_perfect_matching(&heawood()).unwrap()));
    for (g, m) in fixtures {
        let d = m_direction_of(&g, &m).unwrap().digraph;
        for k in 1..=3 {
            assert_eq!(is_k_extendable(&g, k).unwrap(), is_strongly_k_connected(&d, k).unwrap(), "k = {k}, {:?}", g.edges());
        }
    }
}

#[test]
fn separating_cut_examples() {
    // prism: a triangle shore is separating but not tight
    let oracle = CutOracle::new(&prism()).unwrap();
    let s = StaircaseIds { m: 2 };
    let tri = CutSpec::new(6, &[s.x(), s.u(1), s.v(1)]).unwrap();
    assert!(oracle.is_separating(&tri).unwrap());
    assert!(!oracle.is_tight(&tri).unwrap());
    assert!(!oracle.is_solid().unwrap());
    for k in [3, 5, 7] {
        assert!(is_solid(&odd_wheel(k).unwrap()).unwrap());
    }
}

#[test]
fn bipartite_separating_cuts_are_tight() {
    let mut r = rng(51);
    let mut done = 0;
    while done < 40 {
        let d = random_digraph(&mut r, 4, 0.4);
        if !is_strongly_connected(&d) {
            continue;
        }
        let g = splitting_graph(&d).base;
        let oracle = CutOracle::new(&g).unwrap();
        for x in oracle.odd_shores().unwrap() {
            assert_eq!(oracle.is_separating(&x).unwrap(), oracle.is_tight(&x).unwrap());
        }
        done += 1;
    }
}

#[test]
fn pfaffian_examples() {
    for g in [c_even(6).0, prism(), cube(), odd_wheel(5).unwrap()] {
        let rep = is_pfaffian_bruteforce(&g).unwrap();
        assert!(rep.pfaffian);
        assert_eq!(check_pfaffian_orientation(&g, rep.orientation.as_ref().unwrap()).unwrap(), None);
    }
    let rep = is_pfaffian_bruteforce(&k33()).unwrap();
    assert!(!rep.pfaffian && rep.orientation.is_none());
    assert!(!is_pfaffian_gf2(&k33()).unwrap().pfaffian);
    assert!(matches!(is_pfaffian_bruteforce(&heawood()), Err(Error::TooLarge(_))));
}

#[test]
fn conformal_cycles_of_c6() {
    let cycles = conformal_cycles(&c_even(6).0).unwrap();
    assert_eq!(cycles, vec![vec![0, 1, 2, 3, 4, 5]]);
    // K4: every 4-cycle is conformal, triangles are not
    let k4 = odd_wheel(3).unwrap();
    assert_eq!(conformal_cycles(&k4).unwrap().len(), 3);
}

#[test]
fn pfaffian_routes_agree_and_match_evenness() {
    let mut r = rng(52);
    for _ in 0..120 {
        let (g, m) = random_bigraph(&mut r, 4, 0.5);
        if g.m() > 20 || !is_matching_covered(&g).unwrap() {
            continue;
        }
        let brute = is_pfaffian_bruteforce(&g).unwrap();
        let lin = is_pfaffian_gf2(&g).unwrap();
        assert_eq!(brute.pfaffian, lin.pfaffian);
        if let Some(o) = &lin.orientation {
            assert_eq!(check_pfaffian_orientation(&g, o).unwrap(), None);
        }
        for pm in perfect_matchings(&g, 1000).unwrap() {
            let d = m_direction_of(&g, &pm).unwrap().digraph;
            assert_eq!(brute.pfaffian, is_noneven(&d).unwrap().is_noneven(), "{:?}", g.edges());
        }
        let _ = m;
    }
}

#[test]
fn normalised_edges_helper() {
    assert_eq!(norm(3, 1), (1, 3));
}
