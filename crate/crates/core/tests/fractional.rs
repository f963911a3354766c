mod common;

use std::collections::BTreeSet;

use common::*;
use dichromatic::evenness::is_noneven;
use dichromatic::fractional::lp::{int, rat, solve, Constraint, LinearProgram, LpOutcome, Relation};
use dichromatic::fractional::*;
use dichromatic::graph::generators::*;
use dichromatic::graph::structure::{girth, is_acyclic};
use dichromatic::graph::{Digraph, UndirectedGraph};
use dichromatic::matching::{first_perfect_matching, m_direction_of, perfect_matchings};
use dichromatic::twocolor::exact_dichromatic;
use num_traits::Zero;

fn row(c: &[i64], relation: Relation, rhs: i64) -> Constraint {
    Constraint { coeffs: c.iter().map(|&x| int(x)).collect(), relation, rhs: int(rhs) }
}

#[test]
fn lp_textbook_example() {
    let lp = LinearProgram {
        maximise: true,
        objective: vec![int(1), int(1)],
        constraints: vec![row(&[1, 2], Relation::Le, 4), row(&[3, 1], Relation::Le, 6)],
    };
    let LpOutcome::Optimal(s) = solve(&lp) else { panic!() };
    assert_eq!(s.x, vec![rat(8, 5), rat(6, 5)]);
    assert_eq!(s.value, rat(14, 5));
    assert_eq!(s.duals, vec![rat(2, 5), rat(1, 5)]);
    let dual_value = s.duals[0].clone() * int(4) + s.duals[1].clone() * int(6);
    assert_eq!(dual_value, s.value);
}

#[test]
fn lp_mixed_constraints() {
    // min x + 2y  s.t. x + y >= 3, x - y = 1, -x >= -5
    let lp = LinearProgram {
        maximise: false,
        objective: vec![int(1), int(2)],
        constraints: vec![row(&[1, 1], Relation::Ge, 3), row(&[1, -1], Relation::Eq, 1), row(&[-1, 0], Relation::Ge, -5)],
    };
    let LpOutcome::Optimal(s) = solve(&lp) else { panic!() };
    assert_eq!(s.x, vec![int(2), int(1)]);
    assert_eq!(s.value, int(4));
    // dual objective b . y equals the primal value
    let b = [3, 1, -5];
    let dual: num_rational::BigRational = s.duals.iter().zip(b).map(|(y, b)| y * int(b)).sum();
    assert_eq!(dual, s.value);
}

#[test]
fn lp_infeasible_and_unbounded() {
    let infeasible = LinearProgram {
        maximise: false,
        objective: vec![int(1)],
        constraints: vec![row(&[1], Relation::Ge, 2), row(&[1], Relation::Le, 1)],
    };
    assert_eq!(solve(&infeasible), LpOutcome::Infeasible);
    let unbounded =
        LinearProgram { maximise: true, objective: vec![int(1), int(0)], constraints: vec![row(&[-1, 1], Relation::Le, 1)] };
    assert_eq!(solve(&unbounded), LpOutcome::Unbounded);
}

/// All non-empty acyclic subsets by trying every subset against the oracle cycles.
fn oracle_acyclic_sets(d: &Digraph) -> (BTreeSet<Vec<usize>>, BTreeSet<Vec<usize>>) {
    let n = d.n();
    let all: BTreeSet<Vec<usize>> = (1u32..1 << n)
        .map(|m| (0..n).filter(|&v| m >> v & 1 == 1).collect::<Vec<usize>>())
        .filter(|s| oracle_acyclic(d, s))
        .collect();
    let maximal = all
        .iter()
        .filter(|s| (0..n).all(|w| s.contains(&w) || !all.contains(&{
            let mut t = s.to_vec();
            t.push(w);
            t.sort_unstable();
            t
        })))
        .cloned()
        .collect();
    (all, maximal)
}

#[test]
fn acyclic_families_examples() {
    let path = Digraph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
    assert_eq!(enumerate_maximal_acyclic(&path).unwrap().sets, vec![vec![0, 1, 2]]);
    let digon = Digraph::from_edges(2, [(0, 1), (1, 0)]).unwrap();
    assert_eq!(enumerate_maximal_acyclic(&digon).unwrap().sets, vec![vec![0], vec![1]]);
    for n in 2..=7 {
        let fam = enumerate_maximal_acyclic(&directed_cycle(n).unwrap()).unwrap();
        assert_eq!(fam.sets.len(), n);
        assert!(fam.sets.iter().all(|s| s.len() == n - 1));
    }
    assert!(enumerate_maximal_acyclic(&Digraph::empty(17)).is_err());
}

#[test]
fn acyclic_families_match_oracle() {
    let mut r = rng(70);
    for _ in 0..60 {
        let d = random_digraph(&mut r, 6, 0.35);
        let (all, maximal) = oracle_acyclic_sets(&d);
        let got_all: BTreeSet<Vec<usize>> = enumerate_acyclic(&d).unwrap().sets.into_iter().collect();
        let got_max: BTreeSet<Vec<usize>> = enumerate_maximal_acyclic(&d).unwrap().sets.into_iter().collect();
        assert_eq!(got_all, all);
        assert_eq!(got_max, maximal);
    }
}

#[test]
fn fractional_of_directed_cycles() {
    for n in 2..=10 {
        let r = fractional_dichromatic(&directed_cycle(n).unwrap()).unwrap();
        assert_eq!(r.value, rat(n as i64, n as i64 - 1), "n = {n}");
        assert!(check_fractional(&directed_cycle(n).unwrap(), &r).is_none());
    }
    let acyclic = Digraph::from_edges(4, [(0, 1), (1, 2), (0, 3)]).unwrap();
    assert_eq!(fractional_dichromatic(&acyclic).unwrap().value, int(1));
    assert_eq!(fractional_dichromatic(&bidirected(&cycle_graph(3).unwrap())).unwrap().value, int(3));
}

#[test]
fn witnesses_are_feasible_and_tight() {
    let mut r = rng(71);
    for _ in 0..60 {
        let d = random_digraph(&mut r, 7, 0.3);
        let res = fractional_dichromatic(&d).unwrap();
        // recheck from scratch, without the library checker
        let n = d.n();
        for v in 0..n {
            let c: num_rational::BigRational =
                res.family.sets.iter().zip(&res.primal).filter(|(s, _)| s.contains(&v)).map(|(_, w)| w.clone()).sum();
            assert!(c >= int(1));
        }
        let (all, _) = oracle_acyclic_sets(&d);
        for s in &all {
            let w: num_rational::BigRational = s.iter().map(|&v| res.dual[v].clone()).sum();
            assert!(w <= int(1));
        }
        assert!(res.primal.iter().chain(&res.dual).all(|x| *x >= num_rational::BigRational::zero()));
        let p: num_rational::BigRational = res.primal.iter().cloned().sum();
        let q: num_rational::BigRational = res.dual.iter().cloned().sum();
        assert_eq!(p, q);
        assert_eq!(p, res.value);
    }
}

#[test]
fn maximal_family_gives_the_full_optimum() {
    let mut r = rng(72);
    for _ in 0..60 {
        let d = random_digraph(&mut r, 6, 0.4);
        let full = fractional_over(&d, enumerate_acyclic(&d).unwrap()).unwrap();
        assert_eq!(fractional_dichromatic(&d).unwrap().value, full.value);
    }
}

#[test]
fn star_examples() {
    assert_eq!(star_dichromatic(&directed_cycle(5).unwrap()).unwrap().value, rat(5, 4));
    assert_eq!(star_dichromatic(&bidirected(&cycle_graph(3).unwrap())).unwrap().value, int(3));
    assert_eq!(star_dichromatic(&Digraph::from_edges(3, [(0, 1), (1, 2)]).unwrap()).unwrap().value, int(1));
    let digon = Digraph::from_edges(2, [(0, 1), (1, 0)]).unwrap();
    assert!(star_dichromatic_check(&digon, 2, 1).unwrap().is_some());
    assert!(star_dichromatic_check(&digon, 1, 2).is_err());
    for n in 2..=6 {
        let c = directed_cycle(n).unwrap();
        assert!(star_dichromatic_check(&c, n, n - 1).unwrap().is_some());
        // every fraction below n / (n - 1) with numerator at most n fails
        for k in 1..=n {
            for d in 1..=k {
                if k * (n - 1) < d * n {
                    assert!(star_dichromatic_check(&c, k, d).unwrap().is_none(), "C{n} {k}/{d}");
                }
            }
        }
    }
}

/// Window colourings checked directly against the oracle cycles.
fn oracle_window_ok(d: &Digraph, col: &[usize], k: usize, w: usize) -> bool {
    (0..k).all(|i| {
        let set: Vec<usize> = (0..d.n()).filter(|&v| (col[v] + k - i) % k < w).collect();
        oracle_acyclic(d, &set)
    })
}

#[test]
fn fractional_star_exact_chain() {
    let mut r = rng(73);
    for _ in 0..50 {
        let d = random_digraph(&mut r, 6, 0.35);
        let f = fractional_dichromatic(&d).unwrap().value;
        let s = star_dichromatic(&d).unwrap();
        let chi = exact_dichromatic(&d).unwrap().0;
        assert!(f <= s.value && s.value <= int(chi as i64));
        assert_eq!(s.value.ceil(), int(chi as i64));
        assert!(oracle_window_ok(&d, &s.colouring, s.k, s.d));
    }
}

/// Is there a partition into g classes each meeting every cycle? Tries all g^n assignments.
fn oracle_packing(d: &Digraph, g: usize) -> bool {
    let cycles = oracle_cycles(d);
    let n = d.n();
    (0..g.pow(n as u32)).any(|code| {
        let col: Vec<usize> = (0..n).map(|v| code / g.pow(v as u32) % g).collect();
        cycles.iter().all(|c| (0..g).all(|x| c.iter().any(|&v| col[v] == x)))
    })
}

#[test]
fn fvs_packing_examples_and_oracle() {
    for g in 2..=5 {
        let c = directed_cycle(g).unwrap();
        let p = fvs_packing(&c, g).unwrap().unwrap();
        assert_eq!(p.len(), g);
        assert!(check_fvs_packing(&c, &p).unwrap());
        assert!(fvs_packing(&c, g + 1).unwrap().is_none());
    }
    let mut r = rng(74);
    for _ in 0..80 {
        let d = random_digraph(&mut r, 6, 0.3);
        for g in 2..=3 {
            let got = fvs_packing(&d, g).unwrap();
            assert_eq!(got.is_some(), oracle_packing(&d, g));
            if let Some(p) = got {
                for class in &p {
                    let rest: Vec<usize> = (0..d.n()).filter(|v| !class.contains(v)).collect();
                    assert!(oracle_acyclic(&d, &rest));
                }
            }
        }
    }
}

#[test]
fn noneven_digraphs_pack_two_feedback_sets() {
    let mut r = rng(75);
    let mut seen = 0;
    for _ in 0..300 {
        let d = random_digraph(&mut r, 7, 0.3);
        if is_noneven(&d).unwrap().is_noneven() {
            let p = fvs_packing(&d, 2).unwrap().expect("two disjoint feedback sets");
            assert!(check_fvs_packing(&d, &p).unwrap());
            seen += 1;
        }
    }
    assert!(seen > 30);
    let grid = grid_example();
    let g = girth(&grid).unwrap();
    let p = fvs_packing(&grid, g).unwrap().expect("grid example packs");
    assert!(check_fvs_packing(&grid, &p).unwrap());
}

/// Faces by tracing darts; Euler's formula per component.
fn oracle_rotation_ok(g: &UndirectedGraph, rot: &[Vec<usize>]) -> bool {
    let mut darts = BTreeSet::new();
    for (u, v) in g.edges() {
        darts.insert((u, v));
        darts.insert((v, u));
    }
    for v in 0..g.n() {
        let mut a = rot[v].clone();
        a.sort_unstable();
        let mut b: Vec<usize> = g.neighbours(v).to_vec();
        b.sort_unstable();
        if a != b {
            return false;
        }
    }
    let mut faces = 0;
    while let Some(&start) = darts.iter().next() {
        faces += 1;
        let mut d = start;
        loop {
            darts.remove(&d);
            let (u, v) = d;
            let r = &rot[v];
            let i = r.iter().position(|&x| x == u).unwrap();
            d = (v, r[(i + 1) % r.len()]);
            if d == start {
                break;
            }
        }
    }
    let comps = g.components();
    let euler: i64 = comps.iter().map(|c| if c.len() == 1 { 1 } else { 2 }).sum();
    g.n() as i64 - g.m() as i64 + faces == euler
}

fn k5() -> UndirectedGraph {
    UndirectedGraph::from_edges(5, (0..5).flat_map(|u| (u + 1..5).map(move |v| (u, v)))).unwrap()
}

fn petersen() -> UndirectedGraph {
    let mut e: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
    e.extend((0..5).map(|i| (i, i + 5)));
    e.extend((0..5).map(|i| (5 + i, 5 + (i + 2) % 5)));
    UndirectedGraph::from_edges(10, e).unwrap()
}

#[test]
fn planarity_examples() {
    let k4 = UndirectedGraph::from_edges(4, (0..4).flat_map(|u| (u + 1..4).map(move |v| (u, v)))).unwrap();
    let Planarity::Planar { rotation } = is_planar(&k4) else { panic!() };
    assert!(oracle_rotation_ok(&k4, &rotation));
    for (g, kind) in [(k5(), Some(Kuratowski::K5)), (complete_bipartite(3, 3), Some(Kuratowski::K33)), (petersen(), None)] {
        let Planarity::NonPlanar(w) = is_planar(&g) else { panic!() };
        assert!(check_kuratowski(&g, &w));
        if let Some(k) = kind {
            assert_eq!(w.kind, k);
        }
    }
    for g in [cube(), heawood(), prism(), tricorn(), odd_wheel(5).unwrap(), staircase(8).unwrap()] {
        let p = is_planar(&g);
        if let Planarity::Planar { rotation } = &p {
            assert!(oracle_rotation_ok(&g, rotation));
        }
    }
    assert!(is_planar(&cube()).is_planar());
    assert!(!is_planar(&heawood()).is_planar());
    assert!(is_planar(&tricorn()).is_planar());
}

#[test]
fn planarity_witnesses_on_random_graphs() {
    let mut r = rng(76);
    let (mut planar, mut nonplanar) = (0, 0);
    for i in 0..300 {
        let g = random_graph(&mut r, 6 + i % 5, 0.3 + 0.6 * ((i % 7) as f64 / 7.0));
        match is_planar(&g) {
            Planarity::Planar { rotation } => {
                assert!(oracle_rotation_ok(&g, &rotation));
                assert!(check_rotation_system(&g, &rotation));
                planar += 1;
            }
            Planarity::NonPlanar(w) => {
                assert!(check_kuratowski(&g, &w), "{:?}", g.edges());
                nonplanar += 1;
            }
        }
    }
    assert!(planar > 50 && nonplanar > 50, "{planar} {nonplanar}");
}

#[test]
fn kuratowski_checker_rejects_bad_witnesses() {
    let g = complete_bipartite(3, 3);
    let Planarity::NonPlanar(mut w) = is_planar(&g) else { panic!() };
    w.edges.pop();
    assert!(!check_kuratowski(&g, &w));
    let Planarity::NonPlanar(mut w) = is_planar(&g) else { panic!() };
    w.kind = Kuratowski::K5;
    assert!(!check_kuratowski(&g, &w));
}

#[test]
fn strong_planarity_examples() {
    assert!(is_strongly_planar(&grid_example()));
    for n in 2..=6 {
        assert!(is_strongly_planar(&directed_cycle(n).unwrap()));
    }
    assert!(!is_strongly_planar(&bidirected(&cycle_graph(3).unwrap())));
}

/// M-directions of planar bipartite graphs: subgraphs of the 4x4 grid with a perfect matching.
fn strongly_planar_corpus(count: usize, seed: u64) -> Vec<Digraph> {
    let grid = grid_example_bigraph().base;
    let mut r = rng(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let keep: Vec<(usize, usize)> = grid.edges().into_iter().filter(|_| rand::Rng::gen_bool(&mut r, 0.8)).collect();
        let g = UndirectedGraph::from_edges(16, keep).unwrap();
        let Some(m) = first_perfect_matching(&g) else { continue };
        let d = m_direction_of(&g, &m).unwrap().digraph;
        if !is_acyclic(&d) {
            out.push(d);
        }
    }
    out
}

#[test]
fn fractional_value_on_strongly_planar_digraphs() {
    let grid = grid_example();
    let g = girth(&grid).unwrap() as i64;
    assert_eq!(g, 2);
    assert_eq!(fractional_dichromatic(&grid).unwrap().value, rat(g, g - 1));
    for d in strongly_planar_corpus(60, 77) {
        assert!(is_strongly_planar(&d));
        let g = girth(&d).unwrap() as i64;
        assert_eq!(fractional_dichromatic(&d).unwrap().value, rat(g, g - 1), "{:?}", d.edges());
    }
    // every perfect matching of the cube
    for m in perfect_matchings(&cube(), 100).unwrap() {
        let d = m_direction_of(&cube(), &m).unwrap().digraph;
        if let Some(g) = girth(&d) {
            assert_eq!(fractional_dichromatic(&d).unwrap().value, rat(g as i64, g as i64 - 1));
        }
    }
}
