use std::hint::black_box;
use std::time::Duration;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use dichromatic::evenness::is_noneven;
use dichromatic::fractional::{fractional_dichromatic, star_dichromatic};
use dichromatic::graph::generators::{cube, directed_cycle, odd_wheel, staircase};
use dichromatic::matching::first_perfect_matching;
use dichromatic::hardness::{certify, reduce_sat};
use dichromatic::listcolor::{choose3_noneven, ListAssignment};
use dichromatic::matching::{forcing_number, CutOracle};
use dichromatic::specialfamilies::{compose_via_tight_cuts, staircase_super_colouring};
use dichromatic::twocolor::{exact_dichromatic, two_color_checked};
use dichromatic_bench::{grid_bigraph, noneven_grid, random_3cnf, random_digraph};

fn evenness(c: &mut Criterion) {
    let mut g = c.benchmark_group("evenness");
    for k in [4, 6, 8] {
        let d = noneven_grid(k);
        g.bench_with_input(BenchmarkId::new("noneven_grid", k), &d, |b, d| b.iter(|| is_noneven(black_box(d)).unwrap()));
        g.bench_with_input(BenchmarkId::new("color2_grid", k), &d, |b, d| b.iter(|| two_color_checked(black_box(d)).unwrap()));
    }
    g.finish();
}

fn colouring(c: &mut Criterion) {
    let mut g = c.benchmark_group("colouring");
    for n in [8, 11, 14] {
        let d = random_digraph(n, 0.35, n as u64);
        g.bench_with_input(BenchmarkId::new("exact_random", n), &d, |b, d| b.iter(|| exact_dichromatic(black_box(d)).unwrap()));
    }
    for n in [5, 9] {
        let d = directed_cycle(n).unwrap();
        g.bench_with_input(BenchmarkId::new("fractional_cycle", n), &d, |b, d| b.iter(|| fractional_dichromatic(black_box(d)).unwrap()));
    }
    let d = random_digraph(8, 0.4, 3);
    g.bench_function("fractional_random_8", |b| b.iter(|| fractional_dichromatic(black_box(&d)).unwrap()));
    g.bench_function("star_random_8", |b| b.iter(|| star_dichromatic(black_box(&d)).unwrap()));
    g.finish();
}

fn hardness(c: &mut Criterion) {
    let mut g = c.benchmark_group("hardness");
    for vars in [10, 40] {
        let phi = random_3cnf(vars, 4 * vars, vars as u64);
        g.bench_with_input(BenchmarkId::new("reduce_certify", vars), &phi, |b, phi| b.iter(|| certify(&reduce_sat(black_box(phi))).unwrap()));
    }
    g.finish();
}

fn matching(c: &mut Criterion) {
    let mut g = c.benchmark_group("matching");
    let b4 = grid_bigraph(4);
    let m = b4.matching_normalised();
    g.bench_function("forcing_number_grid_4", |b| b.iter(|| forcing_number(black_box(&b4.base), &m).unwrap()));
    let cube = cube();
    g.bench_function("tight_cuts_cube", |b| b.iter(|| CutOracle::new(black_box(&cube)).unwrap().nontrivial_tight_cuts().unwrap()));
    let w = odd_wheel(7).unwrap();
    let mw = first_perfect_matching(&w).unwrap();
    g.bench_function("compose_wheel_7", |b| b.iter(|| compose_via_tight_cuts(black_box(&w), &mw).unwrap()));
    let s = staircase(16).unwrap();
    let ms = first_perfect_matching(&s).unwrap();
    g.bench_function("compose_staircase_16", |b| b.iter(|| compose_via_tight_cuts(black_box(&s), &ms).unwrap()));
    g.bench_function("staircase_colouring_64", |b| b.iter(|| staircase_super_colouring(black_box(64)).unwrap()));
    g.finish();
}

fn lists(c: &mut Criterion) {
    let d = noneven_grid(6);
    let mut lists = vec![vec![0]];
    lists.extend((1..d.n()).map(|v| vec![v % 4, 4 + v % 3, 9]));
    let l = ListAssignment::new(lists).unwrap();
    c.bench_function("choose3_grid_6", |b| b.iter(|| choose3_noneven(black_box(&d), &l, 0).unwrap()));
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(10).measurement_time(Duration::from_secs(2)).warm_up_time(Duration::from_millis(300));
    targets = evenness, colouring, hardness, matching, lists
}
criterion_main!(benches);
