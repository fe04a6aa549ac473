//! Benchmarks for the hot paths: generator closure, the backtracking
//! automorphism search, subgroup enumeration, and end-to-end verdicts.

use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use tsg_core::{
    automorphism_group, bnk_generators, classify_all, full_symmetry_group, Perm, PermGroup,
    PetersenGraph, SearchConfig, SubgroupLattice,
};

fn spoke_generators(n: usize, k: usize) -> Vec<Perm> {
    bnk_generators(n, k)
        .expect("admissible pair")
        .into_iter()
        .map(|a| a.perm)
        .collect()
}

fn closure_benches(c: &mut Criterion) {
    let gens = spoke_generators(20, 3);
    c.bench_function("closure B(20,3) order 80", |b| {
        b.iter(|| PermGroup::closure(black_box(&gens), 81).expect("closes"))
    });
}

fn search_benches(c: &mut Criterion) {
    let cfg = SearchConfig::default();
    let desargues = PetersenGraph::build(10, 3).expect("admissible pair");
    c.bench_function("autsearch P(10,3) order 240", |b| {
        b.iter(|| automorphism_group(black_box(&desargues), &cfg).expect("search completes"))
    });
    let nauru = PetersenGraph::build(12, 5).expect("admissible pair");
    c.bench_function("autsearch P(12,5) order 144", |b| {
        b.iter(|| automorphism_group(black_box(&nauru), &cfg).expect("search completes"))
    });
}

fn lattice_benches(c: &mut Criterion) {
    let aut = full_symmetry_group(8, 3).expect("admissible pair");
    c.bench_function("subgroup lattice of the order-96 group", |b| {
        b.iter(|| SubgroupLattice::build(black_box(&aut)).expect("lattice builds"))
    });
}

fn verdict_benches(c: &mut Criterion) {
    c.bench_function("classify_all P(13,5)", |b| {
        b.iter(|| classify_all(black_box(13), black_box(5)).expect("classifies"))
    });
}

fn configured() -> Criterion {
    Criterion::default().sample_size(10)
}

criterion_group! {
    name = benches;
    config = configured();
    targets = closure_benches, search_benches, lattice_benches, verdict_benches
}
criterion_main!(benches);
