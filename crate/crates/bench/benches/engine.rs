use criterion::{black_box, criterion_group, criterion_main, Criterion};

use hlnet_core::connsets::for_each_connected_set;
use hlnet_core::{
    delta, exact_extra_connectivity, generating_set, hypercube, min_star_neighborhood,
    upper_bound_by_small_side, vq_by_rule, VertexSet,
};

fn neighborhood_union(c: &mut Criterion) {
    let graph = delta(9).unwrap(); // 512 vertices, 9-regular
    let members = VertexSet::from_indices(512, &[0, 2, 4, 16, 32, 128]);
    c.bench_function("neighborhood: 6-vertex star in delta(9)", |b| {
        b.iter(|| graph.neighborhood(black_box(&members)).unwrap())
    });
}

fn exact_search(c: &mut Criterion) {
    let q4 = hypercube(4).unwrap();
    c.bench_function("exact search: level-1 cutset of the 4-cube", |b| {
        b.iter(|| exact_extra_connectivity(black_box(&q4), 1, None, false).unwrap())
    });
}

fn witness_search(c: &mut Criterion) {
    let q6 = hypercube(6).unwrap();
    c.bench_function("small-side bound: g=3 on the 6-cube", |b| {
        b.iter(|| upper_bound_by_small_side(black_box(&q6), 3, 4).unwrap())
    });
}

fn star_sweep(c: &mut Criterion) {
    let graph = delta(9).unwrap();
    let gens = generating_set(3, 0).unwrap();
    let pool: Vec<usize> = gens.elements().iter().map(|e| e.index()).collect();
    c.bench_function("star sweep: 84 leaf sets in delta(9)", |b| {
        b.iter(|| min_star_neighborhood(black_box(&graph), 0, &pool, 6).unwrap())
    });
}

fn connected_enumeration(c: &mut Criterion) {
    let q5 = hypercube(5).unwrap();
    c.bench_function("connected sets of size at most 4 in the 5-cube", |b| {
        b.iter(|| {
            let mut count = 0u64;
            for_each_connected_set(black_box(&q5), 1, 4, |_, _| count += 1);
            count
        })
    });
}

fn topology_build(c: &mut Criterion) {
    c.bench_function("build: varietal cube by rule, dimension 10", |b| {
        b.iter(|| vq_by_rule(black_box(10)).unwrap())
    });
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(20);
    targets = neighborhood_union, exact_search, witness_search, star_sweep,
        connected_enumeration, topology_build
}
criterion_main!(benches);
