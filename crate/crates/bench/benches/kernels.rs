use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use derivlie::freealg::{hilton_milnor_dims, poincare};
use derivlie::hall::{alphabet, gen_basic_products};
use derivlie::partition::homology;
use derivlie::qbar::reduce_against;
use derivlie_bench::{dense_partition_boundary, monomial_grid, partition_boundary};

fn gf2(c: &mut Criterion) {
    let sparse = partition_boundary(5);
    let dense = dense_partition_boundary(5);
    c.bench_function("rank/sparse/P5 top boundary", |b| {
        b.iter(|| black_box(&sparse).rank())
    });
    c.bench_function("rank/dense/P5 top boundary", |b| {
        b.iter(|| black_box(&dense).rank())
    });
}

fn partition(c: &mut Criterion) {
    let mut g = c.benchmark_group("partition homology");
    g.sample_size(10);
    for n in [4, 5, 6] {
        g.bench_function(format!("n={n}"), |b| {
            b.iter(|| homology(black_box(n)).unwrap())
        });
    }
    g.finish();
}

fn qbar(c: &mut Criterion) {
    let grid = monomial_grid(2, 24);
    c.bench_function("reduce/grid 2..24", |b| {
        b.iter(|| {
            for (j, n) in &grid {
                black_box(reduce_against(j, *n).unwrap());
            }
        })
    });
}

fn hall(c: &mut Criterion) {
    let letters = alphabet(&[2, 2, 3]).unwrap();
    c.bench_function("basic products/3 letters weight 7", |b| {
        b.iter(|| gen_basic_products(black_box(&letters), 7))
    });
    c.bench_function("poincare/2,3 to 22", |b| {
        let letters = alphabet(&[2, 3]).unwrap();
        b.iter(|| poincare(black_box(&letters), 22))
    });
    c.bench_function("wedge splitting/2,2,2 to 20", |b| {
        b.iter(|| hilton_milnor_dims(black_box(&[2, 2, 2]), 20).unwrap())
    });
}

criterion_group!(benches, gf2, partition, qbar, hall);
criterion_main!(benches);
