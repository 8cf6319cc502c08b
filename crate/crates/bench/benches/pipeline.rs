use std::sync::Arc;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use quiverlab::adjunction::{gabriel_vquiver, present_as_bound_quiver};
use quiverlab::algebra::{truncated_poly, upper_triangular};
use quiverlab::bound::bound_algebra;
use quiverlab::corpus::{random_bound_quiver, rng};

// Builders return fresh algebras, so cached radicals never leak between iterations.
fn radical(c: &mut Criterion) {
    let mut group = c.benchmark_group("radical");
    for n in [2, 3, 4] {
        group.bench_with_input(BenchmarkId::new("upper-triangular", n), &n, |b, &n| {
            b.iter(|| upper_triangular(n).unwrap().radical().nilpotency_index())
        });
    }
    group.bench_function("truncated-poly-5", |b| {
        b.iter(|| truncated_poly(5).unwrap().radical().nilpotency_index())
    });
    group.finish();
}

fn gabriel(c: &mut Criterion) {
    let mut group = c.benchmark_group("gabriel");
    for n in [2, 3, 4] {
        group.bench_with_input(BenchmarkId::new("upper-triangular", n), &n, |b, &n| {
            b.iter(|| gabriel_vquiver(&Arc::new(upper_triangular(n).unwrap())).unwrap())
        });
    }
    group.finish();
}

fn present(c: &mut Criterion) {
    let mut group = c.benchmark_group("present");
    for n in [2, 3] {
        group.bench_with_input(BenchmarkId::new("upper-triangular", n), &n, |b, &n| {
            b.iter(|| present_as_bound_quiver(&Arc::new(upper_triangular(n).unwrap())).unwrap())
        });
    }
    group.finish();
}

fn bound(c: &mut Criterion) {
    let quivers: Vec<_> = (0..8).map(|s| random_bound_quiver(&mut rng(s))).collect();
    c.bench_function("bound-algebra/random-8", |b| {
        b.iter(|| {
            for q in &quivers {
                bound_algebra(q).unwrap();
            }
        })
    });
}

criterion_group!(benches, radical, gabriel, present, bound);
criterion_main!(benches);
