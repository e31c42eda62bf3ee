use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use gluck_bench::{connected_sum_group, spun_trefoil_group, twisted_cable};
use gluck_core::fiber::{branched_cover_homology, SeifertMatrix};
use gluck_core::groups::{hom_count, smith_normal_form};

fn gamma_normalize(c: &mut Criterion) {
    let mut g = c.benchmark_group("gamma_normalize");
    for n in [4, 16, 64] {
        let kd = twisted_cable(n);
        g.bench_with_input(BenchmarkId::from_parameter(n), &kd, |b, kd| b.iter(|| kd.gamma_normalize().unwrap()));
    }
    g.finish();
}

fn snf(c: &mut Criterion) {
    let mut g = c.benchmark_group("smith_normal_form");
    for copies in [1, 2, 3] {
        let m = connected_sum_group(copies).exponent_matrix();
        g.bench_with_input(BenchmarkId::from_parameter(copies), &m, |b, m| b.iter(|| smith_normal_form(black_box(m))));
    }
    g.finish();
}

fn homs(c: &mut Criterion) {
    let p = spun_trefoil_group();
    let mut g = c.benchmark_group("hom_count_spun_trefoil");
    for n in [3, 4, 5] {
        g.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| b.iter(|| hom_count(black_box(&p), n).unwrap()));
    }
    g.finish();
}

fn covers(c: &mut Criterion) {
    let mut g = c.benchmark_group("branched_cover_figure_eight");
    let v = SeifertMatrix::figure_eight();
    for n in [2, 6, 12] {
        g.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| branched_cover_homology(black_box(&v), n).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, gamma_normalize, snf, homs, covers);
criterion_main!(benches);
