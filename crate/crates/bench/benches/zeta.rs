use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use hyperzeta_bench::{evaluator, sample_index};

fn bench_zeta(c: &mut Criterion) {
    let mut group = c.benchmark_group("zeta_index");
    for w in [3u32, 5, 8] {
        let k = sample_index(w);
        group.bench_with_input(BenchmarkId::from_parameter(w), &w, |b, _| {
            b.iter(|| evaluator(1e-12).zeta_index(black_box(&k)).unwrap())
        });
    }
    group.finish();
}

fn bench_li(c: &mut Criterion) {
    let mut group = c.benchmark_group("li_index");
    let k = sample_index(6);
    for z in [0.3f64, 0.5, 0.8] {
        group.bench_with_input(BenchmarkId::from_parameter(z), &z, |b, &z| {
            b.iter(|| evaluator(1e-12).li_index(black_box(&k), z).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, bench_zeta, bench_li);
criterion_main!(benches);
