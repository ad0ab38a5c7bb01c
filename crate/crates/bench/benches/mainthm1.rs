use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use hyperzeta::identities::mainthm1_series;
use hyperzeta::numeric::{f_lambda_expansion, EvalContext};
use hyperzeta_bench::evaluator;

fn bench_mainthm1(c: &mut Criterion) {
    let mut group = c.benchmark_group("mainthm1_series");
    group.sample_size(10);
    for d in [3u32, 4, 5] {
        group.bench_with_input(BenchmarkId::from_parameter(d), &d, |b, &d| {
            b.iter(|| mainthm1_series(black_box(0.3), d, &evaluator(1e-11)).unwrap())
        });
    }
    group.finish();
}

fn bench_oracle(c: &mut Criterion) {
    let ctx = EvalContext::new(1e-11).unwrap();
    let mut group = c.benchmark_group("f_lambda_expansion");
    group.sample_size(10);
    for d in [3u32, 5] {
        group.bench_with_input(BenchmarkId::from_parameter(d), &d, |b, &d| {
            b.iter(|| f_lambda_expansion(black_box(0.3), d, &ctx).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, bench_mainthm1, bench_oracle);
criterion_main!(benches);
