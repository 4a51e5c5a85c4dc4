//! Benchmarks for the hot kernels: sieve construction, single-value
//! classification, bulk range scanning, and the divisibility search.

use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use opn_core::arith::{sigma_of_square, Factorization, SpfTable};
use opn_core::scan::{classify, divides_sigma_square_scan, scan_range, ScanOptions};

fn bench_spf_sieve(c: &mut Criterion) {
    let mut group = c.benchmark_group("sieve");
    group.sample_size(20);
    group.bench_function("spf_1e6", |b| {
        b.iter(|| SpfTable::build(black_box(1_000_000)).unwrap())
    });
    group.finish();
}

fn bench_classify(c: &mut Criterion) {
    let table = SpfTable::build(1_000_000).unwrap();
    c.bench_function("classify_highly_composite", |b| {
        b.iter(|| classify(black_box(720_720), &table).unwrap())
    });
    c.bench_function("classify_prime", |b| {
        b.iter(|| classify(black_box(999_983), &table).unwrap())
    });
}

fn bench_scan_range(c: &mut Criterion) {
    let table = SpfTable::build(1_000_000).unwrap();
    let mut group = c.benchmark_group("scan_range");
    group.sample_size(10);
    group.bench_function("1e6_single_thread", |b| {
        let opts = ScanOptions {
            threads: 1,
            ..Default::default()
        };
        b.iter(|| scan_range(1, 1_000_000, &table, &opts).unwrap())
    });
    group.bench_function("1e6_default_threads", |b| {
        let opts = ScanOptions::default();
        b.iter(|| scan_range(1, 1_000_000, &table, &opts).unwrap())
    });
    group.finish();
}

fn bench_divisibility(c: &mut Criterion) {
    let table = SpfTable::build(1_000_000).unwrap();
    let mut group = c.benchmark_group("divides_sigma_square");
    group.sample_size(10);
    group.bench_function("1e6", |b| {
        b.iter(|| divides_sigma_square_scan(1_000_000, &table, 0).unwrap())
    });
    group.finish();
}

fn bench_sigma(c: &mut Criterion) {
    let f = Factorization::of(963_761_198_400).unwrap(); // highly composite
    c.bench_function("sigma_of_square_highly_composite", |b| {
        b.iter(|| sigma_of_square(black_box(&f)).unwrap())
    });
}

criterion_group!(
    benches,
    bench_spf_sieve,
    bench_classify,
    bench_scan_range,
    bench_divisibility,
    bench_sigma
);
criterion_main!(benches);
