use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use euclid_potential::{analyze, gcd, scan, trace, GoldenInt, ScanOptions};
use euclid_potential_bench::{fibonacci_operands, mixed_operands};

fn bench_trace(c: &mut Criterion) {
    let mut group = c.benchmark_group("trace");
    for n in [20u64, 100, 300] {
        let (x, y) = fibonacci_operands(n);
        group.bench_with_input(BenchmarkId::new("fibonacci", n), &(x, y), |b, (x, y)| {
            b.iter(|| trace(black_box(x), black_box(y)).unwrap())
        });
    }
    let (x, y) = mixed_operands(256);
    group.bench_function("gcd_only_256bit", |b| {
        b.iter(|| gcd(black_box(&x), black_box(&y)).unwrap())
    });
    group.finish();
}

fn bench_analyze(c: &mut Criterion) {
    let mut group = c.benchmark_group("analyze");
    for n in [20u64, 300] {
        let (x, y) = fibonacci_operands(n);
        group.bench_with_input(BenchmarkId::new("fibonacci", n), &(x, y), |b, (x, y)| {
            b.iter(|| analyze(black_box(x), black_box(y)).unwrap())
        });
    }
    group.finish();
}

fn bench_golden_cmp(c: &mut Criterion) {
    let lhs = GoldenInt::phi_pow(60).unwrap();
    let rhs = GoldenInt::new(-1_234_567_890_123i64, 987_654_321_987i64);
    c.bench_function("golden_cmp_mixed_sign", |b| {
        b.iter(|| black_box(&lhs).cmp(black_box(&rhs)))
    });
}

fn bench_scan(c: &mut Criterion) {
    let mut group = c.benchmark_group("scan");
    group.sample_size(10);
    for partitions in [1usize, 4] {
        group.bench_with_input(
            BenchmarkId::new("x_max_200", partitions),
            &partitions,
            |b, &p| b.iter(|| scan(200, ScanOptions { partitions: p }).unwrap()),
        );
    }
    group.finish();
}

criterion_group!(
    benches,
    bench_trace,
    bench_analyze,
    bench_golden_cmp,
    bench_scan
);
criterion_main!(benches);
