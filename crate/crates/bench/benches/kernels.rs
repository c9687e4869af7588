use addcomp_bench::{mixed, progression};
use addcomp_core::greedy::{thin_block, greedy_cover};
use addcomp_core::natset::uncovered;
use addcomp_core::{build_complement, sumset, SequenceSpec};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

fn sumset_kernel(c: &mut Criterion) {
    let mut group = c.benchmark_group("sumset");
    for exp in [14u32, 17, 20] {
        let h = 1usize << exp;
        let a = mixed(h);
        let b = progression(h, 13, 2);
        group.bench_with_input(BenchmarkId::from_parameter(h), &h, |bench, &h| {
            bench.iter(|| sumset(black_box(&a), black_box(&b), h))
        });
    }
    group.finish();
}

fn uncovered_kernel(c: &mut Criterion) {
    let mut group = c.benchmark_group("uncovered");
    for exp in [14u32, 17, 20] {
        let h = 1usize << exp;
        let a = SequenceSpec::parse("powers:2", h).unwrap().generate().unwrap();
        let b = a.complement();
        group.bench_with_input(BenchmarkId::from_parameter(h), &h, |bench, &h| {
            bench.iter(|| uncovered(black_box(&a), black_box(&b), 16, h))
        });
    }
    group.finish();
}

fn greedy_kernel(c: &mut Criterion) {
    let mut group = c.benchmark_group("greedy");
    group.sample_size(20);
    for exp in [10u32, 13, 16] {
        let q = 1usize << exp;
        let a = SequenceSpec::parse("fib", 4 * q).unwrap().generate().unwrap();
        group.bench_with_input(BenchmarkId::new("block", q), &q, |bench, &q| {
            bench.iter(|| thin_block(black_box(&a), q).unwrap())
        });
        let b = a.complement();
        group.bench_with_input(BenchmarkId::new("cover", q), &q, |bench, &q| {
            bench.iter(|| greedy_cover(black_box(&a), black_box(&b), 2 * q, 2 * q).unwrap())
        });
    }
    group.finish();
}

fn build_pipeline(c: &mut Criterion) {
    let mut group = c.benchmark_group("build");
    group.sample_size(10);
    for spec in ["powers:2", "fib"] {
        let spec_v = SequenceSpec::parse(spec, 1 << 18).unwrap();
        group.bench_function(spec, |bench| bench.iter(|| build_complement(&spec_v, None).unwrap()));
    }
    group.finish();
}

criterion_group!(benches, sumset_kernel, uncovered_kernel, greedy_kernel, build_pipeline);
criterion_main!(benches);
