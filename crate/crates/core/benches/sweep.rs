use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use qpath_core::paths::PathContext;
use qpath_core::{exec, q_character, verify};

fn bench_verify_sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify_sweep");
    group.sample_size(10);
    for max_rank in [3u32, 4, 5] {
        let jobs = verify::sweep_jobs(max_rank);
        group.bench_with_input(BenchmarkId::new("sequential", max_rank), &jobs, |b, jobs| {
            b.iter(|| verify::verify_sweep_sequential(jobs))
        });
        #[cfg(feature = "parallel")]
        group.bench_with_input(BenchmarkId::new("parallel", max_rank), &jobs, |b, jobs| {
            b.iter(|| verify::verify_sweep_parallel(jobs))
        });
    }
    group.finish();
}

fn bench_q_characters(c: &mut Criterion) {
    let mut group = c.benchmark_group("q_characters");
    group.sample_size(10);
    let jobs: Vec<PathContext> = verify::fundamental_jobs(7);
    group.bench_function("sequential", |b| {
        b.iter(|| exec::map_sequential(&jobs, |&ctx| q_character(ctx).poly().len()))
    });
    #[cfg(feature = "parallel")]
    group.bench_function("parallel", |b| {
        b.iter(|| exec::map_parallel(&jobs, |&ctx| q_character(ctx).poly().len()))
    });
    group.finish();
}

criterion_group!(benches, bench_verify_sweep, bench_q_characters);
criterion_main!(benches);
