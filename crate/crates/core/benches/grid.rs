//! Parallel vs sequential verification over the identity grid.
//!
//! With the default `parallel` feature, `verify_range` fans grid points out
//! over the rayon pool; `verify_range_sequential` is the same computation on
//! one thread. Without the feature both paths are sequential and the two
//! groups should coincide.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use fe_core::frobenius::{fe_number, fe_numbers_via_series};
use fe_core::lab::{verify_range, verify_range_sequential};

fn bench_verify_grid(c: &mut Criterion) {
    // warm the shared memo tables so both variants start from the same state
    let _ = fe_number(16);

    let mut group = c.benchmark_group("verify_grid");
    group.sample_size(10);
    for id in ["thm2", "thm3-corrected", "thm6", "thm7-corrected"] {
        for n_max in [4usize, 8] {
            group.bench_with_input(
                BenchmarkId::new(format!("{id}/parallel"), n_max),
                &n_max,
                |b, &n_max| b.iter(|| verify_range(id, n_max, 4).unwrap()),
            );
            group.bench_with_input(
                BenchmarkId::new(format!("{id}/sequential"), n_max),
                &n_max,
                |b, &n_max| b.iter(|| verify_range_sequential(id, n_max, 4).unwrap()),
            );
        }
    }
    group.finish();
}

fn bench_number_construction(c: &mut Criterion) {
    let mut group = c.benchmark_group("numbers");
    group.sample_size(10);
    group.bench_function("series_inversion_24", |b| {
        b.iter(|| fe_numbers_via_series(24))
    });
    group.finish();
}

criterion_group!(benches, bench_verify_grid, bench_number_construction);
criterion_main!(benches);
