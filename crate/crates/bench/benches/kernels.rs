use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use hlspec_bench::fixtures;
use hlspec_core::canon::canonical_key;
use hlspec_core::structure::is_k4_minor_free;
use hlspec_core::{certify_r_le, spectrum, Threshold};
use std::hint::black_box;

fn spectra(c: &mut Criterion) {
    let mut group = c.benchmark_group("spectrum");
    for (name, g) in fixtures() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &g, |b, g| b.iter(|| spectrum(black_box(g))));
    }
    group.finish();
}

fn certificates(c: &mut Criterion) {
    let mut group = c.benchmark_group("certify");
    for (name, g) in fixtures() {
        for (label, t) in [("1", Threshold::int(1)), ("sqrt2", Threshold::sqrt2())] {
            group.bench_with_input(BenchmarkId::new(label, name), &g, |b, g| {
                b.iter(|| certify_r_le(black_box(g), &t))
            });
        }
    }
    group.finish();
}

fn structure(c: &mut Criterion) {
    let mut group = c.benchmark_group("structure");
    for (name, g) in fixtures() {
        group.bench_with_input(BenchmarkId::new("sp-reduction", name), &g, |b, g| {
            b.iter(|| is_k4_minor_free(black_box(g)))
        });
        if g.order() <= 16 {
            group.bench_with_input(BenchmarkId::new("canonical", name), &g, |b, g| {
                b.iter(|| canonical_key(black_box(g)))
            });
        }
    }
    group.finish();
}

criterion_group!(benches, spectra, certificates, structure);
criterion_main!(benches);
