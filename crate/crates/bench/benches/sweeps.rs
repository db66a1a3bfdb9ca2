use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use hlspec_core::enumeration::{enumerate, Filter, GenSpec};
use hlspec_core::proofs::verify_theorem_sp;

fn generation(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate");
    group.sample_size(10);
    for n in [7, 8, 9] {
        let spec = GenSpec::new(n).connected();
        group.bench_with_input(BenchmarkId::new("connected", n), &spec, |b, s| b.iter(|| enumerate(s).unwrap()));
    }
    group.finish();
}

fn theorem_sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("sp-sweep");
    group.sample_size(10);
    for n in [6, 8] {
        let graphs = enumerate(&GenSpec::new(n).connected().filter(Filter::K4MinorFree)).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(n), &graphs, |b, gs| {
            b.iter(|| gs.iter().filter(|g| verify_theorem_sp(g).passed()).count())
        });
    }
    group.finish();
}

criterion_group!(benches, generation, theorem_sweep);
criterion_main!(benches);
