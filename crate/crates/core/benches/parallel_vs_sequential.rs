use criterion::{criterion_group, criterion_main, Criterion};
use lpair_core::construct::ex57_pair;
use lpair_core::hadamard::build_h_sym;
use lpair_core::search::{search_yamada_pott, ExhaustiveOptions};

fn bench_exhaustive_search(c: &mut Criterion) {
    let mut group = c.benchmark_group("yp-exhaust-n19");
    group.sample_size(10);
    group.bench_function("threads-1", |b| {
        b.iter(|| {
            search_yamada_pott(
                19,
                &ExhaustiveOptions {
                    threads: Some(1),
                    ..ExhaustiveOptions::default()
                },
            )
            .unwrap()
        })
    });
    group.bench_function("threads-default", |b| {
        b.iter(|| search_yamada_pott(19, &ExhaustiveOptions::default()).unwrap())
    });
    group.finish();
}

fn bench_hadamard_verify(c: &mut Criterion) {
    let pair = ex57_pair().unwrap().pair().unwrap().clone();
    let h = build_h_sym(&pair).unwrap();
    let single = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .unwrap();
    let mut group = c.benchmark_group("hadamard-verify-116");
    group.bench_function("threads-1", |b| {
        b.iter(|| single.install(|| assert!(h.matrix.is_hadamard())))
    });
    group.bench_function("threads-default", |b| {
        b.iter(|| assert!(h.matrix.is_hadamard()))
    });
    group.finish();
}

criterion_group!(benches, bench_exhaustive_search, bench_hadamard_verify);
criterion_main!(benches);
