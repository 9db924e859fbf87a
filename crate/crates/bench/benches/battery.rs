use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use rwalk_core::{
    acf_table, adf, analyze, changes, jarque_bera, ks_test, runs_test, simulate, AnalysisConfig,
    ChangeMode, Deterministic, KsMode, SeMode, SimSpec,
};

fn walk(length: usize, seed: u64) -> rwalk_core::PriceSeries {
    let spec = SimSpec {
        length,
        seed,
        sigma: 10.0,
        start_price: 10_000.0,
        ..SimSpec::default()
    };
    simulate(&spec).unwrap().series
}

fn tests_by_length(c: &mut Criterion) {
    let mut group = c.benchmark_group("tests");
    for length in [119usize, 1_000, 10_000] {
        let ch = changes(&walk(length, 1), ChangeMode::ArithmeticDiff).unwrap();
        group.bench_with_input(BenchmarkId::new("acf_table_20", length), &ch, |b, ch| {
            b.iter(|| acf_table(black_box(ch), 20, SeMode::Auto).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("runs_test", length), &ch, |b, ch| {
            b.iter(|| runs_test(black_box(ch)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("adf_lag1", length), &ch, |b, ch| {
            b.iter(|| adf(black_box(ch.values()), 1, Deterministic::Constant).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("ks_jb", length), &ch, |b, ch| {
            b.iter(|| {
                ks_test(black_box(ch.values()), KsMode::Standardized).unwrap();
                jarque_bera(black_box(ch.values())).unwrap()
            })
        });
    }
    group.finish();
}

fn five_index_batch(c: &mut Criterion) {
    let series: Vec<_> = (1..=5).map(|s| walk(119, s)).collect();
    let cfg = AnalysisConfig::default();
    c.bench_function("analyze_five_indices", |b| {
        b.iter(|| analyze(black_box(&series), &cfg).unwrap())
    });
}

fn simulation(c: &mut Criterion) {
    c.bench_function("simulate_119", |b| {
        b.iter(|| simulate(black_box(&SimSpec { seed: 3, ..SimSpec::default() })).unwrap())
    });
}

criterion_group!(benches, tests_by_length, five_index_batch, simulation);
criterion_main!(benches);
