use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion, Throughput};
use motrec_core::{count_factors, substitute, Engine, SubstitutionSpec, SuffixAutomaton, WordSource};

fn bench_suffix_automaton(c: &mut Criterion) {
    let mut group = c.benchmark_group("suffix_automaton_counts");
    for &len in &[10_000usize, 100_000, 1_000_000] {
        let word = WordSource::Fibonacci.prefix(len);
        group.throughput(Throughput::Elements(len as u64));
        group.bench_with_input(BenchmarkId::from_parameter(len), &word, |b, w| {
            b.iter(|| {
                let sam = SuffixAutomaton::build(w.symbols());
                sam.factor_counts(w.len() - 1)
            })
        });
    }
    group.finish();
}

fn bench_engines(c: &mut Criterion) {
    let word = WordSource::Fibonacci.prefix(10_000);
    let mut group = c.benchmark_group("count_factors_10k_nmax50");
    group.bench_function("naive", |b| {
        b.iter(|| count_factors(&word, 50, Engine::Naive).unwrap())
    });
    group.bench_function("automaton", |b| {
        b.iter(|| count_factors(&word, 50, Engine::Automaton).unwrap())
    });
    group.finish();
}

fn bench_substitution(c: &mut Criterion) {
    let word = WordSource::Fibonacci.prefix(1_000_000);
    let spec = SubstitutionSpec::new(2, 3, 'c', false).unwrap();
    c.bench_function("substitute_1m_k2_l3", |b| {
        b.iter(|| substitute(&word, &spec).unwrap())
    });
}

criterion_group!(benches, bench_suffix_automaton, bench_engines, bench_substitution);
criterion_main!(benches);
