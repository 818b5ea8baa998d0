use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use load_coloring::exact::{decide_exact_with, DEFAULT_BUDGET};
use load_coloring::generate::{generate, Family};
use load_coloring::par::Execution;
use load_coloring::pipeline::decide_batch;
use load_coloring::{Graph, Instance};

fn gnp(n: usize, p: f64, seed: u64) -> Graph {
    generate(&Family::Gnp { n, p }, seed).unwrap()
}

fn batch(c: &mut Criterion) {
    let insts: Vec<Instance> = (0..256).map(|s| Instance::new(gnp(10, 0.35, s), 3, 2).unwrap()).collect();
    let mut group = c.benchmark_group("decide_batch");
    for exec in [Execution::Sequential, Execution::Parallel] {
        group.bench_with_input(BenchmarkId::from_parameter(format!("{exec:?}")), &exec, |b, &exec| {
            b.iter(|| decide_batch(&insts, DEFAULT_BUDGET, exec))
        });
    }
    group.finish();
}

fn exact_components(c: &mut Criterion) {
    // eight dense components, searched independently
    let g = (0..8).fold(Graph::empty(0), |acc, s| acc.disjoint_union(&gnp(9, 0.5, s)));
    let inst = Instance::new(g, 3, 12).unwrap();
    let mut group = c.benchmark_group("decide_exact");
    for exec in [Execution::Sequential, Execution::Parallel] {
        group.bench_with_input(BenchmarkId::from_parameter(format!("{exec:?}")), &exec, |b, &exec| {
            b.iter(|| decide_exact_with(&inst, DEFAULT_BUDGET, exec))
        });
    }
    group.finish();
}

criterion_group!(benches, batch, exact_components);
criterion_main!(benches);
