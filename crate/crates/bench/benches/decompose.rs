use burnbound::{burn_graph, decompose_tree, exact_burning_number, simulate, FillPolicy, RootedTree};
use burnbound_bench::{sparse_graph, tree_instances, TREE_SIZES};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn decompose(c: &mut Criterion) {
    let mut group = c.benchmark_group("decompose_tree");
    group.sample_size(20);
    for n in TREE_SIZES {
        for (family, g) in tree_instances(n, 1) {
            let k = burnbound::burning_bound(n as u64).unwrap() as usize;
            group.bench_with_input(BenchmarkId::new(family, n), &g, |b, g| {
                b.iter(|| decompose_tree(RootedTree::from_graph(g, 0).unwrap(), k).unwrap())
            });
        }
    }
    group.finish();
}

fn pipeline(c: &mut Criterion) {
    let mut group = c.benchmark_group("burn_graph+simulate");
    group.sample_size(20);
    for n in [1_000, 10_000] {
        let g = sparse_graph(n, 3);
        group.bench_with_input(BenchmarkId::from_parameter(n), &g, |b, g| {
            b.iter(|| {
                let plan = burn_graph(g, 0).unwrap();
                simulate(g, &plan.schedule, FillPolicy::Greedy)
                    .unwrap()
                    .completion_round
            })
        });
    }
    group.finish();
}

fn exact(c: &mut Criterion) {
    let mut group = c.benchmark_group("exact_burning_number");
    for n in [8, 12, 16] {
        let g = sparse_graph(n, 5);
        group.bench_with_input(BenchmarkId::from_parameter(n), &g, |b, g| {
            b.iter(|| exact_burning_number(g, n).unwrap().burning_number)
        });
    }
    group.finish();
}

criterion_group!(benches, decompose, pipeline, exact);
criterion_main!(benches);
