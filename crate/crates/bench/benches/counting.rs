use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use motivic_bench::{cusp, node, whitney_umbrella};
use motivic_core::counting::{count_congruence, count_contact, count_jet_points, CountOptions};
use motivic_core::jets::jet_equations;

fn opts(threads: usize) -> CountOptions {
    // the p7-n4 instance enumerates 7^10 ambient points, over the default cap
    CountOptions { threads, budget: 1_000_000_000 }
}

fn bench_congruence(c: &mut Criterion) {
    let mut group = c.benchmark_group("congruence");
    let sys = cusp();
    for (p, n) in [(3u64, 4u32), (5, 4), (7, 3)] {
        group.bench_with_input(BenchmarkId::new("cusp", format!("p{p}-n{n}")), &(p, n), |b, &(p, n)| {
            b.iter(|| count_congruence(&sys, p, n, &opts(1)).unwrap())
        });
    }
    let umbrella = whitney_umbrella();
    group.bench_function("whitney-umbrella/p3-n2", |b| {
        b.iter(|| count_congruence(&umbrella, 3, 2, &opts(1)).unwrap())
    });
    group.finish();
}

fn bench_threads(c: &mut Criterion) {
    let mut group = c.benchmark_group("congruence-threads");
    group.sample_size(20);
    let sys = cusp();
    for threads in [1usize, 2, 4] {
        group.bench_with_input(BenchmarkId::from_parameter(threads), &threads, |b, &t| {
            b.iter(|| count_congruence(&sys, 7, 4, &opts(t)).unwrap())
        });
    }
    group.finish();
}

fn bench_jets_and_contact(c: &mut Criterion) {
    let mut group = c.benchmark_group("jets");
    let node_sys = node();
    let js = jet_equations(&node_sys, 4).unwrap();
    group.bench_function("jet-points/node-n4-p3", |b| {
        b.iter(|| count_jet_points(&js, 3, &opts(1)).unwrap())
    });
    let cusp_sys = cusp();
    group.bench_function("contact/cusp-n4-p3", |b| {
        b.iter(|| count_contact(&cusp_sys, 3, 4, &opts(1)).unwrap())
    });
    group.finish();
}

criterion_group!(benches, bench_congruence, bench_threads, bench_jets_and_contact);
criterion_main!(benches);
