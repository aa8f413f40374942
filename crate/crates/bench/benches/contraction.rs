use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion, Throughput};
use karger_bench::{grid, weights, GRID_SIZES};
use karger_core::potentials::random_walker_potential;
use karger_core::{karger_run, seeded_contraction_run, weighted_permutation};

fn seeded(c: &mut Criterion) {
    let mut group = c.benchmark_group("seeded_contraction");
    for (w, h) in GRID_SIZES {
        let (g, seeds) = grid(w, h);
        group.throughput(Throughput::Elements(g.edge_count() as u64));
        let mut seed = 0u64;
        group.bench_with_input(BenchmarkId::from_parameter(g.edge_count()), &g, |b, g| {
            b.iter(|| {
                seed += 1;
                seeded_contraction_run(g, &seeds, seed).unwrap()
            })
        });
    }
    group.finish();
}

fn permutation(c: &mut Criterion) {
    let mut group = c.benchmark_group("weighted_permutation");
    for (w, h) in GRID_SIZES {
        let ws = weights(&grid(w, h).0);
        group.throughput(Throughput::Elements(ws.len() as u64));
        group.bench_with_input(BenchmarkId::from_parameter(ws.len()), &ws, |b, ws| {
            b.iter(|| weighted_permutation(ws, 7).unwrap())
        });
    }
    group.finish();
}

fn unseeded(c: &mut Criterion) {
    let (g, _) = grid(64, 64);
    c.bench_function("karger_run/8064", |b| b.iter(|| karger_run(&g, 3).unwrap()));
}

fn random_walker(c: &mut Criterion) {
    let mut group = c.benchmark_group("random_walker");
    group.sample_size(10);
    // dense factorization below 500 unknowns, conjugate gradients above
    for (w, h) in [(20, 20), (64, 64)] {
        let (g, seeds) = grid(w, h);
        group.bench_with_input(BenchmarkId::from_parameter(w * h), &g, |b, g| {
            b.iter(|| random_walker_potential(g, &seeds, 1e-10).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, seeded, permutation, unseeded, random_walker);
criterion_main!(benches);
