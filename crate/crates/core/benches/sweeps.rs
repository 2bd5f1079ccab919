use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use griesskit::gram::GramReport;
use griesskit::lattice::{mode_product, VirasoroFamily, WeightCap};
use griesskit::par;
use griesskit::GriessAlgebra;

type Sweep<T> = fn(&[T], fn(&T) -> bool) -> Vec<bool>;

fn parallel<T: Sync>(items: &[T], f: fn(&T) -> bool) -> Vec<bool> {
    par::map(items, f)
}

fn sequential<T>(items: &[T], f: fn(&T) -> bool) -> Vec<bool> {
    par::map_seq(items, f)
}

fn strategies<T: Sync>() -> [(&'static str, Sweep<T>); 2] {
    [("parallel", parallel::<T>), ("sequential", sequential::<T>)]
}

fn positivity_grid(c: &mut Criterion) {
    let grid: Vec<(usize, u32)> = (3..=7).flat_map(|n| (1..=8).map(move |m| (n, m))).collect();
    let mut group = c.benchmark_group("positivity_grid");
    group.sample_size(10);
    for (name, sweep) in strategies() {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| {
                sweep(&grid, |&(n, m)| {
                    GramReport::compute(n, m).unwrap().positive_definite
                })
            })
        });
    }
    group.finish();
}

fn griess_verify_grid(c: &mut Criterion) {
    let grid: Vec<(usize, u32)> = (3..=6).flat_map(|n| (1..=6).map(move |m| (n, m))).collect();
    let mut group = c.benchmark_group("griess_verify_grid");
    group.sample_size(10);
    for (name, sweep) in strategies() {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| {
                sweep(&grid, |&(n, m)| {
                    GriessAlgebra::build(n, m)
                        .unwrap()
                        .verify()
                        .iter()
                        .all(|(_, ok)| *ok)
                })
            })
        });
    }
    group.finish();
}

fn lattice_products(c: &mut Criterion) {
    let family = VirasoroFamily::ising(4).unwrap();
    let dim = family.vectors().len();
    let cells: Vec<(VirasoroFamily, usize, usize)> = (0..dim)
        .flat_map(|a| (0..dim).map(move |b| (a, b)))
        .map(|(a, b)| (family.clone(), a, b))
        .collect();
    let mut group = c.benchmark_group("lattice_products");
    group.sample_size(10);
    for (name, sweep) in strategies() {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| {
                sweep(&cells, |(fam, a, b)| {
                    let (u, v) = (&fam.vectors()[*a], &fam.vectors()[*b]);
                    mode_product(u, 1, v, WeightCap(4))
                        .map(|r| !r.is_zero())
                        .unwrap()
                })
            })
        });
    }
    group.finish();
}

criterion_group!(
    benches,
    positivity_grid,
    griess_verify_grid,
    lattice_products
);
criterion_main!(benches);
