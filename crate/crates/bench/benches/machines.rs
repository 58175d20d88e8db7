use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use moore_bench::{mealy_batch, moore_batch};
use moore_core::lab::{check_adjunction_d1, enumerate_homs};
use moore_core::prelude::*;

fn composition(c: &mut Criterion) {
    let mut group = c.benchmark_group("compose");
    for states in [2, 4, 8] {
        let ms = mealy_batch(16, states, 1);
        group.bench_with_input(BenchmarkId::new("mealy", states), &ms, |b, ms| {
            b.iter(|| {
                for pair in ms.windows(2) {
                    black_box(compose_mealy(&pair[1], &pair[0]).unwrap());
                }
            })
        });
        let ns = moore_batch(16, states, 2);
        group.bench_with_input(BenchmarkId::new("ltimes", states), &(ns, ms), |b, (ns, ms)| {
            b.iter(|| {
                for (n, m) in ns.iter().zip(ms) {
                    black_box(ltimes(n, m).unwrap());
                }
            })
        });
    }
    group.finish();
}

fn bisimulation(c: &mut Criterion) {
    let mut group = c.benchmark_group("bisimilar");
    for states in [4, 16, 64] {
        let ms = mealy_batch(8, states, 3);
        group.bench_with_input(BenchmarkId::from_parameter(states), &ms, |b, ms| {
            b.iter(|| {
                for pair in ms.windows(2) {
                    let p = Pointed::new(&pair[0], 0).unwrap();
                    let q = Pointed::new(&pair[1], 0).unwrap();
                    black_box(bisimilar(&p, &q).unwrap());
                }
            })
        });
    }
    group.finish();
}

fn homs(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate_homs");
    for states in [3, 5, 7] {
        let ms = mealy_batch(8, states, 4);
        group.bench_with_input(BenchmarkId::from_parameter(states), &ms, |b, ms| {
            b.iter(|| {
                for s in ms {
                    for t in ms {
                        black_box(enumerate_homs(s, t).unwrap());
                    }
                }
            })
        });
    }
    group.finish();
}

fn adjunction(c: &mut Criterion) {
    let mut group = c.benchmark_group("adjunction_d1");
    for states in [2, 3] {
        let ns = moore_batch(8, states, 5);
        let ms = mealy_batch(8, states, 6);
        group.bench_with_input(BenchmarkId::from_parameter(states), &(ns, ms), |b, (ns, ms)| {
            b.iter(|| {
                for n in ns {
                    for m in ms {
                        black_box(check_adjunction_d1(n, m).unwrap());
                    }
                }
            })
        });
    }
    group.finish();
}

criterion_group!(benches, composition, bisimulation, homs, adjunction);
criterion_main!(benches);
