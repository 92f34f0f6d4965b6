//! Compares the rayon executor with the sequential fallback on the
//! data-parallel kernels: hull decisions, typed lift witnesses, matroid
//! representation identities and a whole verification suite.

use std::time::Duration;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use signtrop::hull::tc_hull_decide_with;
use signtrop::matroid::{default_grid, realize, representation_identities, OMatroid, RationalMatrix};
use signtrop::par::Exec;
use signtrop::puiseux::lift_witness_all_types;
use signtrop::random;
use signtrop::verify::{run_suite_with, Size};

const EXECS: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn hull_decisions(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let x = random::point_set(&mut rng, 6, 3, -3, 3, 0.1);
    let queries: Vec<_> = (0..8).map(|_| random::vector(&mut rng, 3, -3, 3, 0.1)).collect();
    let mut group = c.benchmark_group("tc_hull_decide");
    for (name, exec) in EXECS {
        group.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| queries.iter().filter(|y| tc_hull_decide_with(&x, y, exec).unwrap().is_member()).count())
        });
    }
    group.finish();
}

fn lift_witnesses(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let x = random::point_set(&mut rng, 3, 2, -2, 2, 0.1);
    let y = x.points()[0].clone();
    let mut group = c.benchmark_group("lift_witness_all_types");
    for (name, exec) in EXECS {
        group.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| lift_witness_all_types(&x, &y, exec).unwrap().len())
        });
    }
    group.finish();
}

fn matroid_identities(c: &mut Criterion) {
    let m: RationalMatrix = "1,0,1\n0,1,-1".parse().unwrap();
    let om: OMatroid = realize(&m).unwrap();
    let grid = default_grid();
    let mut group = c.benchmark_group("representation_identities");
    for (name, exec) in EXECS {
        group.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| representation_identities(&om, &grid, exec).unwrap())
        });
    }
    group.finish();
}

fn suite(c: &mut Criterion) {
    let mut group = c.benchmark_group("suite_hulls_small");
    group.sample_size(10).measurement_time(Duration::from_secs(20));
    for (name, exec) in EXECS {
        group.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| run_suite_with("hulls", 7, Size::Small, exec).unwrap().cases)
        });
    }
    group.finish();
}

criterion_group!(benches, hull_decisions, lift_witnesses, matroid_identities, suite);
criterion_main!(benches);
