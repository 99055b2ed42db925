use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use zkernel::arith::primes_between;
use zkernel::scan::{
    decomposition_scan, family_members, finiteness_scan, quasi_regular_pairs, Strategy,
};
use zkernel::{Family, LieGroupId};

fn groups() -> Vec<LieGroupId> {
    let mut g = family_members(Family::SU, 2..=60);
    g.extend(family_members(Family::Sp, 1..=60));
    g.extend(family_members(Family::Spin, 3..=120));
    g.extend(LieGroupId::EXCEPTIONAL);
    g
}

const STRATEGIES: [(&str, Strategy); 2] = [
    ("sequential", Strategy::Sequential),
    ("parallel", Strategy::Parallel),
];

fn finiteness(c: &mut Criterion) {
    let groups = groups();
    let mut group = c.benchmark_group("finiteness_scan");
    for (name, s) in STRATEGIES {
        group.bench_with_input(BenchmarkId::from_parameter(name), &s, |b, &s| {
            b.iter(|| finiteness_scan(s, &groups))
        });
    }
    group.finish();
}

fn decompositions(c: &mut Criterion) {
    let pairs = quasi_regular_pairs(&groups(), &primes_between(3, 257));
    let mut group = c.benchmark_group("decomposition_scan");
    for (name, s) in STRATEGIES {
        group.bench_with_input(BenchmarkId::from_parameter(name), &s, |b, &s| {
            b.iter(|| decomposition_scan(s, &pairs))
        });
    }
    group.finish();
}

criterion_group!(benches, finiteness, decompositions);
criterion_main!(benches);
