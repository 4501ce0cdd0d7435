use artinchar::chartab::character_table;
use artinchar::corpus;
use artinchar::heilbronn::{search_with_data, HeilbronnData, Mode};
use artinchar::monomial::monomial_family;
use artinchar::par::Strategy;
use artinchar::supercharacter::enumerate_scts;
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

const STRATEGIES: [(&str, Strategy); 2] = [
    ("sequential", Strategy::Sequential),
    ("parallel", Strategy::Parallel),
];

fn search(c: &mut Criterion) {
    let mut group = c.benchmark_group("search_admissible");
    for (g, bound) in [(corpus::symmetric(3), 3), (corpus::quaternion(), 2)] {
        let data = HeilbronnData::new(&g).unwrap();
        for (name, s) in STRATEGIES {
            group.bench_with_input(BenchmarkId::new(name, g.name()), &data, |b, d| {
                b.iter(|| search_with_data(d.clone(), bound, Mode::Weak, s).unwrap())
            });
        }
    }
    group.finish();
}

fn family(c: &mut Criterion) {
    let mut group = c.benchmark_group("monomial_family");
    group.sample_size(10);
    for g in [corpus::symmetric(4), corpus::sl23()] {
        character_table(&g).unwrap();
        for (name, s) in STRATEGIES {
            group.bench_with_input(BenchmarkId::new(name, g.name()), &g, |b, g| {
                b.iter(|| monomial_family(g, s).unwrap())
            });
        }
    }
    group.finish();
}

fn supercharacters(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate_scts");
    group.sample_size(10);
    for g in [corpus::dihedral(4), corpus::dihedral(6)] {
        character_table(&g).unwrap();
        for (name, s) in STRATEGIES {
            group.bench_with_input(BenchmarkId::new(name, g.name()), &g, |b, g| {
                b.iter(|| enumerate_scts(g, s).unwrap())
            });
        }
    }
    group.finish();
}

criterion_group!(benches, search, family, supercharacters);
criterion_main!(benches);
