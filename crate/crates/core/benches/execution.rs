use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use ltype::exact::ratio;
use ltype::exec::{self, Execution};
use ltype::inner::gram;
use ltype::laguerre::{higher_order, HigherRepr};

const MODES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn gram_matrix(c: &mut Criterion) {
    let mut group = c.benchmark_group("gram");
    group.sample_size(10);
    let mass = ratio(1, 2);
    for (name, mode) in MODES {
        group.bench_with_input(BenchmarkId::new(name, "alpha=2 nmax=10"), &mode, |b, &mode| {
            b.iter(|| gram(2, &mass, 10, mode))
        });
    }
    group.finish();
}

fn representation_grid(c: &mut Criterion) {
    let mut group = c.benchmark_group("laguerre-representations");
    group.sample_size(10);
    let cases: Vec<(u32, HigherRepr)> = (0..=3)
        .flat_map(|alpha| HigherRepr::ALL.into_iter().map(move |r| (alpha, r)))
        .collect();
    for (name, mode) in MODES {
        group.bench_with_input(BenchmarkId::new(name, "alpha<=3"), &mode, |b, &mode| {
            b.iter(|| exec::map(mode, &cases, |&(alpha, repr)| higher_order(alpha, repr).unwrap()))
        });
    }
    group.finish();
}

criterion_group!(benches, gram_matrix, representation_grid);
criterion_main!(benches);
