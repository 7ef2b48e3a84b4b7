use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use holorec::rec_engine::{lattice_terms, Options, Route};
use holorec::{classify_str, derive, oracle_expand};

const EXPRESSIONS: [&str; 4] = [
    "1/sqrt(1-2*x-3*x^2)",
    "(1-x)^(1/3)/(1-2*x-7*x^2)^(3/2)",
    "exp(x/(1-x))",
    "sqrt(2*x+sqrt(1-4*x))",
];

fn derivation(c: &mut Criterion) {
    let mut group = c.benchmark_group("derive");
    for expr in EXPRESSIONS {
        let class = classify_str(expr).unwrap();
        for route in [Route::Generic, Route::ClosedForm] {
            let opts = Options { route, ..Options::default() };
            group.bench_with_input(BenchmarkId::new(format!("{route:?}"), expr), &class, |b, class| {
                b.iter(|| derive(class, &opts).unwrap())
            });
        }
    }
    group.finish();
}

fn generation(c: &mut Criterion) {
    let class = classify_str("1/sqrt(1-2*x-3*x^2)").unwrap();
    let rec = derive(&class, &Options::default()).unwrap().recurrence;
    let mut group = c.benchmark_group("generate");
    for n in [1_000usize, 10_000] {
        group.bench_with_input(BenchmarkId::new("trinomial", n), &n, |b, &n| {
            b.iter(|| lattice_terms(&rec).unwrap().take(n + 1).map(Result::unwrap).last())
        });
    }
    group.finish();
}

fn oracle(c: &mut Criterion) {
    let mut group = c.benchmark_group("oracle");
    for expr in EXPRESSIONS {
        let class = classify_str(expr).unwrap();
        group.bench_with_input(BenchmarkId::new("expand_200", expr), &class, |b, class| {
            b.iter(|| oracle_expand(class, 200).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, derivation, generation, oracle);
criterion_main!(benches);
