use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use horncalc::verify::{audit, residual_exact, AuditOptions, ReferenceSet};
use horncalc::{derive_system, eval_series, particular_solutions, EvalConfig};
use horncalc_bench::{exact_binding, float_binding, series};

fn derive(c: &mut Criterion) {
    let mut g = c.benchmark_group("derive_system");
    for name in ["Gauss", "F4", "F_10a", "E_1"] {
        let s = series(name);
        g.bench_with_input(BenchmarkId::from_parameter(name), &s, |b, s| b.iter(|| derive_system(black_box(s)).unwrap()));
    }
    g.finish();
}

fn residual(c: &mut Criterion) {
    let mut g = c.benchmark_group("residual_exact");
    for n in [6u32, 10] {
        let s = series("F_10a");
        let p = derive_system(&s).unwrap();
        let b = exact_binding(&s, n);
        g.bench_with_input(BenchmarkId::new("F_10a", n), &n, |bch, &n| bch.iter(|| residual_exact(&p, &s, &b, n).unwrap()));
    }
    g.finish();
}

fn evaluate(c: &mut Criterion) {
    let mut g = c.benchmark_group("eval_series");
    let cfg = EvalConfig::default();
    for (name, pt) in [("Gauss", vec![0.5]), ("F4", vec![0.1, 0.2]), ("F_10a", vec![0.1, 0.15, 0.2])] {
        let s = series(name);
        let b = float_binding(&s);
        g.bench_function(name, |bch| bch.iter(|| eval_series(&s, &b, black_box(&pt), &cfg).unwrap()));
    }
    g.finish();
}

fn frobenius(c: &mut Criterion) {
    let s = series("F_10a");
    c.bench_function("particular_solutions/F_10a", |b| b.iter(|| particular_solutions(&s).unwrap()));
}

fn full_audit(c: &mut Criterion) {
    let defs = vec![series("F4"), series("F_10a"), series("E_1")];
    let refs = ReferenceSet::shipped().unwrap();
    let mut g = c.benchmark_group("audit");
    g.sample_size(10);
    g.bench_function("three entries", |b| b.iter(|| audit(&defs, &refs, &AuditOptions::default())));
    g.finish();
}

criterion_group!(benches, derive, residual, evaluate, frobenius, full_audit);
criterion_main!(benches);
