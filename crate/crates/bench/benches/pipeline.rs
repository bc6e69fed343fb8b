use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use gsforge_bench::*;
use gsforge_core::{
    certify, certify_limit, certify_series, find_gs_weight, hilbert_truncation, nested_sets, parse,
    verify_vinberg, BigRational,
};

fn q(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

fn parsing(c: &mut Criterion) {
    c.bench_function("parse extended", |b| {
        b.iter(|| parse(black_box(EXTENDED)).unwrap())
    });
}

fn certification(c: &mut Criterion) {
    let p = presentation(EXTENDED);
    c.bench_function("certify extended", |b| {
        b.iter(|| certify(black_box(&p)).unwrap())
    });
    let f = long_series(40);
    c.bench_function("certify 40-term series", |b| {
        b.iter(|| certify_series(black_box(&f), 60).unwrap())
    });
    c.bench_function("weight search n=1", |b| {
        b.iter(|| find_gs_weight(black_box(1), 20).unwrap())
    });
}

fn groebner(c: &mut Criterion) {
    let a1 = presentation(A1);
    c.bench_function("hilbert A1 to 16", |b| {
        b.iter(|| hilbert_truncation(black_box(&a1), &q(16)).unwrap())
    });
    let k = presentation(COMMUTATOR);
    c.bench_function("hilbert commutative to 8", |b| {
        b.iter(|| hilbert_truncation(black_box(&k), &q(8)).unwrap())
    });
    c.bench_function("vinberg commutative to 8", |b| {
        b.iter(|| verify_vinberg(black_box(&k), 8).unwrap())
    });
}

fn limits(c: &mut Criterion) {
    let spec = file(D_FAMILY).limit_spec();
    c.bench_function("nested sets D 6 stages", |b| {
        b.iter(|| nested_sets(black_box(&spec), 6).unwrap())
    });
    c.bench_function("certify limit D", |b| {
        b.iter(|| certify_limit(black_box(&spec), &q(12)))
    });
}

criterion_group!(benches, parsing, certification, groebner, limits);
criterion_main!(benches);
