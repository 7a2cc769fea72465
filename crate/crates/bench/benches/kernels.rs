use criterion::{black_box, criterion_group, criterion_main, Criterion};
use sigpart_core::classes::{enumerate_class, ClassId};
use sigpart_core::{product_side, sum_side, verify_bijection, IdentityId, MapId};

fn series(c: &mut Criterion) {
    c.bench_function("sum_side GG1_ANDREWS N=200", |b| {
        b.iter(|| sum_side(black_box(IdentityId::Gg1Andrews), 200))
    });
    c.bench_function("sum_side P_SIGNED N=200", |b| {
        b.iter(|| sum_side(black_box(IdentityId::PSigned), 200))
    });
    c.bench_function("product_side RR1 N=200", |b| {
        b.iter(|| product_side(black_box(IdentityId::Rr1Signed), 200))
    });
}

fn enumeration(c: &mut Criterion) {
    c.bench_function("enumerate P_SIGNED n=25", |b| {
        b.iter(|| enumerate_class(black_box(ClassId::PSigned), 25))
    });
    c.bench_function("enumerate GG1_ANDREWS_SIGNED n=40", |b| {
        b.iter(|| enumerate_class(black_box(ClassId::Gg1AndrewsSigned), 40))
    });
}

fn bijections(c: &mut Criterion) {
    let mut g = c.benchmark_group("bijection sweep");
    g.sample_size(10);
    g.bench_function("F_P weight<=20", |b| {
        b.iter(|| verify_bijection(black_box(MapId::FP), 20))
    });
    g.bench_function("H_GG1 weight<=35", |b| {
        b.iter(|| verify_bijection(black_box(MapId::HGg1), 35))
    });
    g.finish();
}

criterion_group!(benches, series, enumeration, bijections);
criterion_main!(benches);
