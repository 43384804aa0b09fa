use criterion::{black_box, criterion_group, criterion_main, Criterion};

use kmt_core::chevalley::checks::engine_report;
use kmt_core::chevalley::{ChevalleyType, Engine};
use kmt_core::symrep::{check_transport, SeriesVec};
use kmt_core::{build_sigma, catalogue, certify, certify_property_t, RingSpec, RootSlice};

fn roots(c: &mut Criterion) {
    let affine = catalogue::affine_a1();
    c.bench_function("root slice affine A1 cap 40", |b| {
        b.iter(|| RootSlice::enumerate(black_box(&affine), 40).unwrap().len())
    });
    let ind = catalogue::indefinite_rank3();
    c.bench_function("root slice rank-3 indefinite cap 12", |b| {
        b.iter(|| RootSlice::enumerate(black_box(&ind), 12).unwrap().len())
    });
}

fn sigma(c: &mut Criterion) {
    let d4 = catalogue::d4_star();
    c.bench_function("certify generating set D4", |b| {
        b.iter(|| certify(&build_sigma(black_box(&d4)).unwrap()).unwrap().len())
    });
    let ring: RingSpec = "Z/53".parse().unwrap();
    let b2 = catalogue::b2();
    c.bench_function("certificate pipeline B2 over Z/53", |b| b.iter(|| certify_property_t(black_box(&b2), &ring)));
}

fn chevalley(c: &mut Criterion) {
    let e = Engine::new(ChevalleyType::G2, 5).unwrap();
    let (x, y) = (e.element(1234), e.element(9876));
    c.bench_function("G2 unipotent multiply", |b| b.iter(|| e.mul(black_box(&x), black_box(&y)).unwrap()));
    let mut group = c.benchmark_group("engine");
    group.sample_size(10);
    group.bench_function("B2 report over Z/5", |b| b.iter(|| engine_report(ChevalleyType::B2, 5, 1000, 0).unwrap()));
    group.finish();
}

fn symrep(c: &mut Criterion) {
    let mut rng = kmt_core::rng::substream(0, 0);
    let v = SeriesVec::sample(&mut rng, 5, 8);
    c.bench_function("shear action on series vector", |b| {
        b.iter(|| black_box(&v).act(kmt_core::symrep::Orientation::Upper, kmt_core::symrep::Param::T))
    });
    let mut group = c.benchmark_group("transport");
    group.sample_size(10);
    group.bench_function("1000 samples over Z/5", |b| b.iter(|| check_transport(5, 1000, 0).unwrap()));
    group.finish();
}

criterion_group!(benches, roots, sigma, chevalley, symrep);
criterion_main!(benches);
