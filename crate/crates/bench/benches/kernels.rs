use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;
use std::sync::Arc;

use bds_core::bds::{build_datum, HermitianPair};
use bds_core::decomp::{algebra_l, freudenthal, sym_power_u1, Algebra, DEFAULT_GUARD};
use bds_core::lspath::path_model;
use bds_core::ratio::q;
use bds_core::rootsys::{build_root_system, TypeLabel};
use bds_core::strongorth::cascade;

fn bench_root_systems(c: &mut Criterion) {
    c.bench_function("build_e8", |b| {
        b.iter(|| build_root_system(black_box(TypeLabel::E), black_box(8)).unwrap())
    });
    c.bench_function("build_datum_e8_d8", |b| {
        let sys = build_root_system(TypeLabel::E, 8).unwrap();
        b.iter(|| build_datum(Arc::clone(&sys), black_box(0)).unwrap())
    });
}

fn bench_cascade(c: &mut Criterion) {
    let pair = HermitianPair::standalone(TypeLabel::E, 7, 6).unwrap();
    c.bench_function("cascade_e_vii", |b| b.iter(|| cascade(black_box(&pair))));
}

fn bench_characters(c: &mut Criterion) {
    let b3 = Algebra::ambient(build_root_system(TypeLabel::B, 3).unwrap());
    let adjoint = b3.sys.highest_root.clone();
    c.bench_function("freudenthal_b3_adjoint", |b| {
        b.iter(|| freudenthal(&b3, black_box(&adjoint), DEFAULT_GUARD).unwrap())
    });

    let datum = build_datum(build_root_system(TypeLabel::C, 4).unwrap(), 1).unwrap();
    c.bench_function("sym_power_sp22_m4", |b| {
        b.iter(|| sym_power_u1(&datum, black_box(4), DEFAULT_GUARD).unwrap())
    });
    let levi = algebra_l(&datum);
    c.bench_function("weyl_dim_sp22", |b| {
        b.iter(|| levi.weyl_dim(black_box(&datum.eps_star.neg())).unwrap())
    });
}

fn bench_paths(c: &mut Criterion) {
    let alg = Algebra::ambient(build_root_system(TypeLabel::C, 2).unwrap());
    let shape = alg.sys.fundamental_weights[1].scale(&q(3));
    c.bench_function("path_model_c2_3eps", |b| {
        b.iter(|| path_model(&alg, black_box(&shape), DEFAULT_GUARD).unwrap())
    });
}

criterion_group!(
    benches,
    bench_root_systems,
    bench_cascade,
    bench_characters,
    bench_paths
);
criterion_main!(benches);
