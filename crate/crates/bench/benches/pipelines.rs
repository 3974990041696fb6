//! End-to-end timings for the hot paths: Weyl-orbit enumeration, blocked
//! cochain ranks, the polynomial realization with its certificate, and
//! the presented-group cohomology.

use criterion::{criterion_group, criterion_main, Criterion};
use rankone_bench::algebra;
use rankone_core::bigcell::{jet_module, BigCell};
use rankone_core::catalog::AlgebraId;
use rankone_core::{ce, gamma, kostant};
use std::hint::black_box;

fn bench_kostant(c: &mut Criterion) {
    let d = algebra("f4").datum.clone();
    d.weyl_group();
    c.bench_function("kostant_h1_a_f4", |b| {
        b.iter(|| black_box(kostant::adjoint_h1_a(&d).unwrap()))
    });
    c.bench_function("lowest_orbit_scan_f4", |b| {
        b.iter(|| black_box(kostant::lowest_orbit_scan(&d).all_mus()))
    });
}

fn bench_ce(c: &mut Criterion) {
    let alg = algebra("sp:6");
    let n = ce::n_algebra(&alg);
    let v = ce::adjoint_module(&alg);
    c.bench_function("ce_h1_a_sp6", |b| {
        b.iter(|| black_box(ce::ce_h(&n, &v, 1, true).unwrap().a_invariant_dimension))
    });
    let cell = BigCell::new(algebra("sl:3")).unwrap();
    let vj = ce::jet_nmodule(&jet_module(&cell, 3));
    let n3 = ce::n_algebra(&cell.alg);
    c.bench_function("ce_h1_a_sl3_jets3", |b| {
        b.iter(|| black_box(ce::ce_h(&n3, &vj, 1, true).unwrap().a_invariant_dimension))
    });
}

fn bench_bigcell(c: &mut Criterion) {
    let mut g = c.benchmark_group("realization");
    g.sample_size(10);
    g.bench_function("bigcell_certified_sl4", |b| {
        b.iter(|| black_box(BigCell::new(algebra("sl:4")).unwrap().lambda.len()))
    });
    g.finish();
}

fn bench_gamma(c: &mut Criterion) {
    let id = AlgebraId::parse("sp:6").unwrap();
    c.bench_function("fox_gmodp_sp6", |b| {
        b.iter(|| {
            let rep = gamma::adjoint_gmodp_cohomology(id, 2).unwrap();
            black_box((rep.h0, rep.h1))
        })
    });
}

criterion_group!(benches, bench_kostant, bench_ce, bench_bigcell, bench_gamma);
criterion_main!(benches);
