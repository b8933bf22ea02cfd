use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use klein_core::exact::{GaussianRational, Matrix};
use klein_core::interpolation::{self, FatPointSpec, Location};
use klein_core::klein;

fn scalar_rank(c: &mut Criterion) {
    let points = klein::klein_points();
    let m = interpolation::evaluation_matrix(&points, 6);
    c.bench_function("rank of the 60x84 sextic evaluation matrix", |b| b.iter(|| black_box(&m).rank()));
    let hilbert = Matrix::from_fn(12, 12, |r, c| GaussianRational::from_fraction(1, (r + c + 1) as i64));
    c.bench_function("determinant of a 12x12 Hilbert matrix", |b| b.iter(|| black_box(&hilbert).determinant()));
}

fn symbolic_rank(c: &mut Criterion) {
    let basis = klein::sextic_generators();
    let spec = FatPointSpec::new(Location::Symbolic, 4);
    let m = interpolation::fatpoint_conditions(&basis, &spec).unwrap();
    let mut group = c.benchmark_group("symbolic");
    group.sample_size(10);
    group.bench_function("rank of the 20x24 order-3 condition matrix", |b| b.iter(|| black_box(&m).rank().unwrap()));
    group.finish();
}

fn incidence(c: &mut Criterion) {
    let config = klein::build_klein().unwrap();
    let mut group = c.benchmark_group("incidence");
    group.sample_size(10);
    group
        .bench_function("dual plane arrangement statistics", |b| b.iter(|| klein::incidence_stats(black_box(&config))));
    group.bench_function("collinear structure of 60 points", |b| {
        b.iter(|| klein::collinear_structure(black_box(&config.points)))
    });
    group.finish();
}

criterion_group!(benches, scalar_rank, symbolic_rank, incidence);
criterion_main!(benches);
