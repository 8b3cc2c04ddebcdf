use arithmat::exact_lattice::{hermite, snf};
use arithmat::{IntMatrix, LocallyRankedTriple, PeriodicArrangement, QuotientData, Subset, ZMatroid};
use criterion::{black_box, criterion_group, criterion_main, Criterion};

fn sample_matrix() -> IntMatrix {
    IntMatrix::from_rows(&[
        [3, -1, 2, 0, 5, -2, 1, 4],
        [1, 4, -3, 2, 0, 1, -2, 3],
        [-2, 0, 1, 5, -1, 3, 2, -4],
        [0, 2, 2, -1, 3, 0, 5, 1],
        [4, -3, 0, 1, 2, -5, 1, 0],
        [1, 1, -1, 3, -2, 2, 0, 2],
    ])
}

fn arrangement() -> PeriodicArrangement {
    PeriodicArrangement::centered(IntMatrix::from_rows(&[[1, 0, 1, 2, 1, -1], [0, 1, 1, -1, 2, 3]])).unwrap()
}

fn normal_forms(c: &mut Criterion) {
    let m = sample_matrix();
    c.bench_function("hermite 6x8", |b| b.iter(|| hermite(black_box(&m))));
    c.bench_function("smith 6x8", |b| b.iter(|| snf(black_box(&m))));
}

fn layers(c: &mut Criterion) {
    let arr = arrangement();
    c.bench_function("layer poset 2x6", |b| b.iter(|| black_box(&arr).layer_poset().unwrap()));
}

fn polynomials(c: &mut Criterion) {
    let q = arrangement().arithmetic_matroid().unwrap();
    c.bench_function("g_tutte 2x6", |b| b.iter(|| black_box(&q).g_tutte()));
    c.bench_function("crapo decomposition 2x6", |b| b.iter(|| black_box(&q).crapo_decomposition(None).unwrap()));
    let labels: Vec<String> = (0..8).map(|i| i.to_string()).collect();
    let u48 = QuotientData::trivial(LocallyRankedTriple::matroid(labels, |s: Subset| s.len().min(4)).unwrap());
    c.bench_function("axioms U(4,8)", |b| b.iter(|| black_box(&u48).check_axioms()));
}

fn zmatroid(c: &mut Criterion) {
    let m = IntMatrix::from_rows(&[[1, 0, 1, 2, 1], [0, 1, 1, -1, 2]]);
    c.bench_function("zmatroid check 2x5", |b| {
        b.iter(|| ZMatroid::from_matrix(black_box(&m)).unwrap().check())
    });
}

criterion_group!(benches, normal_forms, layers, polynomials, zmatroid);
criterion_main!(benches);
