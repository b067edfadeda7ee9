use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use heffter::construct::five_diag::five_diag_params;
use heffter::construct::{build_5diag, exhaustive_search};
use heffter::orderings::{knight_tour, orderings_from_orientations};
use heffter::topology::{build_rotation, trace_faces};
use heffter::verify::verify;
use heffter::{fixtures, HeffterParams, SearchBudget, SkeletonConstraint};

fn bench_5diag(c: &mut Criterion) {
    let mut group = c.benchmark_group("5diag_build_verify");
    for n in [15usize, 63, 199] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| {
                let a = build_5diag(n).unwrap();
                verify(black_box(&a), &five_diag_params(n)).unwrap()
            })
        });
    }
    group.finish();
}

fn bench_search(c: &mut Criterion) {
    let budget = SearchBudget::default();
    let none = HeffterParams::new(3, 3, 3, 3, 2, 1).unwrap();
    c.bench_function("search_h3x3_exhaust", |b| {
        b.iter(|| exhaustive_search(black_box(&none), None, &budget).unwrap())
    });
    let p = HeffterParams::new(5, 5, 3, 3, 2, 1).unwrap();
    let diagonals = SkeletonConstraint::Diagonals(vec![1, 2, 5]);
    c.bench_function("search_h5x3_diagonals", |b| {
        b.iter(|| exhaustive_search(black_box(&p), Some(&diagonals), &budget).unwrap())
    });
}

fn bench_faces(c: &mut Criterion) {
    let mut group = c.benchmark_group("face_trace");
    let docs = [
        ("h5x3", fixtures::searched_5x3()),
        ("5diag15", fixtures::five_diagonal_15()),
    ];
    for (name, doc) in docs {
        let o = knight_tour(&doc.array).unwrap();
        let op = orderings_from_orientations(&doc.array, &o).unwrap();
        let rs = build_rotation(&doc.array, &op, doc.params.modulus()).unwrap();
        group.bench_function(name, |b| b.iter(|| trace_faces(black_box(&rs)).unwrap()));
    }
    group.finish();
}

criterion_group!(benches, bench_5diag, bench_search, bench_faces);
criterion_main!(benches);
