use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use handsaw::betti::{poincare_from_fixed_points, poincare_product};
use handsaw::{for_each_fixed_point, DimensionVector, FramingVector};
use handsaw_bench::{enumeration_cases, label};

fn enumerate(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate");
    for (n, w, v) in enumeration_cases() {
        group.bench_function(label(n, &w, &v), |b| {
            b.iter(|| {
                let mut count = 0usize;
                for_each_fixed_point(n, black_box(&w), black_box(&v), |_| count += 1).unwrap();
                count
            })
        });
    }
    group.finish();
}

fn series(c: &mut Criterion) {
    let w = FramingVector(vec![1, 2, 1, 1]);
    let vmax = DimensionVector(vec![3, 3, 3]);
    c.bench_function("poincare fixed points n4", |b| {
        b.iter(|| poincare_from_fixed_points(4, black_box(&w), black_box(&vmax)).unwrap())
    });
    c.bench_function("poincare product n4", |b| {
        b.iter(|| poincare_product(4, black_box(&w), black_box(&vmax)).unwrap())
    });
}

criterion_group!(benches, enumerate, series);
criterion_main!(benches);
