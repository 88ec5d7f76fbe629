use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BatchSize, Criterion};
use handsaw::kl::{kl_polynomial, KLCache, Permutation};

fn single(c: &mut Criterion) {
    let mut group = c.benchmark_group("kl cold cache");
    for (x, w) in [("1234", "3412"), ("123456", "563412"), ("12345678", "57681234")] {
        let x = Permutation::parse(x).unwrap();
        let w = Permutation::parse(w).unwrap();
        group.bench_function(format!("P_{{{x},{w}}}"), |b| {
            b.iter_batched(
                KLCache::new,
                |mut cache| kl_polynomial(black_box(&x), black_box(&w), &mut cache).unwrap(),
                BatchSize::SmallInput,
            )
        });
    }
    group.finish();
}

fn all_pairs(c: &mut Criterion) {
    let perms = Permutation::all(5);
    c.bench_function("kl all pairs S5", |b| {
        b.iter(|| {
            let mut cache = KLCache::new();
            let mut total = 0usize;
            for x in &perms {
                for w in &perms {
                    total += kl_polynomial(x, w, &mut cache).unwrap().terms().count();
                }
            }
            total
        })
    });
}

criterion_group!(benches, single, all_pairs);
criterion_main!(benches);
