use std::hint::black_box;

use bicross_bench::{canonical, fp};
use bicross_core::matched_pair::{enumerate_actions, Side};
use bicross_core::morphism::{coalgebra_maps, MorphismSolver};
use bicross_core::presets::{h16_lambda, sweedler_h4};
use bicross_core::{bicrossed_product, check_hopf_axioms, check_matched_pair, drinfeld_double, Field};
use criterion::{criterion_group, criterion_main, Criterion};

fn axioms(c: &mut Criterion) {
    for f in [Field::rationals(), fp(5)] {
        let h = h16_lambda(f, &f.one()).unwrap();
        c.bench_function(&format!("hopf axioms H16,1 over {f}"), |b| b.iter(|| check_hopf_axioms(black_box(&h))));
    }
    let pair = canonical(fp(5), 1);
    c.bench_function("matched pair axioms canonical(1) over F5", |b| b.iter(|| check_matched_pair(black_box(&pair))));
}

fn construction(c: &mut Criterion) {
    let pair = canonical(fp(5), 3);
    c.bench_function("bicrossed product canonical(3) over F5", |b| b.iter(|| bicrossed_product(black_box(&pair))));
    let h = sweedler_h4(Field::rationals()).unwrap();
    c.bench_function("drinfeld double of H4 over Q", |b| b.iter(|| drinfeld_double(black_box(&h))));
}

fn search(c: &mut Criterion) {
    let mut g = c.benchmark_group("search");
    g.sample_size(10);
    let h = sweedler_h4(fp(5)).unwrap();
    g.bench_function("coalgebra maps H4 -> H4 over F5", |b| b.iter(|| coalgebra_maps(&h, &h)));
    g.bench_function("left action census over F3", |b| b.iter(|| enumerate_actions(fp(3), Side::Left)));
    let (src, dst) = (canonical(fp(3), 2), canonical(fp(3), 1));
    g.bench_function("isomorphism canonical(2) -> canonical(1) over F3", |b| {
        b.iter(|| MorphismSolver::new().are_isomorphic(&src, &dst))
    });
    g.finish();
}

criterion_group!(benches, axioms, construction, search);
criterion_main!(benches);
