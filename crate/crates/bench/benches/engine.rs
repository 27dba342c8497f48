//! Criterion benchmarks for the hot paths: Macdonald basis construction,
//! the Negut equivalence certificate, and normal-form reduction of orbit
//! sums.

use criterion::{criterion_group, criterion_main, Criterion};

use plethys::macdonald::Engine;
use plethys::negut::negut_equivalence_check;
use plethys::partitions::partitions_of;
use plethys::qt::RatQT;
use plethys::zlaurent::{sym_group, OrbitMode, ZLaurent};

fn bench_htilde(c: &mut Criterion) {
    c.bench_function("htilde basis through degree 5", |b| {
        b.iter(|| {
            // A fresh engine defeats the cross-run cache.
            let eng = Engine::new(5);
            for n in 0..=5u32 {
                for mu in partitions_of(n) {
                    std::hint::black_box(eng.htilde(&mu).unwrap());
                }
            }
        })
    });
}

fn bench_negut_certificate(c: &mut Criterion) {
    c.bench_function("negut equivalence certificate (4,3)", |b| {
        b.iter(|| std::hint::black_box(negut_equivalence_check(4, 3).unwrap()))
    });
}

fn bench_normal_form(c: &mut Criterion) {
    // An asymmetric 5-variable Laurent polynomial with a few hundred terms.
    let mut f = ZLaurent::monomial(5, vec![3, 1, 0, -1, -2], RatQT::one());
    for i in 0..5 {
        let mut e = vec![0i64; 5];
        e[i] = 2;
        e[(i + 1) % 5] = -1;
        f = f.mul(&ZLaurent::monomial(5, e, RatQT::q()).add(&ZLaurent::monomial(
            5,
            vec![0; 5],
            RatQT::t(),
        )));
    }
    c.bench_function("normal form of a 5-variable Laurent sum", |b| {
        b.iter(|| std::hint::black_box(f.normal_form()))
    });
    c.bench_function("antisymmetric orbit sum over S_5", |b| {
        b.iter(|| std::hint::black_box(sym_group(&f, 0, 4, OrbitMode::Asym).unwrap()))
    });
}

criterion_group!(benches, bench_htilde, bench_negut_certificate, bench_normal_form);
criterion_main!(benches);
