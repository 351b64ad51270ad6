//! Benchmarks for the exact-arithmetic kernels: cone membership by
//! Fourier-Motzkin, Zariski decomposition, base loci of split bundles,
//! tensor-power decompositions and Pieri expansion, and the log-Chern round
//! trip. Dimensions are the real workloads (rank-3 lattice, weight-8
//! partitions): these are here to catch regressions, not to stress-test.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use baseloci_core::base_loci::SplitBundle;
use baseloci_core::chern::{ch_split_bundle, exp_lc, lc};
use baseloci_core::lattice::presets::p2_double_blowup;
use baseloci_core::random::{random_split_bundle, seeded_rng};
use baseloci_core::schur::{homogeneous_product, tensor_power_decomposition, Partition};
use baseloci_core::zariski::decompose;

fn bench_cone_tests(c: &mut Criterion) {
    let x = p2_double_blowup();
    let classes: Vec<_> = [
        [1, 1, 1],
        [2, -1, 1],
        [6, -2, -3],
        [3, 1, -2],
        [-1, 2, 0],
    ]
    .iter()
    .map(|v| x.class_from_ints(v).unwrap())
    .collect();
    c.bench_function("psef_test_fourier_motzkin", |b| {
        b.iter(|| {
            for d in &classes {
                black_box(d.is_psef());
            }
        })
    });
}

fn bench_zariski(c: &mut Criterion) {
    let x = p2_double_blowup();
    let classes: Vec<_> = [[1, 1, 1], [2, -1, 1], [2, 0, 1], [5, 2, 3]]
        .iter()
        .map(|v| x.class_from_ints(v).unwrap())
        .collect();
    c.bench_function("zariski_decompose", |b| {
        b.iter(|| {
            for d in &classes {
                black_box(decompose(d).unwrap());
            }
        })
    });
}

fn bench_base_loci(c: &mut Criterion) {
    let x = p2_double_blowup();
    let mut rng = seeded_rng(42);
    let bundles: Vec<SplitBundle> = (0..8).map(|_| random_split_bundle(&mut rng, &x, 3)).collect();
    c.bench_function("bundle_b_plus", |b| {
        b.iter(|| {
            for e in &bundles {
                black_box(e.b_plus().unwrap());
            }
        })
    });
    c.bench_function("bundle_sym3_b_minus", |b| {
        b.iter(|| {
            for e in &bundles {
                black_box(e.sym_power(3).b_minus().unwrap());
            }
        })
    });
}

fn bench_schur(c: &mut Criterion) {
    c.bench_function("tensor_power_decomposition_8_4", |b| {
        b.iter(|| black_box(tensor_power_decomposition(8, 4)))
    });
    let shape = Partition::new(vec![4, 2, 2]).unwrap();
    c.bench_function("pieri_expansion_weight_8", |b| {
        b.iter(|| black_box(homogeneous_product(shape.parts())))
    });
}

fn bench_chern(c: &mut Criterion) {
    let x = p2_double_blowup();
    let mut rng = seeded_rng(43);
    let bundles: Vec<SplitBundle> = (0..8).map(|_| random_split_bundle(&mut rng, &x, 3)).collect();
    c.bench_function("lc_round_trip", |b| {
        b.iter(|| {
            for e in &bundles {
                let ch = ch_split_bundle(e).unwrap();
                let l = lc(&ch).unwrap();
                black_box(exp_lc(&l));
            }
        })
    });
}

criterion_group!(
    benches,
    bench_cone_tests,
    bench_zariski,
    bench_base_loci,
    bench_schur,
    bench_chern
);
criterion_main!(benches);
