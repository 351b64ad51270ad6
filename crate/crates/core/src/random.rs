//! Seeded generators for the randomized verification suites. All suites log
//! their seed, so any failure is reproducible.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::base_loci::SplitBundle;
use crate::lattice::{DivisorClass, SurfaceLattice};
use crate::rat::{rat, ratio, Rat};

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A nonnegative rational with numerator up to `max_numer` and denominator
/// up to `max_denom`.
pub fn nonneg_rational(rng: &mut impl Rng, max_numer: i64, max_denom: i64) -> Rat {
    ratio(rng.random_range(0..=max_numer), rng.random_range(1..=max_denom))
}

/// A pseudoeffective class: a nonnegative rational combination of the
/// effective generators, the polarization, and any extra nef classes.
pub fn random_psef_class(
    rng: &mut impl Rng,
    lattice: &SurfaceLattice,
    extra_nef: &[DivisorClass],
) -> DivisorClass {
    let mut acc = lattice.zero_class();
    for g in lattice.mori_generators() {
        acc = &acc + &g.scale(&nonneg_rational(rng, 4, 4));
    }
    acc = &acc + &lattice.polarization().scale(&nonneg_rational(rng, 2, 4));
    for nef in extra_nef {
        acc = &acc + &nef.scale(&nonneg_rational(rng, 2, 4));
    }
    acc
}

/// A split bundle with up to `max_rank` summands, integer summand
/// coefficients in `[-3, 3]`, and a rational twist with denominators at
/// most 4.
pub fn random_split_bundle(
    rng: &mut impl Rng,
    lattice: &SurfaceLattice,
    max_rank: usize,
) -> SplitBundle {
    let rank = rng.random_range(1..=max_rank.max(1));
    let summands = (0..rank)
        .map(|_| {
            let coeffs = (0..lattice.rank())
                .map(|_| rat(rng.random_range(-3..=3)))
                .collect();
            lattice.class(coeffs).expect("rank matches")
        })
        .collect();
    let twist = lattice
        .class(
            (0..lattice.rank())
                .map(|_| {
                    let denom = rng.random_range(1..=4);
                    ratio(rng.random_range(-3 * denom..=3 * denom), denom)
                })
                .collect(),
        )
        .expect("rank matches");
    SplitBundle::new(summands, twist).expect("generated data is consistent")
}

/// An integer class with coefficients in `[-bound, bound]`.
pub fn random_integer_class(
    rng: &mut impl Rng,
    lattice: &SurfaceLattice,
    bound: i64,
) -> DivisorClass {
    lattice
        .class((0..lattice.rank()).map(|_| rat(rng.random_range(-bound..=bound))).collect())
        .expect("rank matches")
}
