//! Exact rational scalars used everywhere in this crate.
//!
//! All lattice coefficients, multiplicities and graded-ring entries are
//! `BigRational`; there is no floating-point mode.

use num_bigint::BigInt;
use num_rational::BigRational;

pub type Rat = BigRational;

/// Integer as a rational.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// `num/den` as a reduced rational. Panics on a zero denominator.
pub fn ratio(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Converts a slice of machine integers into rational coefficients.
pub fn rat_vec(v: &[i64]) -> Vec<Rat> {
    v.iter().map(|&n| rat(n)).collect()
}
