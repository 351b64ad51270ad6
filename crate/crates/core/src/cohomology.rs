//! Cohomology of line bundles on projective space and symmetric powers of
//! split bundles, including the twisted-resolution vanishing sweep for the
//! kernel bundle of three general plane cubics.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::Error;

/// A direct sum of line bundles on projective space, stored as a multiset of
/// degrees.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitDegrees {
    ambient_dim: usize,
    degrees: BTreeMap<i64, BigUint>,
}

impl SplitDegrees {
    pub fn new(ambient_dim: usize, degrees: Vec<(i64, u64)>) -> Result<Self, Error> {
        if ambient_dim == 0 {
            return Err(Error::domain("ambient dimension must be positive"));
        }
        let mut map = BTreeMap::new();
        for (d, mult) in degrees {
            if mult == 0 {
                return Err(Error::domain("multiplicities must be positive"));
            }
            *map.entry(d).or_insert_with(BigUint::zero) += BigUint::from(mult);
        }
        if map.is_empty() {
            return Err(Error::domain("a split bundle needs at least one summand"));
        }
        Ok(SplitDegrees {
            ambient_dim,
            degrees: map,
        })
    }

    pub fn line(ambient_dim: usize, degree: i64) -> Self {
        SplitDegrees::new(ambient_dim, vec![(degree, 1)]).expect("line bundle data")
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn degrees(&self) -> &BTreeMap<i64, BigUint> {
        &self.degrees
    }

    pub fn rank(&self) -> BigUint {
        self.degrees.values().sum()
    }

    /// Twist by `O(t)`: shift every degree.
    pub fn twist(&self, t: i64) -> SplitDegrees {
        SplitDegrees {
            ambient_dim: self.ambient_dim,
            degrees: self
                .degrees
                .iter()
                .map(|(&d, m)| (d + t, m.clone()))
                .collect(),
        }
    }

    /// `h^i` summed over the summands.
    pub fn h(&self, i: usize) -> Result<BigUint, Error> {
        let mut acc = BigUint::zero();
        for (&d, mult) in &self.degrees {
            acc += h_line(self.ambient_dim, d, i)? * mult;
        }
        Ok(acc)
    }

    /// Euler characteristic, summed termwise over the summands.
    pub fn euler_characteristic(&self) -> BigInt {
        self.degrees
            .iter()
            .map(|(&d, mult)| euler_line(self.ambient_dim, d) * BigInt::from(mult.clone()))
            .sum()
    }
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// `h^i` of `O(d)` on projective `n`-space: sections in degree 0, Serre-dual
/// sections in degree `n`, nothing in between.
pub fn h_line(n: usize, d: i64, i: usize) -> Result<BigUint, Error> {
    if i > n {
        return Err(Error::domain(format!(
            "cohomological degree {i} exceeds the ambient dimension {n}"
        )));
    }
    if i == 0 {
        if d >= 0 {
            return Ok(binomial((d + n as i64) as u64, n as u64));
        }
        return Ok(BigUint::zero());
    }
    if i == n {
        let dual = -d - n as i64 - 1;
        if dual >= 0 {
            return Ok(binomial((dual + n as i64) as u64, n as u64));
        }
        return Ok(BigUint::zero());
    }
    Ok(BigUint::zero())
}

/// Euler characteristic of `O(d)` on projective `n`-space as the polynomial
/// `(d+1)(d+2)...(d+n) / n!`.
pub fn euler_line(n: usize, d: i64) -> BigInt {
    let mut numerator = BigInt::one();
    for k in 1..=n as i64 {
        numerator *= BigInt::from(d + k);
    }
    let mut factorial = BigInt::one();
    for k in 1..=n as i64 {
        factorial *= BigInt::from(k);
    }
    numerator / factorial
}

/// Symmetric power of a split bundle: the multiset of degree sums over all
/// degree-`m` monomials in the summands.
pub fn sym_degrees(s: &SplitDegrees, m: u32) -> SplitDegrees {
    let distinct: Vec<(i64, BigUint)> = s
        .degrees
        .iter()
        .map(|(&d, mult)| (d, mult.clone()))
        .collect();
    let mut out: BTreeMap<i64, BigUint> = BTreeMap::new();

    // distribute the exponent m over the distinct degrees; each class of
    // multiplicity mu contributes C(mu + e - 1, e) monomials of exponent e
    fn distribute(
        distinct: &[(i64, BigUint)],
        index: usize,
        left: u32,
        degree: i64,
        count: BigUint,
        out: &mut BTreeMap<i64, BigUint>,
    ) {
        if index == distinct.len() {
            if left == 0 {
                *out.entry(degree).or_insert_with(BigUint::zero) += count;
            }
            return;
        }
        let (d, mult) = &distinct[index];
        for e in 0..=left {
            let ways = multiset_count(mult, e);
            if ways.is_zero() {
                continue;
            }
            distribute(
                distinct,
                index + 1,
                left - e,
                degree + *d * e as i64,
                &count * ways,
                out,
            );
        }
    }

    distribute(&distinct, 0, m, 0, BigUint::one(), &mut out);
    SplitDegrees {
        ambient_dim: s.ambient_dim,
        degrees: out,
    }
}

/// Number of degree-`e` monomials in `mult` variables: `C(mult + e - 1, e)`.
fn multiset_count(mult: &BigUint, e: u32) -> BigUint {
    if e == 0 {
        return BigUint::one();
    }
    let mut acc = BigUint::one();
    for i in 0..e as u64 {
        acc = acc * (mult + BigUint::from(i)) / BigUint::from(i + 1);
    }
    acc
}

/// Degree of the determinant of a rank-`r` bundle after twisting by `O(t)`.
pub fn det_twist(r: u32, det_degree: i64, t: i64) -> i64 {
    det_degree + r as i64 * t
}

/// One step of the vanishing sweep: the quotient of
/// `S^{nl}(O(-1)^3)(l)` by `S^{nl-1}(O(-1)^3)(l-4)` on the plane, with the
/// section counts of both split terms and of the quotient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SectionCount {
    pub n: u32,
    pub ell: u32,
    pub left: SplitDegrees,
    pub middle: SplitDegrees,
    pub h0_left: BigUint,
    pub h0_middle: BigUint,
    pub h0_quotient: BigUint,
}

impl SectionCount {
    /// Degree of every left summand (they are all equal).
    pub fn left_degree(&self) -> i64 {
        *self.left.degrees.keys().next().expect("nonempty")
    }

    /// Degree of every middle summand.
    pub fn middle_degree(&self) -> i64 {
        *self.middle.degrees.keys().next().expect("nonempty")
    }
}

/// Sections of the `nl`-th symmetric power of the cubic-kernel bundle
/// twisted by `O(l)`, computed from its split resolution. Valid because the
/// left term, being split on the plane, has no intermediate cohomology.
pub fn lcounter_h0(n: u32, ell: u32) -> Result<SectionCount, Error> {
    if n < 2 {
        return Err(Error::domain("the vanishing sweep needs n >= 2"));
    }
    if ell < 1 {
        return Err(Error::domain("the vanishing sweep needs l >= 1"));
    }
    let base = SplitDegrees::new(2, vec![(-1, 3)])?;
    let left = sym_degrees(&base, n * ell - 1).twist(ell as i64 - 4);
    let middle = sym_degrees(&base, n * ell).twist(ell as i64);
    let h0_left = left.h(0)?;
    let h1_left = left.h(1)?;
    if !h1_left.is_zero() {
        return Err(Error::invariant("left term has intermediate cohomology"));
    }
    let h0_middle = middle.h(0)?;
    if h0_middle < h0_left {
        return Err(Error::invariant("section counts are not monotone"));
    }
    let h0_quotient = &h0_middle - &h0_left;
    Ok(SectionCount {
        n,
        ell,
        left,
        middle,
        h0_left,
        h0_middle,
        h0_quotient,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn sections_of_plane_bundles() {
        assert_eq!(h_line(2, 3, 0).unwrap(), big(10)); // cubics on the plane
        assert_eq!(h_line(2, -4, 2).unwrap(), big(3));
        for d in -12..=12 {
            assert_eq!(h_line(2, d, 1).unwrap(), big(0));
        }
        assert!(h_line(2, 0, 3).is_err());
    }

    #[test]
    fn serre_duality() {
        for n in 1..=4usize {
            for d in -10i64..=10 {
                for i in 0..=n {
                    assert_eq!(
                        h_line(n, d, i).unwrap(),
                        h_line(n, -d - n as i64 - 1, n - i).unwrap(),
                        "n={n} d={d} i={i}"
                    );
                }
            }
        }
    }

    #[test]
    fn euler_characteristic_matches_alternating_sum() {
        for n in 1..=4usize {
            for d in -10i64..=10 {
                let mut total = BigInt::zero();
                for i in 0..=n {
                    let term = BigInt::from(h_line(n, d, i).unwrap());
                    if i % 2 == 0 {
                        total += term;
                    } else {
                        total -= term;
                    }
                }
                assert_eq!(total, euler_line(n, d), "n={n} d={d}");
            }
        }
    }

    #[test]
    fn symmetric_power_degrees() {
        let base = SplitDegrees::new(2, vec![(-1, 3)]).unwrap();
        let s2 = sym_degrees(&base, 2);
        assert_eq!(s2.degrees().len(), 1);
        assert_eq!(s2.degrees()[&-2], big(6));
        assert_eq!(sym_degrees(&base, 1), base);
        for m in 1..=8u32 {
            let rank = sym_degrees(&base, m).rank();
            assert_eq!(rank, binomial(m as u64 + 2, 2));
        }
    }

    #[test]
    fn mixed_symmetric_power() {
        // S^2(O(a) + O(b)) has degrees 2a, a+b, 2b
        let e = SplitDegrees::new(1, vec![(2, 1), (5, 1)]).unwrap();
        let s2 = sym_degrees(&e, 2);
        assert_eq!(s2.degrees()[&4], big(1));
        assert_eq!(s2.degrees()[&7], big(1));
        assert_eq!(s2.degrees()[&10], big(1));
    }

    #[test]
    fn vanishing_sweep_examples() {
        assert_eq!(lcounter_h0(2, 1).unwrap().h0_quotient, big(0));
        assert_eq!(lcounter_h0(3, 2).unwrap().h0_quotient, big(0));
        let step = lcounter_h0(5, 4).unwrap();
        assert_eq!(step.h0_quotient, big(0));
        assert_eq!(step.middle_degree(), -16);
        assert!(lcounter_h0(1, 1).is_err());
    }

    #[test]
    fn vanishing_sweep_full_range() {
        for n in 2..=6u32 {
            for ell in 1..=6u32 {
                let step = lcounter_h0(n, ell).unwrap();
                assert_eq!(step.h0_quotient, big(0), "n={n} l={ell}");
                // both degree bookkeepings are negative throughout the range
                assert!(step.left_degree() < 0);
                assert!(step.middle_degree() < 0);
                let stated_left = 2 * ell as i64 - (n * ell) as i64 - 4;
                assert!(stated_left < 0);
                assert_eq!(step.left_degree(), ell as i64 - (n * ell) as i64 - 3);
            }
        }
    }

    #[test]
    fn determinant_twists() {
        assert_eq!(det_twist(2, 3, -1), 1);
        assert_eq!(det_twist(4, 7, 0), 7);
        assert_eq!(det_twist(3, 0, 2), 6);
    }

    #[test]
    fn quotient_rank_in_the_resolution() {
        for n in 2..=6u32 {
            for ell in 1..=6u32 {
                let step = lcounter_h0(n, ell).unwrap();
                let rank = BigInt::from(step.middle.rank()) - BigInt::from(step.left.rank());
                // rank of S^{nl} of a rank-2 bundle
                assert_eq!(rank, BigInt::from(n as u64 * ell as u64 + 1));
            }
        }
    }
}
