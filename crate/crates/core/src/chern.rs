//! Truncated graded numerical ring with Chern characters and log-Chern
//! characters of split bundles.
//!
//! Two ring models: projective `n`-space with the powers of the hyperplane
//! class, and a surface with graded pieces (scalars, the divisor lattice, a
//! point class) multiplied through the intersection form. The log-Chern
//! character keeps the rank multiplicatively — `log r` is never evaluated —
//! so additivity under tensor product is an exactly checkable identity.

use std::fmt;
use std::sync::Arc;

use num_traits::{Signed, Zero};

use crate::base_loci::SplitBundle;
use crate::cohomology::SplitDegrees;
use crate::error::Error;
use crate::lattice::{DivisorClass, SurfaceLattice};
use crate::rat::{rat, Rat};

#[derive(Debug, PartialEq, Eq)]
enum RingKind {
    /// `N^*` of projective `dim`-space: one basis class per degree.
    Projective { dim: usize },
    /// `N^*` of a surface: scalars, the lattice, a point class.
    Surface { lattice: SurfaceLattice },
}

/// A truncated graded numerical ring.
#[derive(Debug, Clone)]
pub struct NumericalRing {
    kind: Arc<RingKind>,
}

impl PartialEq for NumericalRing {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.kind, &other.kind) || self.kind == other.kind
    }
}

impl Eq for NumericalRing {}

impl NumericalRing {
    pub fn projective_space(dim: usize) -> Result<Self, Error> {
        if dim == 0 {
            return Err(Error::domain("ambient dimension must be positive"));
        }
        let ring = NumericalRing {
            kind: Arc::new(RingKind::Projective { dim }),
        };
        ring.check_axioms()?;
        Ok(ring)
    }

    pub fn surface(lattice: &SurfaceLattice) -> Result<Self, Error> {
        let ring = NumericalRing {
            kind: Arc::new(RingKind::Surface {
                lattice: lattice.clone(),
            }),
        };
        ring.check_axioms()?;
        Ok(ring)
    }

    pub fn dimension(&self) -> usize {
        match &*self.kind {
            RingKind::Projective { dim } => *dim,
            RingKind::Surface { .. } => 2,
        }
    }

    pub fn piece_dim(&self, degree: usize) -> usize {
        match &*self.kind {
            RingKind::Projective { dim } => {
                if degree <= *dim {
                    1
                } else {
                    0
                }
            }
            RingKind::Surface { lattice } => match degree {
                0 | 2 => 1,
                1 => lattice.rank(),
                _ => 0,
            },
        }
    }

    pub fn surface_lattice(&self) -> Option<&SurfaceLattice> {
        match &*self.kind {
            RingKind::Surface { lattice } => Some(lattice),
            RingKind::Projective { .. } => None,
        }
    }

    pub fn zero(&self) -> GradedClass {
        let components = (0..=self.dimension())
            .map(|k| vec![Rat::zero(); self.piece_dim(k)])
            .collect();
        GradedClass {
            ring: self.clone(),
            components,
        }
    }

    pub fn scalar(&self, value: Rat) -> GradedClass {
        let mut out = self.zero();
        out.components[0][0] = value;
        out
    }

    /// A degree-1 class: the coefficient vector of the lattice piece (length
    /// 1 for projective space).
    pub fn degree_one(&self, coeffs: Vec<Rat>) -> Result<GradedClass, Error> {
        if coeffs.len() != self.piece_dim(1) {
            return Err(Error::invariant("degree-1 coefficient length mismatch"));
        }
        let mut out = self.zero();
        out.components[1] = coeffs;
        Ok(out)
    }

    fn basis_product(&self, k1: usize, i1: usize, k2: usize, i2: usize) -> GradedClass {
        let mut out = self.zero();
        let degree = k1 + k2;
        if degree > self.dimension() {
            return out;
        }
        match &*self.kind {
            RingKind::Projective { .. } => {
                out.components[degree][0] = rat(1);
            }
            RingKind::Surface { lattice } => match (k1, k2) {
                (0, _) => out.components[k2][i2] = rat(1),
                (_, 0) => out.components[k1][i1] = rat(1),
                (1, 1) => out.components[2][0] = lattice.gram()[i1][i2].clone(),
                _ => {}
            },
        }
        out
    }

    /// Graded commutativity and associativity on basis triples, checked
    /// exhaustively at construction.
    fn check_axioms(&self) -> Result<(), Error> {
        let dim = self.dimension();
        let basis: Vec<(usize, usize)> = (0..=dim)
            .flat_map(|k| (0..self.piece_dim(k)).map(move |i| (k, i)))
            .collect();
        for &(k1, i1) in &basis {
            for &(k2, i2) in &basis {
                let ab = self.basis_product(k1, i1, k2, i2);
                let ba = self.basis_product(k2, i2, k1, i1);
                if ab != ba {
                    return Err(Error::invariant("ring multiplication is not commutative"));
                }
            }
        }
        for &(k1, i1) in &basis {
            for &(k2, i2) in &basis {
                for &(k3, i3) in &basis {
                    let a = self.basis_element(k1, i1);
                    let b = self.basis_element(k2, i2);
                    let c = self.basis_element(k3, i3);
                    if a.mul(&b).mul(&c) != a.mul(&b.mul(&c)) {
                        return Err(Error::invariant("ring multiplication is not associative"));
                    }
                }
            }
        }
        Ok(())
    }

    fn basis_element(&self, degree: usize, index: usize) -> GradedClass {
        let mut out = self.zero();
        out.components[degree][index] = rat(1);
        out
    }
}

/// An element of the truncated numerical ring: one rational coefficient
/// vector per degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedClass {
    ring: NumericalRing,
    components: Vec<Vec<Rat>>,
}

impl GradedClass {
    pub fn ring(&self) -> &NumericalRing {
        &self.ring
    }

    pub fn component(&self, degree: usize) -> &[Rat] {
        &self.components[degree]
    }

    pub fn set_component(&mut self, degree: usize, coeffs: Vec<Rat>) -> Result<(), Error> {
        if coeffs.len() != self.ring.piece_dim(degree) {
            return Err(Error::invariant("component length mismatch"));
        }
        self.components[degree] = coeffs;
        Ok(())
    }

    pub fn add(&self, other: &GradedClass) -> GradedClass {
        assert!(self.ring == other.ring, "rings differ");
        GradedClass {
            ring: self.ring.clone(),
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x + y).collect())
                .collect(),
        }
    }

    pub fn sub(&self, other: &GradedClass) -> GradedClass {
        self.add(&other.scale(&rat(-1)))
    }

    pub fn scale(&self, c: &Rat) -> GradedClass {
        GradedClass {
            ring: self.ring.clone(),
            components: self
                .components
                .iter()
                .map(|piece| piece.iter().map(|x| x * c).collect())
                .collect(),
        }
    }

    pub fn mul(&self, other: &GradedClass) -> GradedClass {
        assert!(self.ring == other.ring, "rings differ");
        let dim = self.ring.dimension();
        let mut out = self.ring.zero();
        for k1 in 0..=dim {
            for i1 in 0..self.ring.piece_dim(k1) {
                let a = &self.components[k1][i1];
                if a.is_zero() {
                    continue;
                }
                for k2 in 0..=dim - k1 {
                    for i2 in 0..self.ring.piece_dim(k2) {
                        let b = &other.components[k2][i2];
                        if b.is_zero() {
                            continue;
                        }
                        let basis = self.ring.basis_product(k1, i1, k2, i2);
                        out = out.add(&basis.scale(&(a * b)));
                    }
                }
            }
        }
        out
    }

    /// Sign flip in odd degrees: the class of the dual bundle.
    pub fn dual(&self) -> GradedClass {
        GradedClass {
            ring: self.ring.clone(),
            components: self
                .components
                .iter()
                .enumerate()
                .map(|(k, piece)| {
                    if k % 2 == 1 {
                        piece.iter().map(|x| -x).collect()
                    } else {
                        piece.clone()
                    }
                })
                .collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.components
            .iter()
            .all(|piece| piece.iter().all(Rat::is_zero))
    }

    /// `exp` of a class with zero degree-0 part (nilpotent in the
    /// truncation).
    pub fn exp_nilpotent(&self) -> GradedClass {
        assert!(
            self.components[0][0].is_zero(),
            "exp needs a zero degree-0 part"
        );
        let dim = self.ring.dimension();
        let mut out = self.ring.scalar(rat(1));
        let mut power = self.ring.scalar(rat(1));
        let mut factorial = rat(1);
        for k in 1..=dim {
            power = power.mul(self);
            factorial = &factorial * &rat(k as i64);
            out = out.add(&power.scale(&(rat(1) / &factorial)));
        }
        out
    }

    /// The degree-1 coefficients.
    pub fn degree_one(&self) -> &[Rat] {
        &self.components[1]
    }

    /// The degree-1 component as a divisor class, for surface rings.
    pub fn degree_one_class(&self) -> Result<DivisorClass, Error> {
        let lattice = self
            .ring
            .surface_lattice()
            .ok_or_else(|| Error::domain("not a surface ring"))?;
        lattice.class(self.components[1].clone())
    }
}

impl fmt::Display for GradedClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (k, piece) in self.components.iter().enumerate() {
            if piece.iter().all(Rat::is_zero) {
                continue;
            }
            if wrote {
                write!(f, " + ")?;
            }
            if piece.len() == 1 {
                write!(f, "{}", piece[0])?;
            } else {
                write!(f, "(")?;
                for (i, c) in piece.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{c}")?;
                }
                write!(f, ")")?;
            }
            write!(f, "·deg{k}")?;
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Chern character of a split bundle on its surface: the sum of exponentials
/// of the twisted summand classes.
pub fn ch_split_bundle(bundle: &SplitBundle) -> Result<GradedClass, Error> {
    let ring = NumericalRing::surface(bundle.lattice())?;
    let mut out = ring.zero();
    for class in bundle.twisted_summands() {
        let d = ring.degree_one(class.coeffs().to_vec())?;
        out = out.add(&d.exp_nilpotent());
    }
    Ok(out)
}

/// Chern character of a split bundle on projective space, from its degree
/// multiset.
pub fn ch_split_degrees(split: &SplitDegrees) -> Result<GradedClass, Error> {
    let ring = NumericalRing::projective_space(split.ambient_dim())?;
    let mut out = ring.zero();
    for (&d, mult) in split.degrees() {
        let line = ring.degree_one(vec![rat(d)])?;
        let m: Rat = Rat::from_integer(num_bigint::BigInt::from(mult.clone()));
        out = out.add(&line.exp_nilpotent().scale(&m));
    }
    Ok(out)
}

/// The log-Chern character: the rank carried multiplicatively and the
/// positive-degree part of `log(ch)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LogClass {
    rank: u64,
    higher: GradedClass,
}

impl LogClass {
    pub fn rank(&self) -> u64 {
        self.rank
    }

    pub fn higher(&self) -> &GradedClass {
        &self.higher
    }

    pub fn degree_one(&self) -> &[Rat] {
        self.higher.degree_one()
    }
}

/// `lc(x) = log(x)`: requires a positive integer degree-0 part `r`; the
/// higher part is the log series of `x / r` truncated at the ring dimension.
pub fn lc(x: &GradedClass) -> Result<LogClass, Error> {
    let r = &x.component(0)[0];
    if !r.is_integer() || !r.is_positive() {
        return Err(Error::domain(
            "log-Chern character needs a positive integer rank",
        ));
    }
    let rank = u64::try_from(r.to_integer()).map_err(|_| Error::domain("rank overflow"))?;
    let ring = x.ring().clone();
    // y = x / r - 1 is nilpotent
    let mut y = x.scale(&(rat(1) / r));
    y.components[0][0] = Rat::zero();
    let dim = ring.dimension();
    let mut higher = ring.zero();
    let mut power = ring.scalar(rat(1));
    for k in 1..=dim {
        power = power.mul(&y);
        let sign = if k % 2 == 1 { 1 } else { -1 };
        higher = higher.add(&power.scale(&(rat(sign) / &rat(k as i64))));
    }
    Ok(LogClass { rank, higher })
}

/// Addition of log classes: ranks multiply, higher parts add. This is the
/// image of tensor product.
pub fn lc_add(x: &LogClass, y: &LogClass) -> Result<LogClass, Error> {
    if x.higher.ring() != y.higher.ring() {
        return Err(Error::RingMismatch);
    }
    Ok(LogClass {
        rank: x.rank * y.rank,
        higher: x.higher.add(&y.higher),
    })
}

/// Inverse of `lc`: `rank * exp(higher)`.
pub fn exp_lc(x: &LogClass) -> GradedClass {
    x.higher.exp_nilpotent().scale(&rat(x.rank as i64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::presets::{p2, p2_double_blowup, projective_line};
    use crate::rat::ratio;

    fn plane_ring() -> NumericalRing {
        NumericalRing::projective_space(2).unwrap()
    }

    fn ch_degrees(degrees: &[i64]) -> GradedClass {
        let split =
            SplitDegrees::new(2, degrees.iter().map(|&d| (d, 1)).collect()).unwrap();
        ch_split_degrees(&split).unwrap()
    }

    #[test]
    fn ch_of_split_pairs_on_the_plane() {
        let x = ch_degrees(&[2, 5]);
        assert_eq!(x.component(0), &[rat(2)]);
        assert_eq!(x.component(1), &[rat(7)]);
        assert_eq!(x.component(2), &[ratio(29, 2)]); // (4 + 25)/2

        let trivial = ch_degrees(&[0]);
        assert_eq!(trivial, plane_ring().scalar(rat(1)));
    }

    #[test]
    fn ch_of_the_cubic_kernel_twist() {
        // 0 -> M -> O^3 -> O(3) -> 0 and E = dual(M)(-1):
        // ch(M) = 3 - ch(O(3)), then dualize and multiply by exp(-h)
        let ring = plane_ring();
        let ch_m = ring.scalar(rat(3)).sub(&ch_degrees(&[3]));
        let e = ch_m
            .dual()
            .mul(&ring.degree_one(vec![rat(-1)]).unwrap().exp_nilpotent());
        assert_eq!(e.component(0), &[rat(2)]);
        assert_eq!(e.component(1), &[rat(1)]);
        assert_eq!(e.component(2), &[ratio(-13, 2)]);
        // c2 = (c1^2 - 2 ch2) / 2 = (1 + 13)/2 = 7
        let c1 = e.component(1)[0].clone();
        let c2 = (&(&c1 * &c1) - &(rat(2) * e.component(2)[0].clone())) / rat(2);
        assert_eq!(c2, rat(7));
    }

    #[test]
    fn lc_examples() {
        let x = ch_degrees(&[4]);
        let l = lc(&x).unwrap();
        assert_eq!(l.rank(), 1);
        assert_eq!(l.degree_one(), &[rat(4)]);
        assert_eq!(l.higher().component(2), &[rat(0)]);

        let l = lc(&ch_degrees(&[0, 0])).unwrap();
        assert_eq!(l.rank(), 2);
        assert!(l.higher().is_zero());
    }

    #[test]
    fn lc_degree_two_matches_the_closed_formula() {
        // for O(a) + O(b): lc in degree 2 is (a-b)^2/8, which is the closed
        // expression -(1/2r^2)(2r c2 - (r-1) c1^2) at r=2, c1=a+b, c2=ab
        for a in -3i64..=3 {
            for b in -3i64..=3 {
                let l = lc(&ch_degrees(&[a, b])).unwrap();
                assert_eq!(
                    l.higher().component(2),
                    &[ratio((a - b) * (a - b), 8)],
                    "a={a} b={b}"
                );
                let c1 = rat(a + b);
                let c2 = rat(a * b);
                let closed = (rat(4) * c2 - &c1 * &c1) * ratio(-1, 8);
                assert_eq!(l.higher().component(2)[0], closed);
                assert_eq!(l.degree_one(), &[ratio(a + b, 2)]);
            }
        }
    }

    #[test]
    fn lc_additivity_and_inversion() {
        let e = ch_degrees(&[1, 0]);
        let f = ch_degrees(&[2]);
        let lhs = lc(&e.mul(&f)).unwrap();
        let rhs = lc_add(&lc(&e).unwrap(), &lc(&f).unwrap()).unwrap();
        assert_eq!(lhs, rhs);

        for degrees in [&[2, 5][..], &[0][..], &[-1, 3][..], &[1, 1][..]] {
            let x = ch_degrees(degrees);
            assert_eq!(exp_lc(&lc(&x).unwrap()), x);
        }
    }

    #[test]
    fn lc_rejects_non_integer_rank() {
        let x = plane_ring().scalar(ratio(1, 2));
        assert!(lc(&x).is_err());
        let x = plane_ring().scalar(rat(-1));
        assert!(lc(&x).is_err());
    }

    #[test]
    fn ch_on_surface_lattices() {
        let x = p2_double_blowup();
        let e = SplitBundle::untwisted(vec![
            x.class_from_ints(&[1, 1, 0]).unwrap(),
            x.zero_class(),
        ])
        .unwrap();
        let ch = ch_split_bundle(&e).unwrap();
        assert_eq!(ch.component(0), &[rat(2)]);
        assert_eq!(ch.component(1), &[rat(1), rat(1), rat(0)]);
        // (L+F̄)^2 / 2 = (1 - 2)/2
        assert_eq!(ch.component(2), &[ratio(-1, 2)]);
        let projected = ch.degree_one_class().unwrap();
        assert_eq!(projected, x.class_from_ints(&[1, 1, 0]).unwrap());
    }

    #[test]
    fn ch_multiplicativity_on_a_surface() {
        let plane = p2();
        let mk = |degs: &[i64]| {
            SplitBundle::untwisted(
                degs.iter()
                    .map(|&d| plane.class_from_ints(&[d]).unwrap())
                    .collect(),
            )
            .unwrap()
        };
        let e = mk(&[1, 0]);
        let f = mk(&[2, -1]);
        let lhs = ch_split_bundle(&e.tensor(&f).unwrap()).unwrap();
        let rhs = ch_split_bundle(&e).unwrap().mul(&ch_split_bundle(&f).unwrap());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn numerical_non_invariance_witness() {
        // equal classes on the line...
        let split_a = SplitDegrees::new(1, vec![(1, 1), (-1, 1)]).unwrap();
        let split_b = SplitDegrees::new(1, vec![(0, 2)]).unwrap();
        let cha = ch_split_degrees(&split_a).unwrap();
        let chb = ch_split_degrees(&split_b).unwrap();
        assert_eq!(cha, chb);
        // ...but different positivity
        let p1 = projective_line();
        let a = SplitBundle::untwisted(vec![
            p1.class_from_ints(&[1]).unwrap(),
            p1.class_from_ints(&[-1]).unwrap(),
        ])
        .unwrap();
        let b = SplitBundle::untwisted(vec![p1.zero_class(), p1.zero_class()]).unwrap();
        assert!(!a.is_v_psef().unwrap());
        assert!(b.is_v_psef().unwrap());
    }
}
