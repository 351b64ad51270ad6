//! Augmented and diminished base loci for rational divisor classes and
//! rationally twisted split bundles.
//!
//! On a surface with a complete curve catalog, the diminished locus of a
//! class is the support of its Zariski negative part, and the augmented locus
//! of a big class is the set of catalog curves on which the positive part has
//! degree zero. Bundle-level loci are unions over the twisted summands, which
//! is the direct-sum law taken as a definition; the projectivization is never
//! constructed.

use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;
use num_traits::{Signed, Zero};

use crate::error::Error;
use crate::lattice::{BlowdownMap, DivisorClass, SurfaceLattice};
use crate::rat::rat;
use crate::zariski::{self, Zariski};

/// A base locus on a surface: empty, a finite set of catalog curves, or the
/// whole surface.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BaseLocus {
    Empty,
    Curves(BTreeSet<String>),
    Whole,
}

impl BaseLocus {
    /// Normalizing constructor: an empty curve set is `Empty`.
    pub fn curves(labels: impl IntoIterator<Item = String>) -> Self {
        let set: BTreeSet<String> = labels.into_iter().collect();
        if set.is_empty() {
            BaseLocus::Empty
        } else {
            BaseLocus::Curves(set)
        }
    }

    pub fn union(&self, other: &BaseLocus) -> BaseLocus {
        match (self, other) {
            (BaseLocus::Whole, _) | (_, BaseLocus::Whole) => BaseLocus::Whole,
            (BaseLocus::Empty, x) | (x, BaseLocus::Empty) => x.clone(),
            (BaseLocus::Curves(a), BaseLocus::Curves(b)) => {
                BaseLocus::Curves(a.union(b).cloned().collect())
            }
        }
    }

    /// Containment with `Empty` as bottom and `Whole` as top.
    pub fn is_subset_of(&self, other: &BaseLocus) -> bool {
        match (self, other) {
            (BaseLocus::Empty, _) => true,
            (_, BaseLocus::Whole) => true,
            (BaseLocus::Whole, _) => false,
            (BaseLocus::Curves(a), BaseLocus::Curves(b)) => a.is_subset(b),
            (BaseLocus::Curves(_), BaseLocus::Empty) => false,
        }
    }

    pub fn contains_curve(&self, label: &str) -> bool {
        match self {
            BaseLocus::Empty => false,
            BaseLocus::Whole => true,
            BaseLocus::Curves(set) => set.contains(label),
        }
    }

    pub fn is_whole(&self) -> bool {
        matches!(self, BaseLocus::Whole)
    }
}

impl fmt::Display for BaseLocus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaseLocus::Empty => write!(f, "empty"),
            BaseLocus::Whole => write!(f, "whole"),
            BaseLocus::Curves(set) => {
                write!(f, "{{{}}}", set.iter().join(", "))
            }
        }
    }
}

/// Diminished base locus of a divisor class: the whole surface when the class
/// is not pseudoeffective, otherwise the support of the Zariski negative part.
pub fn b_minus_divisor(d: &DivisorClass) -> Result<BaseLocus, Error> {
    match zariski::decompose(d)? {
        Zariski::NotPseudoeffective => Ok(BaseLocus::Whole),
        Zariski::Decomposition(z) => Ok(BaseLocus::curves(z.negative_support())),
    }
}

/// Augmented base locus of a divisor class: the whole surface when the class
/// is not big, otherwise the catalog curves on which the positive part has
/// degree zero (these contain the negative support automatically).
pub fn b_plus_divisor(d: &DivisorClass) -> Result<BaseLocus, Error> {
    let z = match zariski::decompose(d)? {
        Zariski::NotPseudoeffective => return Ok(BaseLocus::Whole),
        Zariski::Decomposition(z) => z,
    };
    if !z.positive().self_intersection().is_positive() {
        return Ok(BaseLocus::Whole);
    }
    let mut labels = Vec::new();
    for curve in d.lattice().curve_catalog() {
        if z.positive().intersect(&curve.class)?.is_zero() {
            labels.push(curve.label);
        }
    }
    Ok(BaseLocus::curves(labels))
}

impl DivisorClass {
    pub fn b_minus(&self) -> Result<BaseLocus, Error> {
        b_minus_divisor(self)
    }

    pub fn b_plus(&self) -> Result<BaseLocus, Error> {
        b_plus_divisor(self)
    }
}

/// A totally split bundle with a rational twist: summand line-bundle classes
/// `D_1, ..., D_r` (integer coefficients) and a twist class `T`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitBundle {
    lattice: SurfaceLattice,
    summands: Vec<DivisorClass>,
    twist: DivisorClass,
}

impl SplitBundle {
    pub fn new(summands: Vec<DivisorClass>, twist: DivisorClass) -> Result<Self, Error> {
        if summands.is_empty() {
            return Err(Error::invariant("a split bundle needs at least one summand"));
        }
        let lattice = twist.lattice().clone();
        for s in &summands {
            if s.lattice() != &lattice {
                return Err(Error::LatticeMismatch);
            }
            if !s.has_integer_coeffs() {
                return Err(Error::invariant(
                    "summand classes must have integer coefficients",
                ));
            }
        }
        Ok(SplitBundle {
            lattice,
            summands,
            twist,
        })
    }

    pub fn untwisted(summands: Vec<DivisorClass>) -> Result<Self, Error> {
        let lattice = summands
            .first()
            .ok_or_else(|| Error::invariant("a split bundle needs at least one summand"))?
            .lattice()
            .clone();
        let twist = lattice.zero_class();
        SplitBundle::new(summands, twist)
    }

    pub fn lattice(&self) -> &SurfaceLattice {
        &self.lattice
    }

    pub fn summands(&self) -> &[DivisorClass] {
        &self.summands
    }

    pub fn twist(&self) -> &DivisorClass {
        &self.twist
    }

    pub fn rank(&self) -> usize {
        self.summands.len()
    }

    /// The classes `D_i + T` on which the loci are computed.
    pub fn twisted_summands(&self) -> Vec<DivisorClass> {
        self.summands.iter().map(|d| d + &self.twist).collect()
    }

    /// Rolls an integral shift of the twist into the summands; the loci are
    /// unchanged (equivalence of twisted pairs).
    pub fn shift_twist(&self, integral: &DivisorClass) -> Result<SplitBundle, Error> {
        if integral.lattice() != &self.lattice {
            return Err(Error::LatticeMismatch);
        }
        if !integral.has_integer_coeffs() {
            return Err(Error::invariant("twist shift must be integral"));
        }
        SplitBundle::new(
            self.summands.iter().map(|d| d + integral).collect(),
            &self.twist - integral,
        )
    }

    /// Symmetric power: one summand per degree-`c` monomial in the summands;
    /// the twist scales by `c`.
    pub fn sym_power(&self, c: u32) -> SplitBundle {
        assert!(c >= 1, "symmetric power degree must be positive");
        let summands: Vec<DivisorClass> = (0..self.summands.len())
            .combinations_with_replacement(c as usize)
            .map(|choice| {
                let mut acc = self.lattice.zero_class();
                for i in choice {
                    acc = &acc + &self.summands[i];
                }
                acc
            })
            .collect();
        SplitBundle {
            lattice: self.lattice.clone(),
            summands,
            twist: self.twist.scale(&rat(c as i64)),
        }
    }

    /// Tensor product: all pairwise sums of summands; the twists add.
    pub fn tensor(&self, other: &SplitBundle) -> Result<SplitBundle, Error> {
        if self.lattice != other.lattice {
            return Err(Error::LatticeMismatch);
        }
        let summands = self
            .summands
            .iter()
            .cartesian_product(&other.summands)
            .map(|(a, b)| a + b)
            .collect();
        Ok(SplitBundle {
            lattice: self.lattice.clone(),
            summands,
            twist: &self.twist + &other.twist,
        })
    }

    /// Concatenation of summands; requires equal twists.
    pub fn direct_sum(&self, other: &SplitBundle) -> Result<SplitBundle, Error> {
        if self.lattice != other.lattice {
            return Err(Error::LatticeMismatch);
        }
        if self.twist != other.twist {
            return Err(Error::TwistMismatch);
        }
        let mut summands = self.summands.clone();
        summands.extend(other.summands.iter().cloned());
        Ok(SplitBundle {
            lattice: self.lattice.clone(),
            summands,
            twist: self.twist.clone(),
        })
    }

    pub fn b_minus(&self) -> Result<BaseLocus, Error> {
        let mut acc = BaseLocus::Empty;
        for d in self.twisted_summands() {
            acc = acc.union(&b_minus_divisor(&d)?);
            if acc.is_whole() {
                break;
            }
        }
        Ok(acc)
    }

    pub fn b_plus(&self) -> Result<BaseLocus, Error> {
        let mut acc = BaseLocus::Empty;
        for d in self.twisted_summands() {
            acc = acc.union(&b_plus_divisor(&d)?);
            if acc.is_whole() {
                break;
            }
        }
        Ok(acc)
    }

    /// Viehweg-big: the augmented base locus is not the whole surface.
    pub fn is_v_big(&self) -> Result<bool, Error> {
        Ok(!self.b_plus()?.is_whole())
    }

    /// Viehweg-pseudoeffective: the diminished base locus is not the whole
    /// surface.
    pub fn is_v_psef(&self) -> Result<bool, Error> {
        Ok(!self.b_minus()?.is_whole())
    }
}

/// Pulls a split bundle on the target of a blow-down back to its source.
pub fn pullback_bundle(f: &BlowdownMap, e: &SplitBundle) -> Result<SplitBundle, Error> {
    if e.lattice() != f.target() {
        return Err(Error::LatticeMismatch);
    }
    let summands = e
        .summands()
        .iter()
        .map(|d| f.pull_back(d))
        .collect::<Result<Vec<_>, _>>()?;
    SplitBundle::new(summands, f.pull_back(e.twist())?)
}

impl BlowdownMap {
    /// Source curves mapping into a target locus: strict transforms of its
    /// curves plus the contracted curves lying over them. `Whole` pulls back
    /// to `Whole`.
    pub fn preimage(&self, locus: &BaseLocus) -> BaseLocus {
        match locus {
            BaseLocus::Empty => BaseLocus::Empty,
            BaseLocus::Whole => BaseLocus::Whole,
            BaseLocus::Curves(set) => {
                let mut labels = BTreeSet::new();
                for target_label in set {
                    if let Some(src) = self.strict_transform_of(target_label) {
                        labels.insert(src.to_string());
                    }
                    for contracted in self.contracted_curves() {
                        if let Some(Some(over)) = self.curve_over(contracted) {
                            if over == target_label {
                                labels.insert(contracted.clone());
                            }
                        }
                    }
                }
                BaseLocus::curves(labels)
            }
        }
    }

    /// The union of the curves contracted by the map.
    pub fn nonfinite_locus(&self) -> BaseLocus {
        BaseLocus::curves(self.contracted_curves().iter().cloned())
    }
}

/// Both sides of a pullback law, for reporting.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PullbackLawCheck {
    /// locus of the pulled-back bundle, computed upstairs
    pub pulled_back: BaseLocus,
    /// locus predicted from the base and the map data
    pub predicted: BaseLocus,
}

impl PullbackLawCheck {
    pub fn holds(&self) -> bool {
        self.pulled_back == self.predicted
    }
}

/// Checks that the augmented locus of the pullback equals the preimage of the
/// augmented locus union the contracted curves.
pub fn b_plus_pullback_law(f: &BlowdownMap, e: &SplitBundle) -> Result<PullbackLawCheck, Error> {
    let pulled_back = pullback_bundle(f, e)?.b_plus()?;
    let predicted = f.preimage(&e.b_plus()?).union(&f.nonfinite_locus());
    Ok(PullbackLawCheck {
        pulled_back,
        predicted,
    })
}

/// Checks that the diminished locus of the pullback equals the preimage of
/// the diminished locus.
pub fn b_minus_pullback_law(f: &BlowdownMap, e: &SplitBundle) -> Result<PullbackLawCheck, Error> {
    let pulled_back = pullback_bundle(f, e)?.b_minus()?;
    let predicted = f.preimage(&e.b_minus()?);
    Ok(PullbackLawCheck {
        pulled_back,
        predicted,
    })
}
