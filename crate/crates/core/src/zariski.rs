//! Exact Zariski decomposition of pseudoeffective rational classes.
//!
//! `D = P + N` with `P` nef, `N` effective supported on a negative-definite
//! set of catalog curves orthogonal to `P`. The support is grown iteratively
//! from the curves pairing negatively with the input, the multiplicities come
//! from an exact linear solve, and every structural invariant is re-checked
//! on the result; a violation signals an incomplete curve catalog.

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};

use crate::error::Error;
use crate::lattice::{CurveRecord, DivisorClass};
use crate::linalg;
use crate::rat::Rat;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZariskiDecomposition {
    input: DivisorClass,
    positive: DivisorClass,
    negative: BTreeMap<String, Rat>,
}

/// Outcome of a decomposition. Non-pseudoeffective inputs are a value, not an
/// error: base-locus computations branch on them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Zariski {
    NotPseudoeffective,
    Decomposition(ZariskiDecomposition),
}

impl Zariski {
    pub fn decomposition(&self) -> Option<&ZariskiDecomposition> {
        match self {
            Zariski::Decomposition(z) => Some(z),
            Zariski::NotPseudoeffective => None,
        }
    }
}

impl ZariskiDecomposition {
    pub fn input(&self) -> &DivisorClass {
        &self.input
    }

    pub fn positive(&self) -> &DivisorClass {
        &self.positive
    }

    /// Curve label to multiplicity; every multiplicity is positive.
    pub fn negative(&self) -> &BTreeMap<String, Rat> {
        &self.negative
    }

    pub fn negative_support(&self) -> Vec<String> {
        self.negative.keys().cloned().collect()
    }

    pub fn negative_class(&self) -> DivisorClass {
        let lattice = self.input.lattice();
        let mut acc = lattice.zero_class();
        for (label, mult) in &self.negative {
            let curve = lattice.curve(label).expect("support curve in catalog");
            acc = &acc + &curve.class.scale(mult);
        }
        acc
    }

    /// Re-checks the five structural invariants, returning their names.
    pub fn verify_invariants(&self) -> Result<Vec<&'static str>, Error> {
        let mut verified = Vec::new();
        let lattice = self.input.lattice();

        let recomposed = &self.positive + &self.negative_class();
        if recomposed != self.input {
            return Err(Error::invariant("input != positive + negative"));
        }
        verified.push("input = positive + negative");

        if !self.positive.is_nef() {
            return Err(Error::invariant("positive part is not nef"));
        }
        verified.push("positive part is nef");

        for label in self.negative.keys() {
            let curve = lattice
                .curve(label)
                .ok_or_else(|| Error::UnknownLabel(label.clone()))?;
            if !self.positive.intersect(&curve.class)?.is_zero() {
                return Err(Error::invariant(format!(
                    "positive part meets support curve `{label}`"
                )));
            }
        }
        verified.push("positive part is orthogonal to the support");

        if self.negative.values().any(|m| !m.is_positive()) {
            return Err(Error::invariant("nonpositive multiplicity in the negative part"));
        }
        verified.push("all multiplicities are positive");

        let support: Vec<CurveRecord> = self
            .negative
            .keys()
            .map(|label| lattice.curve(label).expect("support curve in catalog"))
            .collect();
        let gram: linalg::Matrix = support
            .iter()
            .map(|a| {
                support
                    .iter()
                    .map(|b| a.class.intersect(&b.class).expect("same lattice"))
                    .collect()
            })
            .collect();
        if !support.is_empty() && !linalg::is_negative_definite(&gram) {
            return Err(Error::invariant(
                "support intersection matrix is not negative definite",
            ));
        }
        verified.push("support is negative definite");

        Ok(verified)
    }
}

/// Decomposes `d`, or reports that it is not pseudoeffective.
pub fn decompose(d: &DivisorClass) -> Result<Zariski, Error> {
    if !d.is_psef() {
        return Ok(Zariski::NotPseudoeffective);
    }
    let lattice = d.lattice();
    let catalog = lattice.curve_catalog();

    // support indices, grown monotonically in catalog order
    let mut support: Vec<usize> = (0..catalog.len())
        .filter(|&i| d.intersect(&catalog[i].class).expect("same lattice").is_negative())
        .collect();

    loop {
        let multiplicities = solve_multiplicities(d, &catalog, &support)?;
        let mut negative = lattice.zero_class();
        for (&i, m) in support.iter().zip(&multiplicities) {
            negative = &negative + &catalog[i].class.scale(m);
        }
        let positive = d - &negative;

        let offender = (0..catalog.len()).find(|&i| {
            !support.contains(&i)
                && positive
                    .intersect(&catalog[i].class)
                    .expect("same lattice")
                    .is_negative()
        });
        match offender {
            Some(i) => {
                support.push(i);
                support.sort_unstable();
            }
            None => {
                let decomposition = ZariskiDecomposition {
                    input: d.clone(),
                    positive,
                    negative: support
                        .iter()
                        .zip(multiplicities)
                        .map(|(&i, m)| (catalog[i].label.clone(), m))
                        .collect(),
                };
                decomposition.verify_invariants()?;
                return Ok(Zariski::Decomposition(decomposition));
            }
        }
    }
}

fn solve_multiplicities(
    d: &DivisorClass,
    catalog: &[CurveRecord],
    support: &[usize],
) -> Result<Vec<Rat>, Error> {
    if support.is_empty() {
        return Ok(Vec::new());
    }
    let gram: linalg::Matrix = support
        .iter()
        .map(|&i| {
            support
                .iter()
                .map(|&j| {
                    catalog[i]
                        .class
                        .intersect(&catalog[j].class)
                        .expect("same lattice")
                })
                .collect()
        })
        .collect();
    let rhs: Vec<Rat> = support
        .iter()
        .map(|&i| d.intersect(&catalog[i].class).expect("same lattice"))
        .collect();
    linalg::solve_square(&gram, &rhs).ok_or_else(|| {
        Error::invariant("support intersection matrix is singular (incomplete catalog?)")
    })
}

pub fn is_big(d: &DivisorClass) -> Result<bool, Error> {
    match decompose(d)? {
        Zariski::NotPseudoeffective => Ok(false),
        Zariski::Decomposition(z) => Ok(z.positive().self_intersection().is_positive()),
    }
}

impl DivisorClass {
    pub fn zariski(&self) -> Result<Zariski, Error> {
        decompose(self)
    }

    /// Big means pseudoeffective with `P^2 > 0` for the positive part.
    pub fn is_big(&self) -> Result<bool, Error> {
        is_big(self)
    }
}
