//! The real Néron–Severi lattice of an explicitly presented surface.
//!
//! A [`SurfaceLattice`] stores a basis, the exact rational intersection form,
//! a catalog of irreducible curves, generators of the cone of effective
//! classes, and a fixed ample polarization. Cone tests (`is_nef`, `is_ample`,
//! `is_psef`) are correct relative to the supplied generator data; the bundled
//! presets ship with complete catalogs.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use num_traits::{Signed, Zero};

use crate::error::Error;
use crate::linalg::{self, Matrix};
use crate::rat::{rat, Rat};

#[derive(Debug, Clone, PartialEq, Eq)]
struct StoredCurve {
    label: String,
    coeffs: Vec<Rat>,
    self_intersection: Rat,
}

#[derive(Debug, PartialEq, Eq)]
struct Inner {
    name: String,
    basis_labels: Vec<String>,
    gram: Matrix,
    curves: Vec<StoredCurve>,
    mori: Vec<Vec<Rat>>,
    polarization: Vec<Rat>,
    /// alternative spellings accepted by the class parser, e.g. `Fb`
    aliases: BTreeMap<String, String>,
}

/// Handle to an immutable surface lattice; cloning is cheap.
#[derive(Debug, Clone)]
pub struct SurfaceLattice {
    inner: Arc<Inner>,
}

impl PartialEq for SurfaceLattice {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner == other.inner
    }
}

impl Eq for SurfaceLattice {}

/// A rational divisor class, the universal currency of the crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorClass {
    lattice: SurfaceLattice,
    coeffs: Vec<Rat>,
}

/// A catalog curve materialized with its class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveRecord {
    pub label: String,
    pub class: DivisorClass,
    pub self_intersection: Rat,
}

/// Raw data from which a lattice is built; `build` validates every invariant.
#[derive(Debug, Clone)]
pub struct LatticeSpec {
    pub name: String,
    pub basis_labels: Vec<String>,
    pub gram: Matrix,
    /// curve label and integer class coefficients
    pub curves: Vec<(String, Vec<Rat>)>,
    pub mori: Vec<Vec<Rat>>,
    pub polarization: Vec<Rat>,
    pub aliases: Vec<(String, String)>,
}

impl LatticeSpec {
    pub fn build(self) -> Result<SurfaceLattice, Error> {
        let rank = self.basis_labels.len();
        if rank == 0 {
            return Err(Error::invariant("lattice rank must be positive"));
        }
        let mut seen = BTreeSet::new();
        for label in &self.basis_labels {
            if !seen.insert(label.clone()) {
                return Err(Error::invariant(format!("duplicate basis label `{label}`")));
            }
        }
        if self.gram.len() != rank || self.gram.iter().any(|row| row.len() != rank) {
            return Err(Error::invariant("gram matrix shape does not match the rank"));
        }
        if !linalg::is_symmetric(&self.gram) {
            return Err(Error::invariant("gram matrix is not symmetric"));
        }
        // Hodge index: signature (1, rank - 1)
        if linalg::signature(&self.gram) != (1, rank - 1, 0) {
            return Err(Error::invariant(
                "gram matrix does not have signature (1, rank-1)",
            ));
        }
        for (label, coeffs) in &self.curves {
            if coeffs.len() != rank {
                return Err(Error::invariant(format!(
                    "curve `{label}` has {} coefficients, expected {rank}",
                    coeffs.len()
                )));
            }
            if coeffs.iter().any(|c| !c.is_integer()) {
                return Err(Error::invariant(format!(
                    "curve `{label}` has non-integer coefficients"
                )));
            }
        }
        for m in &self.mori {
            if m.len() != rank {
                return Err(Error::invariant("mori generator length mismatch"));
            }
        }
        if self.polarization.len() != rank {
            return Err(Error::invariant("polarization length mismatch"));
        }

        let curves = self
            .curves
            .into_iter()
            .map(|(label, coeffs)| {
                let self_intersection = pair(&self.gram, &coeffs, &coeffs);
                StoredCurve {
                    label,
                    coeffs,
                    self_intersection,
                }
            })
            .collect::<Vec<_>>();
        let mut curve_labels = BTreeSet::new();
        for c in &curves {
            if !curve_labels.insert(c.label.clone()) {
                return Err(Error::invariant(format!(
                    "duplicate curve label `{}`",
                    c.label
                )));
            }
        }

        let lattice = SurfaceLattice {
            inner: Arc::new(Inner {
                name: self.name,
                basis_labels: self.basis_labels,
                gram: self.gram,
                curves,
                mori: self.mori,
                polarization: self.polarization,
                aliases: self.aliases.into_iter().collect(),
            }),
        };

        // remaining invariants need the pairing machinery
        let pol = lattice.polarization();
        for curve in lattice.curve_catalog() {
            let deg = curve.class.intersect(&pol)?;
            if !deg.is_positive() {
                return Err(Error::invariant(format!(
                    "curve `{}` does not pair positively with the polarization",
                    curve.label
                )));
            }
            if curve.self_intersection.is_negative()
                && !lattice
                    .mori_generators()
                    .iter()
                    .any(|g| g.coeffs == curve.class.coeffs)
            {
                return Err(Error::invariant(format!(
                    "negative curve `{}` is missing from the mori generators",
                    curve.label
                )));
            }
        }
        if !pol.is_ample() {
            return Err(Error::invariant("polarization fails the ampleness test"));
        }
        Ok(lattice)
    }
}

fn pair(gram: &Matrix, a: &[Rat], b: &[Rat]) -> Rat {
    let mut acc = Rat::zero();
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            if !bj.is_zero() {
                acc += ai * &gram[i][j] * bj;
            }
        }
    }
    acc
}

impl SurfaceLattice {
    pub fn name(&self) -> &str {
        &self.inner.name
    }

    pub fn rank(&self) -> usize {
        self.inner.basis_labels.len()
    }

    pub fn basis_labels(&self) -> &[String] {
        &self.inner.basis_labels
    }

    pub fn gram(&self) -> &Matrix {
        &self.inner.gram
    }

    pub fn aliases(&self) -> &BTreeMap<String, String> {
        &self.inner.aliases
    }

    /// Resolves a basis label, accepting registered aliases.
    pub fn basis_index(&self, label: &str) -> Option<usize> {
        let canonical = self
            .inner
            .aliases
            .get(label)
            .map(String::as_str)
            .unwrap_or(label);
        self.inner
            .basis_labels
            .iter()
            .position(|l| l == canonical)
    }

    pub fn class(&self, coeffs: Vec<Rat>) -> Result<DivisorClass, Error> {
        if coeffs.len() != self.rank() {
            return Err(Error::invariant(format!(
                "class has {} coefficients, lattice rank is {}",
                coeffs.len(),
                self.rank()
            )));
        }
        Ok(DivisorClass {
            lattice: self.clone(),
            coeffs,
        })
    }

    pub fn class_from_ints(&self, coeffs: &[i64]) -> Result<DivisorClass, Error> {
        self.class(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn zero_class(&self) -> DivisorClass {
        DivisorClass {
            lattice: self.clone(),
            coeffs: vec![Rat::zero(); self.rank()],
        }
    }

    pub fn basis_class(&self, index: usize) -> DivisorClass {
        let mut coeffs = vec![Rat::zero(); self.rank()];
        coeffs[index] = rat(1);
        DivisorClass {
            lattice: self.clone(),
            coeffs,
        }
    }

    pub fn curve_catalog(&self) -> Vec<CurveRecord> {
        self.inner
            .curves
            .iter()
            .map(|c| CurveRecord {
                label: c.label.clone(),
                class: DivisorClass {
                    lattice: self.clone(),
                    coeffs: c.coeffs.clone(),
                },
                self_intersection: c.self_intersection.clone(),
            })
            .collect()
    }

    /// Looks up a catalog curve by label or alias.
    pub fn curve(&self, label: &str) -> Option<CurveRecord> {
        let canonical = self
            .inner
            .aliases
            .get(label)
            .map(String::as_str)
            .unwrap_or(label);
        self.curve_catalog()
            .into_iter()
            .find(|c| c.label == canonical)
    }

    pub fn mori_generators(&self) -> Vec<DivisorClass> {
        self.inner
            .mori
            .iter()
            .map(|coeffs| DivisorClass {
                lattice: self.clone(),
                coeffs: coeffs.clone(),
            })
            .collect()
    }

    pub fn polarization(&self) -> DivisorClass {
        DivisorClass {
            lattice: self.clone(),
            coeffs: self.inner.polarization.clone(),
        }
    }

    /// Blows up a point, appending an exceptional class `e` with `e^2 = -1`.
    ///
    /// With `center_on = Some(K)` the center is a point of the catalog curve
    /// `K`; its catalog class becomes the strict transform `K - e` (gaining
    /// the pairing `K . e = 1`), and when `K` was itself a basis class the
    /// basis slot follows the replacement. Effective-cone generators are
    /// carried over as strict transforms plus `e`; the polarization is the
    /// smallest `c * pullback - e` that tests ample.
    pub fn blow_up(
        &self,
        center_on: Option<&str>,
        exceptional_label: &str,
    ) -> Result<(SurfaceLattice, BlowdownMap), Error> {
        let rank = self.rank();
        let center = match center_on {
            Some(label) => {
                let curve = self
                    .curve(label)
                    .ok_or_else(|| Error::UnknownLabel(label.to_string()))?;
                Some(curve)
            }
            None => None,
        };
        if self.basis_index(exceptional_label).is_some()
            || self
                .inner
                .curves
                .iter()
                .any(|c| c.label == exceptional_label)
        {
            return Err(Error::invariant(format!(
                "label `{exceptional_label}` already in use"
            )));
        }

        // basis slot whose class coincides with the center curve, if any
        let replaced_slot = center.as_ref().and_then(|c| {
            (0..rank).find(|&i| {
                c.class
                    .coeffs
                    .iter()
                    .enumerate()
                    .all(|(j, v)| if j == i { v == &rat(1) } else { v.is_zero() })
            })
        });

        let mut labels = self.inner.basis_labels.clone();
        labels.push(exceptional_label.to_string());
        let mut gram: Matrix = vec![vec![Rat::zero(); rank + 1]; rank + 1];
        for i in 0..rank {
            for j in 0..rank {
                gram[i][j] = self.inner.gram[i][j].clone();
            }
        }
        gram[rank][rank] = rat(-1);
        if let Some(slot) = replaced_slot {
            gram[slot][slot] = &gram[slot][slot] - &rat(1);
            gram[slot][rank] = rat(1);
            gram[rank][slot] = rat(1);
        }

        // pullback of an old basis class, in the new basis
        let pullback_matrix: Vec<Vec<i64>> = (0..rank)
            .map(|j| {
                let mut col = vec![0i64; rank + 1];
                col[j] = 1;
                if Some(j) == replaced_slot {
                    col[rank] = 1;
                }
                col
            })
            .collect();
        let pull = |coeffs: &[Rat]| -> Vec<Rat> {
            let mut out = vec![Rat::zero(); rank + 1];
            for (j, c) in coeffs.iter().enumerate() {
                for (i, &m) in pullback_matrix[j].iter().enumerate() {
                    if m != 0 {
                        out[i] = &out[i] + &(c * &rat(m));
                    }
                }
            }
            out
        };

        let center_label = center.as_ref().map(|c| c.label.clone());
        let center_coeffs = center.as_ref().map(|c| c.class.coeffs.clone());
        let strict = |coeffs: &[Rat]| -> Vec<Rat> {
            let mut out = pull(coeffs);
            if center_coeffs.as_deref() == Some(coeffs) {
                out[rank] = &out[rank] - &rat(1);
            }
            out
        };

        let mut curves: Vec<(String, Vec<Rat>)> = self
            .inner
            .curves
            .iter()
            .map(|c| {
                let mut class = pull(&c.coeffs);
                if Some(&c.label) == center_label.as_ref() {
                    class[rank] = &class[rank] - &rat(1);
                }
                (c.label.clone(), class)
            })
            .collect();
        let mut exceptional = vec![Rat::zero(); rank + 1];
        exceptional[rank] = rat(1);
        curves.push((exceptional_label.to_string(), exceptional.clone()));

        let mut mori: Vec<Vec<Rat>> = self.inner.mori.iter().map(|g| strict(g)).collect();
        if !mori.contains(&exceptional) {
            mori.push(exceptional.clone());
        }
        mori.dedup();

        // polarization: smallest c with c * pullback(A) - e ample
        let pulled_pol = pull(&self.inner.polarization);
        let mut polarization = None;
        for c in 1..=64i64 {
            let candidate: Vec<Rat> = pulled_pol
                .iter()
                .zip(&exceptional)
                .map(|(p, e)| &(p * &rat(c)) - e)
                .collect();
            let positive_on_gens = mori
                .iter()
                .all(|g| pair(&gram, &candidate, g).is_positive());
            let positive_on_curves = curves
                .iter()
                .all(|(_, k)| pair(&gram, &candidate, k).is_positive());
            let big = pair(&gram, &candidate, &candidate).is_positive();
            if positive_on_gens && positive_on_curves && big {
                polarization = Some(candidate);
                break;
            }
        }
        let polarization = polarization
            .ok_or_else(|| Error::invariant("no ample polarization found on the blow-up"))?;

        let source = LatticeSpec {
            name: format!("{}+{}", self.inner.name, exceptional_label),
            basis_labels: labels,
            gram,
            curves,
            mori,
            polarization,
            aliases: self
                .inner
                .aliases
                .iter()
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect(),
        }
        .build()?;

        let map = BlowdownMap::new(
            source.clone(),
            self.clone(),
            pullback_matrix,
            [exceptional_label.to_string()].into(),
            self.inner
                .curves
                .iter()
                .map(|c| (c.label.clone(), c.label.clone()))
                .collect(),
            [(
                exceptional_label.to_string(),
                center.as_ref().map(|c| c.label.clone()),
            )]
            .into(),
        )?;
        Ok((source, map))
    }
}

impl DivisorClass {
    pub fn lattice(&self) -> &SurfaceLattice {
        &self.lattice
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rat::is_zero)
    }

    pub fn has_integer_coeffs(&self) -> bool {
        self.coeffs.iter().all(Rat::is_integer)
    }

    /// The intersection number `coeffs_1^T . gram . coeffs_2`.
    pub fn intersect(&self, other: &DivisorClass) -> Result<Rat, Error> {
        if self.lattice != other.lattice {
            return Err(Error::LatticeMismatch);
        }
        Ok(pair(&self.lattice.inner.gram, &self.coeffs, &other.coeffs))
    }

    pub fn self_intersection(&self) -> Rat {
        pair(&self.lattice.inner.gram, &self.coeffs, &self.coeffs)
    }

    /// Nonnegative against every effective-cone generator.
    pub fn is_nef(&self) -> bool {
        self.lattice
            .mori_generators()
            .iter()
            .all(|g| !pair(&self.lattice.inner.gram, &self.coeffs, &g.coeffs).is_negative())
    }

    /// Nakai–Moishezon relative to the catalog: positive degree on every
    /// generator and positive self-intersection.
    pub fn is_ample(&self) -> bool {
        self.lattice
            .mori_generators()
            .iter()
            .all(|g| pair(&self.lattice.inner.gram, &self.coeffs, &g.coeffs).is_positive())
            && self.self_intersection().is_positive()
    }

    /// Membership in the rational cone spanned by the effective generators,
    /// decided by exact linear programming.
    pub fn is_psef(&self) -> bool {
        let gens: Vec<Vec<Rat>> = self.lattice.inner.mori.clone();
        linalg::in_nonneg_span(&gens, &self.coeffs)
    }

    pub fn scale(&self, c: &Rat) -> DivisorClass {
        DivisorClass {
            lattice: self.lattice.clone(),
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    fn zip_with(&self, other: &DivisorClass, f: impl Fn(&Rat, &Rat) -> Rat) -> DivisorClass {
        assert!(
            self.lattice == other.lattice,
            "divisor classes live in different lattices"
        );
        DivisorClass {
            lattice: self.lattice.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }
}

impl std::ops::Add for &DivisorClass {
    type Output = DivisorClass;
    fn add(self, rhs: &DivisorClass) -> DivisorClass {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl std::ops::Sub for &DivisorClass {
    type Output = DivisorClass;
    fn sub(self, rhs: &DivisorClass) -> DivisorClass {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl std::ops::Neg for &DivisorClass {
    type Output = DivisorClass;
    fn neg(self) -> DivisorClass {
        DivisorClass {
            lattice: self.lattice.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for DivisorClass {
    /// Prints a signed combination of basis labels, e.g. `2L - F̄ + 3/2F′`.
    /// The output re-parses to an equal class.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let label = &self.lattice.inner.basis_labels[i];
            let abs = c.abs();
            if wrote {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            if abs == rat(1) {
                write!(f, "{label}")?;
            } else {
                write!(f, "{abs}{label}")?;
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// A blow-down morphism between stored lattices, with the bookkeeping needed
/// to pull classes back and to transport curve sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlowdownMap {
    source: SurfaceLattice,
    target: SurfaceLattice,
    /// column per target basis class, expressed in the source basis
    pullback_matrix: Vec<Vec<i64>>,
    contracted_curves: BTreeSet<String>,
    /// target catalog label -> its strict transform in the source catalog
    strict_transforms: BTreeMap<String, String>,
    /// contracted source curve -> the target catalog curve it lies over
    over: BTreeMap<String, Option<String>>,
}

impl BlowdownMap {
    pub fn new(
        source: SurfaceLattice,
        target: SurfaceLattice,
        pullback_matrix: Vec<Vec<i64>>,
        contracted_curves: BTreeSet<String>,
        strict_transforms: BTreeMap<String, String>,
        over: BTreeMap<String, Option<String>>,
    ) -> Result<Self, Error> {
        if pullback_matrix.len() != target.rank()
            || pullback_matrix.iter().any(|col| col.len() != source.rank())
        {
            return Err(Error::invariant("pullback matrix shape mismatch"));
        }
        let map = BlowdownMap {
            source,
            target,
            pullback_matrix,
            contracted_curves,
            strict_transforms,
            over,
        };
        // pullback preserves intersection numbers on basis classes
        for i in 0..map.target.rank() {
            for j in 0..map.target.rank() {
                let fi = map.pull_back(&map.target.basis_class(i))?;
                let fj = map.pull_back(&map.target.basis_class(j))?;
                if fi.intersect(&fj)? != map.target.inner.gram[i][j] {
                    return Err(Error::invariant(
                        "pullback does not preserve intersection numbers",
                    ));
                }
            }
        }
        // contracted curves pair to zero with every pulled-back class
        for label in &map.contracted_curves {
            let curve = map
                .source
                .curve(label)
                .ok_or_else(|| Error::UnknownLabel(label.clone()))?;
            for i in 0..map.target.rank() {
                let fi = map.pull_back(&map.target.basis_class(i))?;
                if !curve.class.intersect(&fi)?.is_zero() {
                    return Err(Error::invariant(format!(
                        "contracted curve `{label}` meets a pulled-back class"
                    )));
                }
            }
        }
        for (t, s) in &map.strict_transforms {
            if map.target.curve(t).is_none() {
                return Err(Error::UnknownLabel(t.clone()));
            }
            if map.source.curve(s).is_none() {
                return Err(Error::UnknownLabel(s.clone()));
            }
        }
        Ok(map)
    }

    pub fn source(&self) -> &SurfaceLattice {
        &self.source
    }

    pub fn target(&self) -> &SurfaceLattice {
        &self.target
    }

    pub fn contracted_curves(&self) -> &BTreeSet<String> {
        &self.contracted_curves
    }

    pub fn strict_transform_of(&self, target_label: &str) -> Option<&str> {
        self.strict_transforms.get(target_label).map(String::as_str)
    }

    pub fn curve_over(&self, contracted_label: &str) -> Option<&Option<String>> {
        self.over.get(contracted_label)
    }

    /// Pulls a class on the target back to the source.
    pub fn pull_back(&self, d: &DivisorClass) -> Result<DivisorClass, Error> {
        if d.lattice() != &self.target {
            return Err(Error::LatticeMismatch);
        }
        let mut out = vec![Rat::zero(); self.source.rank()];
        for (j, c) in d.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (i, &m) in self.pullback_matrix[j].iter().enumerate() {
                if m != 0 {
                    out[i] = &out[i] + &(c * &rat(m));
                }
            }
        }
        self.source.class(out)
    }

    /// `outer` after `inner`: `inner: source -> mid`, `outer: mid -> target`.
    pub fn compose(outer: &BlowdownMap, inner: &BlowdownMap) -> Result<BlowdownMap, Error> {
        if inner.target != outer.source {
            return Err(Error::LatticeMismatch);
        }
        let target_rank = outer.target.rank();
        let mut matrix = Vec::with_capacity(target_rank);
        for j in 0..target_rank {
            let mid = outer.pull_back(&outer.target.basis_class(j))?;
            let src = inner.pull_back(&mid)?;
            let col = src
                .coeffs()
                .iter()
                .map(|c| {
                    debug_assert!(c.is_integer());
                    i64::try_from(c.to_integer()).expect("pullback coefficient overflow")
                })
                .collect();
            matrix.push(col);
        }

        let mut contracted: BTreeSet<String> = inner.contracted_curves.clone();
        for mid_label in &outer.contracted_curves {
            if let Some(src_label) = inner.strict_transforms.get(mid_label) {
                contracted.insert(src_label.clone());
            }
        }

        let mut strict = BTreeMap::new();
        for (t, mid) in &outer.strict_transforms {
            if let Some(src) = inner.strict_transforms.get(mid) {
                strict.insert(t.clone(), src.clone());
            }
        }

        // invert outer's strict-transform table to trace images of mid curves
        let outer_strict_inv: BTreeMap<&String, &String> =
            outer.strict_transforms.iter().map(|(t, m)| (m, t)).collect();
        let mut over = BTreeMap::new();
        for (src_label, mid_curve) in &inner.over {
            let target_curve = match mid_curve {
                None => None,
                Some(mid_label) => {
                    if outer.contracted_curves.contains(mid_label) {
                        outer.over.get(mid_label).cloned().flatten()
                    } else {
                        outer_strict_inv.get(mid_label).map(|t| (*t).clone())
                    }
                }
            };
            over.insert(src_label.clone(), target_curve);
        }
        for mid_label in &outer.contracted_curves {
            if let Some(src_label) = inner.strict_transforms.get(mid_label) {
                over.insert(
                    src_label.clone(),
                    outer.over.get(mid_label).cloned().flatten(),
                );
            }
        }

        BlowdownMap::new(
            inner.source.clone(),
            outer.target.clone(),
            matrix,
            contracted,
            strict,
            over,
        )
    }
}

pub mod presets {
    //! The two bundled surfaces, plus the rank-one lattice of the line.

    use super::*;

    /// The projective plane: one basis class `L` (a line), complete catalog.
    pub fn p2() -> SurfaceLattice {
        LatticeSpec {
            name: "p2".into(),
            basis_labels: vec!["L".into()],
            gram: vec![vec![rat(1)]],
            curves: vec![("L".into(), vec![rat(1)])],
            mori: vec![vec![rat(1)]],
            polarization: vec![rat(1)],
            aliases: vec![("H".into(), "L".into())],
        }
        .build()
        .expect("p2 preset is valid")
    }

    /// The plane blown up in a point and again in an infinitely near point.
    ///
    /// Basis `(L, F̄, F′)`: the pullback of a line, the strict transform of
    /// the first exceptional divisor, and the second exceptional divisor.
    /// The catalog lists every negative curve: `F̄` (-2), `F′` (-1), and the
    /// strict transform `M = L - F̄ - 2F′` (-1) of the line through both
    /// centers; the same classes generate the effective cone.
    pub fn p2_double_blowup() -> SurfaceLattice {
        LatticeSpec {
            name: "p2-double-blowup".into(),
            basis_labels: vec!["L".into(), "F̄".into(), "F′".into()],
            gram: vec![
                vec![rat(1), rat(0), rat(0)],
                vec![rat(0), rat(-2), rat(1)],
                vec![rat(0), rat(1), rat(-1)],
            ],
            curves: vec![
                ("F̄".into(), vec![rat(0), rat(1), rat(0)]),
                ("F′".into(), vec![rat(0), rat(0), rat(1)]),
                ("M".into(), vec![rat(1), rat(-1), rat(-2)]),
            ],
            mori: vec![
                vec![rat(0), rat(1), rat(0)],
                vec![rat(0), rat(0), rat(1)],
                vec![rat(1), rat(-1), rat(-2)],
            ],
            polarization: vec![rat(6), rat(-2), rat(-3)],
            aliases: vec![
                ("Fb".into(), "F̄".into()),
                ("Fp".into(), "F′".into()),
                ("F'".into(), "F′".into()),
            ],
        }
        .build()
        .expect("p2-double-blowup preset is valid")
    }

    /// Rank-one lattice of the projective line (degree pairing). Used to
    /// witness that bundle positivity is not a function of the Chern class.
    pub fn projective_line() -> SurfaceLattice {
        LatticeSpec {
            name: "p1".into(),
            basis_labels: vec!["H".into()],
            gram: vec![vec![rat(1)]],
            curves: vec![],
            mori: vec![vec![rat(1)]],
            polarization: vec![rat(1)],
            aliases: vec![],
        }
        .build()
        .expect("p1 lattice is valid")
    }

    /// The bundled blow-down from the double blow-up to the plane. Both
    /// exceptional curves are contracted; the catalog line of the plane is
    /// chosen through the first center with the direction of the second, so
    /// its strict transform is `M`.
    pub fn blowdown_to_p2() -> BlowdownMap {
        BlowdownMap::new(
            p2_double_blowup(),
            p2(),
            vec![vec![1, 0, 0]],
            ["F̄".to_string(), "F′".to_string()].into(),
            [("L".to_string(), "M".to_string())].into(),
            [
                ("F̄".to_string(), Some("L".to_string())),
                ("F′".to_string(), Some("L".to_string())),
            ]
            .into(),
        )
        .expect("bundled blow-down is valid")
    }

    pub fn by_name(name: &str) -> Option<SurfaceLattice> {
        match name {
            "p2" => Some(p2()),
            "p2-double-blowup" => Some(p2_double_blowup()),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::presets::*;
    use super::*;
    use crate::rat::ratio;

    fn x_class(l: i64, fb: i64, fp: i64) -> DivisorClass {
        p2_double_blowup().class_from_ints(&[l, fb, fp]).unwrap()
    }

    /// `C` is the strict transform of a conic through the first center whose
    /// tangent direction avoids the second: `2L - F̄ - F′`.
    fn conic() -> DivisorClass {
        x_class(2, -1, -1)
    }

    #[test]
    fn known_pairings_on_the_double_blowup() {
        let c = conic();
        let fb = x_class(0, 1, 0);
        let fp = x_class(0, 0, 1);
        let l = x_class(1, 0, 0);
        assert_eq!(c.intersect(&c).unwrap(), rat(3));
        assert_eq!(c.intersect(&fp).unwrap(), rat(0));
        assert_eq!(c.intersect(&fb).unwrap(), rat(1));
        assert_eq!(l.intersect(&l).unwrap(), rat(1));
        let d = &(&c + &fb) + &fp.scale(&rat(2));
        assert_eq!(d.intersect(&fb).unwrap(), rat(1));
        assert_eq!(fp.self_intersection(), rat(-1));
        assert_eq!(fb.self_intersection(), rat(-2));
    }

    #[test]
    fn intersect_rejects_lattice_mismatch() {
        let l = p2().basis_class(0);
        let fb = x_class(0, 1, 0);
        assert_eq!(l.intersect(&fb), Err(Error::LatticeMismatch));
    }

    #[test]
    fn nef_and_ample_examples() {
        let l = x_class(1, 0, 0);
        assert!(l.is_nef());
        assert!(!l.is_ample()); // L . F̄ = 0
        let p = &conic() + &x_class(0, 1, 1); // C + F̄ + F′ = 2L
        assert!(p.is_nef());
        assert!(!x_class(0, 1, 0).is_nef()); // F̄^2 = -2

        let a = x_class(6, -2, -3);
        assert!(a.is_ample());
        assert_eq!(a.self_intersection(), rat(31));
        assert_eq!(a.intersect(&x_class(0, 1, 0)).unwrap(), rat(1));
        assert_eq!(a.intersect(&x_class(0, 0, 1)).unwrap(), rat(1));
        assert_eq!(a.intersect(&x_class(1, -1, -2)).unwrap(), rat(3));

        assert!(p2().basis_class(0).is_ample());
    }

    #[test]
    fn psef_examples() {
        assert!(x_class(0, 1, 0).is_psef()); // a generator
        assert!(!(&p2().basis_class(0)).scale(&rat(-1)).is_psef());
        let c_plus = &conic() + &x_class(0, 0, 2);
        assert!(c_plus.is_psef());
        // C + 2F′ = 2L - F̄ + F′ = M + (L) + ... explicit nonnegative combination:
        // C = M + (L - F̄ - 2F′)?  direct check: C + 2F′ = (L-F̄-2F′) + L + ... LP decides.
        assert!(conic().is_psef());
        assert!(!x_class(-1, 0, 0).is_psef());
    }

    #[test]
    fn single_blowup_gram() {
        let (lat, map) = p2().blow_up(None, "E").unwrap();
        assert_eq!(lat.basis_labels(), ["L", "E"]);
        assert_eq!(
            lat.gram(),
            &vec![vec![rat(1), rat(0)], vec![rat(0), rat(-1)]]
        );
        assert_eq!(
            map.contracted_curves().iter().collect::<Vec<_>>(),
            ["E"]
        );
    }

    #[test]
    fn double_blowup_matches_preset_gram() {
        let (x1, f1) = p2().blow_up(None, "F̄").unwrap();
        let (x, f2) = x1.blow_up(Some("F̄"), "F′").unwrap();
        assert_eq!(x.basis_labels(), ["L", "F̄", "F′"]);
        assert_eq!(x.gram(), p2_double_blowup().gram());

        let composite = BlowdownMap::compose(&f1, &f2).unwrap();
        assert_eq!(
            composite.contracted_curves().iter().collect::<Vec<_>>(),
            ["F̄", "F′"]
        );
        let pulled = composite.pull_back(&p2().basis_class(0)).unwrap();
        assert_eq!(pulled.coeffs(), x.class_from_ints(&[1, 0, 0]).unwrap().coeffs());
    }

    #[test]
    fn catalog_of_x_is_the_negative_strict_transforms() {
        // Lines have classes L - m1 E1 - m2 E2 with m1 in {0,1} and m2 in
        // {0,1} (m2 = 1 requires m1 = 1: the second center is infinitely
        // near); exceptionals are E2 and E1 - E2. Enumerate, keep the
        // negative ones, convert to the (L, F̄, F′) basis via E1 = F̄ + F′,
        // E2 = F′, and compare with the preset catalog.
        let x = p2_double_blowup();
        let to_basis = |l: i64, m1: i64, m2: i64| x_class(l, -m1, -(m1 + m2));
        let mut negatives: Vec<Vec<Rat>> = Vec::new();
        // lines
        for (m1, m2) in [(0, 0), (1, 0), (1, 1)] {
            let class = to_basis(1, m1, m2);
            if class.self_intersection().is_negative() {
                negatives.push(class.coeffs().to_vec());
            }
        }
        // exceptionals: E1 - E2 = F̄ and E2 = F′
        for class in [x_class(0, 1, 0), x_class(0, 0, 1)] {
            assert!(class.self_intersection().is_negative());
            negatives.push(class.coeffs().to_vec());
        }
        let catalog: Vec<Vec<Rat>> = x
            .curve_catalog()
            .iter()
            .map(|c| c.class.coeffs().to_vec())
            .collect();
        for n in &negatives {
            assert!(catalog.contains(n), "missing negative class {n:?}");
        }
        assert_eq!(negatives.len(), catalog.len());
        // self-intersections as in the catalog
        let si: Vec<Rat> = x
            .curve_catalog()
            .iter()
            .map(|c| c.self_intersection.clone())
            .collect();
        assert_eq!(si, vec![rat(-2), rat(-1), rat(-1)]);
    }

    #[test]
    fn blowup_center_on_a_basis_curve_replaces_the_slot() {
        // Blowing up a point of the catalog line: the basis slot `L` now
        // denotes the strict transform, so the catalog line keeps unit
        // coordinates while its self-intersection drops to 0 and it gains
        // the pairing with the exceptional class.
        let (x1, _) = p2().blow_up(Some("L"), "E").unwrap();
        let line = x1.curve("L").unwrap();
        assert_eq!(line.self_intersection, rat(0));
        assert_eq!(
            line.class.coeffs(),
            x1.class_from_ints(&[1, 0]).unwrap().coeffs()
        );
        assert_eq!(x1.gram()[0][0], rat(0));
        assert_eq!(x1.gram()[0][1], rat(1));
        // effective generators become the two rulings of the Hirzebruch surface
        let gens: Vec<Vec<Rat>> = x1
            .mori_generators()
            .iter()
            .map(|g| g.coeffs().to_vec())
            .collect();
        assert!(gens.contains(&rat_vec_local(&[1, 0])));
        assert!(gens.contains(&rat_vec_local(&[0, 1])));
    }

    fn rat_vec_local(v: &[i64]) -> Vec<Rat> {
        v.iter().map(|&n| rat(n)).collect()
    }

    #[test]
    fn blowdown_projection_formula() {
        let f = blowdown_to_p2();
        for a in -3i64..=3 {
            for b in -3i64..=3 {
                let d1 = f.target().class_from_ints(&[a]).unwrap();
                let d2 = f.target().class_from_ints(&[b]).unwrap();
                let lhs = f
                    .pull_back(&d1)
                    .unwrap()
                    .intersect(&f.pull_back(&d2).unwrap())
                    .unwrap();
                assert_eq!(lhs, d1.intersect(&d2).unwrap());
            }
        }
    }

    #[test]
    fn display_formats_signed_rational_combinations() {
        assert_eq!(x_class(2, -1, 0).to_string(), "2L - F̄");
        assert_eq!(x_class(0, 0, 0).to_string(), "0");
        let half = p2_double_blowup()
            .class(vec![rat(-1), ratio(3, 2), rat(1)])
            .unwrap();
        assert_eq!(half.to_string(), "-L + 3/2F̄ + F′");
    }

    #[test]
    fn hodge_index_on_constructed_lattices() {
        let (x1, _) = p2().blow_up(None, "E1").unwrap();
        let (x2, _) = x1.blow_up(Some("E1"), "E2").unwrap();
        let (x3, _) = x2.blow_up(Some("L"), "E3").unwrap();
        for lat in [p2(), p2_double_blowup(), projective_line(), x1, x2, x3] {
            let (pos, _, zero) = crate::linalg::signature(lat.gram());
            assert_eq!((pos, zero), (1, 0), "lattice {}", lat.name());
        }
    }

    #[test]
    fn invalid_lattices_are_rejected() {
        // asymmetric gram
        let bad = LatticeSpec {
            name: "bad".into(),
            basis_labels: vec!["a".into(), "b".into()],
            gram: vec![vec![rat(1), rat(1)], vec![rat(0), rat(-1)]],
            curves: vec![],
            mori: vec![vec![rat(1), rat(0)]],
            polarization: vec![rat(1), rat(0)],
            aliases: vec![],
        };
        assert!(bad.build().is_err());
        // wrong signature
        let bad = LatticeSpec {
            name: "bad".into(),
            basis_labels: vec!["a".into(), "b".into()],
            gram: vec![vec![rat(1), rat(0)], vec![rat(0), rat(1)]],
            curves: vec![],
            mori: vec![vec![rat(1), rat(0)]],
            polarization: vec![rat(1), rat(0)],
            aliases: vec![],
        };
        assert!(bad.build().is_err());
    }

    #[test]
    fn unknown_blowup_center_is_reported() {
        assert_eq!(
            p2().blow_up(Some("nope"), "E").unwrap_err(),
            Error::UnknownLabel("nope".into())
        );
    }
}
