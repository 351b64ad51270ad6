//! Exact-arithmetic positivity computations on explicitly presented surfaces:
//! Zariski decompositions, augmented and diminished base loci of divisor
//! classes and rationally twisted split bundles, Schur-functor combinatorics,
//! projective-space cohomology, and Chern / log-Chern character algebra.
//!
//! Everything is computed over exact rationals; there is no floating-point
//! fallback. Cone tests are correct relative to the curve catalog stored with
//! each surface, and the bundled presets carry complete catalogs.

pub mod base_loci;
pub mod chern;
pub mod cohomology;
pub mod config;
pub mod error;
pub mod lattice;
pub mod linalg;
pub mod parse;
pub mod random;
pub mod rat;
pub mod schur;
pub mod zariski;

pub use base_loci::{BaseLocus, SplitBundle};
pub use error::Error;
pub use lattice::{BlowdownMap, CurveRecord, DivisorClass, LatticeSpec, SurfaceLattice};
pub use rat::Rat;
pub use zariski::{Zariski, ZariskiDecomposition};
