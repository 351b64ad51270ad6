//! Partition and Schur-functor combinatorics: tensor powers of a rank-`r`
//! bundle decompose into Schur summands indexed by partitions with at most
//! `r` parts, each summand a Pieri direct summand of a product of symmetric
//! powers. This module provides the counting half of that story, plus the
//! exponent bookkeeping used to balance twists against symmetric powers.
//!
//! Multiplicities and dimensions are computed by the hook length and hook
//! content formulas; the brute-force tableau enumerators in [`enumeration`]
//! exist to validate them, not to replace them.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::rat::{rat, Rat};

/// A weakly decreasing sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self, Error> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::domain("partition parts must be positive"));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::domain("partition parts must be weakly decreasing"));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    fn part(&self, row: usize) -> u32 {
        self.parts.get(row).copied().unwrap_or(0)
    }

    /// Column lengths of the Young diagram (the conjugate partition).
    fn conjugate_parts(&self) -> Vec<u32> {
        let width = self.part(0) as usize;
        (0..width)
            .map(|col| self.parts.iter().filter(|&&p| p as usize > col).count() as u32)
            .collect()
    }

    fn hook_lengths(&self) -> Vec<u64> {
        let conj = self.conjugate_parts();
        let mut hooks = Vec::with_capacity(self.weight() as usize);
        for (i, &row_len) in self.parts.iter().enumerate() {
            for j in 0..row_len as usize {
                let arm = row_len as u64 - j as u64 - 1;
                let leg = conj[j] as u64 - i as u64 - 1;
                hooks.push(arm + leg + 1);
            }
        }
        hooks
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `3,1` or `(3,1)`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let trimmed = s.trim().trim_start_matches('(').trim_end_matches(')');
        if trimmed.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = trimmed
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::domain(format!("invalid partition part `{p}`")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Partition::new(parts)
    }
}

/// All partitions of `n` with at most `max_parts` parts, in decreasing
/// lexicographic order.
pub fn partitions(n: u32, max_parts: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn recurse(
        remaining: u32,
        max_first: u32,
        slots: usize,
        current: &mut Vec<u32>,
        out: &mut Vec<Partition>,
    ) {
        if remaining == 0 {
            out.push(Partition {
                parts: current.clone(),
            });
            return;
        }
        if slots == 0 {
            return;
        }
        let upper = remaining.min(max_first);
        // a partition fits in `slots` rows of height <= k only if k*slots >= n
        for k in (1..=upper).rev() {
            if (k as u64) * (slots as u64) < remaining as u64 {
                break;
            }
            current.push(k);
            recurse(remaining - k, k, slots - 1, current, out);
            current.pop();
        }
    }
    recurse(n, n, max_parts, &mut current, &mut out);
    out
}

/// Number of standard Young tableaux of the shape, by the hook length
/// formula. Panics when the count does not fit exact machine arithmetic
/// (weights beyond roughly 30; the sweeps here stay at 8).
pub fn num_standard_tableaux(shape: &Partition) -> u64 {
    let n = shape.weight();
    let mut numerator: u128 = 1;
    for k in 1..=n {
        numerator = numerator
            .checked_mul(k as u128)
            .expect("factorial exceeds u128");
    }
    let mut denominator: u128 = 1;
    for h in shape.hook_lengths() {
        denominator *= h as u128;
    }
    debug_assert_eq!(numerator % denominator, 0);
    u64::try_from(numerator / denominator).expect("tableau count exceeds u64")
}

/// Dimension of the Schur functor of the shape applied to a rank-`r` space,
/// by the hook content formula. Zero exactly when the shape has more than
/// `r` parts.
pub fn schur_dim(shape: &Partition, r: u32) -> u64 {
    let conj = shape.conjugate_parts();
    let mut numerator: u128 = 1;
    let mut denominator: u128 = 1;
    for (i, &row_len) in shape.parts.iter().enumerate() {
        for j in 0..row_len as usize {
            let content = r as i64 + j as i64 - i as i64;
            if content <= 0 {
                return 0;
            }
            numerator = numerator
                .checked_mul(content as u128)
                .expect("dimension numerator exceeds u128");
            let arm = row_len as u128 - j as u128 - 1;
            let leg = conj[j] as u128 - i as u128 - 1;
            denominator *= arm + leg + 1;
        }
    }
    debug_assert_eq!(numerator % denominator, 0);
    u64::try_from(numerator / denominator).expect("dimension exceeds u64")
}

/// One Schur summand of a tensor power: the shape and its multiplicity (the
/// number of standard tableaux).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchurSummand {
    pub partition: Partition,
    pub tableau_multiplicity: u64,
}

impl SchurSummand {
    pub fn dimension_at_rank(&self, r: u32) -> u64 {
        schur_dim(&self.partition, r)
    }
}

/// The Schur summands of the `n`-th tensor power of a rank-`r` space: all
/// shapes of weight `n` with at most `r` parts. The dimensions balance:
/// the multiplicity-weighted sum is `r^n`.
pub fn tensor_power_decomposition(n: u32, r: u32) -> Vec<SchurSummand> {
    partitions(n, r as usize)
        .into_iter()
        .map(|partition| {
            let tableau_multiplicity = num_standard_tableaux(&partition);
            SchurSummand {
                partition,
                tableau_multiplicity,
            }
        })
        .collect()
}

/// Kostka number: semistandard tableaux of the given shape and content,
/// counted by direct enumeration. `content[v]` is the required number of
/// entries equal to `v + 1`; zeros are allowed.
pub fn kostka(shape: &Partition, content: &[u32]) -> Result<u64, Error> {
    let content_weight: u64 = content.iter().map(|&c| c as u64).sum();
    if content_weight != shape.weight() {
        return Err(Error::WeightMismatch {
            lambda: shape.weight(),
            mu: content_weight,
        });
    }
    let rows = shape.len();
    let mut remaining: Vec<u32> = content.to_vec();
    let mut grid: Vec<Vec<u32>> = shape
        .parts
        .iter()
        .map(|&len| vec![0; len as usize])
        .collect();

    fn fill(
        shape: &Partition,
        grid: &mut Vec<Vec<u32>>,
        remaining: &mut Vec<u32>,
        row: usize,
        col: usize,
        rows: usize,
    ) -> u64 {
        if row == rows {
            return 1;
        }
        let (next_row, next_col) = if col + 1 < shape.parts()[row] as usize {
            (row, col + 1)
        } else {
            (row + 1, 0)
        };
        let min_left = if col > 0 { grid[row][col - 1] } else { 1 };
        let min_up = if row > 0 && col < grid[row - 1].len() {
            grid[row - 1][col] + 1
        } else {
            1
        };
        let lowest = min_left.max(min_up);
        let mut total = 0;
        for value in lowest..=remaining.len() as u32 {
            let idx = value as usize - 1;
            if remaining[idx] == 0 {
                continue;
            }
            remaining[idx] -= 1;
            grid[row][col] = value;
            total += fill(shape, grid, remaining, next_row, next_col, rows);
            remaining[idx] += 1;
        }
        grid[row][col] = 0;
        total
    }

    if rows == 0 {
        return Ok(1);
    }
    Ok(fill(shape, &mut grid, &mut remaining, 0, 0, rows))
}

/// A symmetric function expanded in the Schur basis with nonnegative integer
/// coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SchurExpansion {
    terms: std::collections::BTreeMap<Partition, u64>,
}

impl SchurExpansion {
    pub fn one() -> Self {
        let mut terms = std::collections::BTreeMap::new();
        terms.insert(Partition::empty(), 1);
        SchurExpansion { terms }
    }

    pub fn coefficient(&self, shape: &Partition) -> u64 {
        self.terms.get(shape).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, u64)> {
        self.terms.iter().map(|(p, &c)| (p, c))
    }

    /// Multiplies by the complete homogeneous symmetric function `h_k`:
    /// every shape grows by a horizontal `k`-strip.
    pub fn pieri_multiply(&self, k: u32) -> SchurExpansion {
        if k == 0 {
            return self.clone();
        }
        let mut terms = std::collections::BTreeMap::new();
        for (shape, &coeff) in &self.terms {
            for grown in horizontal_strip_extensions(shape, k) {
                *terms.entry(grown).or_insert(0) += coeff;
            }
        }
        SchurExpansion { terms }
    }
}

/// Shapes obtained from `shape` by adding a horizontal strip of `k` boxes:
/// `nu_i >= mu_i >= nu_{i+1}` with `|nu| = |mu| + k`.
fn horizontal_strip_extensions(shape: &Partition, k: u32) -> Vec<Partition> {
    let rows = shape.len() + 1;
    let mut out = Vec::new();
    let mut nu: Vec<u32> = Vec::with_capacity(rows);

    fn recurse(shape: &Partition, row: usize, rows: usize, left: u32, nu: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if row == rows {
            if left == 0 {
                let parts: Vec<u32> = nu.iter().copied().filter(|&p| p > 0).collect();
                out.push(Partition { parts });
            }
            return;
        }
        let base = shape.part(row);
        // upper bound: no two new boxes in one column, and rows stay ordered
        let cap = if row == 0 {
            base + left
        } else {
            shape.part(row - 1)
        };
        let lo = base;
        let hi = cap.min(base + left);
        for val in lo..=hi {
            if row > 0 && val > nu[row - 1] {
                break;
            }
            nu.push(val);
            recurse(shape, row + 1, rows, left - (val - base), nu, out);
            nu.pop();
        }
    }

    recurse(shape, 0, rows, k, &mut nu, &mut out);
    out
}

/// Expansion of `h_{k_1} ... h_{k_m}` in the Schur basis by iterated Pieri
/// multiplication. Zeros act as `h_0 = 1`.
pub fn homogeneous_product(degrees: &[u32]) -> SchurExpansion {
    degrees
        .iter()
        .fold(SchurExpansion::one(), |acc, &k| acc.pieri_multiply(k))
}

/// Multiplicity of the Schur function of `shape` in the product of complete
/// homogeneous functions indexed by its own parts, requiring at most `r`
/// parts. Pieri's rule makes this a direct-summand certificate; the value is
/// always at least 1.
pub fn pieri_summand_certificate(shape: &Partition, r: u32) -> Result<u64, Error> {
    if shape.len() > r as usize {
        return Err(Error::TooManyParts {
            parts: shape.len(),
            rank: r as usize,
        });
    }
    Ok(homogeneous_product(shape.parts()).coefficient(shape))
}

/// The Euclidean-division bookkeeping for a shape of weight `M * q`: each
/// part splits as `a_i * (m q) + b_i`, and the twist balance
/// `2M - m * sum(a_i)` equals `M + sum(b_i)/q`, which is at least `M`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessExponents {
    pub a: Vec<u64>,
    pub b: Vec<u64>,
    pub lhs: Rat,
    pub rhs: Rat,
}

pub fn witness_exponents(
    shape: &Partition,
    m: u32,
    q: u32,
    big_m: u32,
) -> Result<WitnessExponents, Error> {
    let target = big_m as u64 * q as u64;
    if shape.weight() != target {
        return Err(Error::WeightMismatch {
            lambda: shape.weight(),
            mu: target,
        });
    }
    if m == 0 || q == 0 || big_m == 0 {
        return Err(Error::domain("m, q and M must be positive"));
    }
    let modulus = m as u64 * q as u64;
    let mut a = Vec::with_capacity(shape.len());
    let mut b = Vec::with_capacity(shape.len());
    for &part in shape.parts() {
        a.push(part as u64 / modulus);
        b.push(part as u64 % modulus);
    }
    let sum_a: u64 = a.iter().sum();
    let sum_b: u64 = b.iter().sum();
    let lhs = rat(2 * big_m as i64) - rat(m as i64) * rat(sum_a as i64);
    let rhs = rat(big_m as i64) + rat(sum_b as i64) / rat(q as i64);
    Ok(WitnessExponents { a, b, lhs, rhs })
}

pub mod enumeration {
    //! Reference enumerators used to cross-check the formulas. They count by
    //! direct backtracking and are deliberately independent of the hook
    //! formulas and of the Pieri expansion.

    use super::Partition;

    /// Standard Young tableaux counted by placing `1..n` cell by cell.
    pub fn count_standard_tableaux(shape: &Partition) -> u64 {
        let rows = shape.len();
        if rows == 0 {
            return 1;
        }
        let mut filled: Vec<usize> = vec![0; rows]; // boxes occupied per row
        fn place(shape: &Partition, filled: &mut Vec<usize>, remaining: u64) -> u64 {
            if remaining == 0 {
                return 1;
            }
            let mut total = 0;
            for row in 0..shape.len() {
                let col = filled[row];
                if col < shape.parts()[row] as usize
                    && (row == 0 || filled[row - 1] > col)
                {
                    filled[row] += 1;
                    total += place(shape, filled, remaining - 1);
                    filled[row] -= 1;
                }
            }
            total
        }
        place(shape, &mut filled, shape.weight())
    }
}
