//! Exact rational linear algebra: Gaussian elimination, inertia of symmetric
//! matrices, and Fourier–Motzkin feasibility for cone-membership tests.
//!
//! Dimensions here are tiny (lattice ranks up to about six), so every routine
//! favors determinism over speed: pivots are chosen in index order, never by
//! magnitude.

use num_traits::{Signed, Zero};

use crate::rat::Rat;

pub type Matrix = Vec<Vec<Rat>>;

pub fn is_symmetric(m: &Matrix) -> bool {
    let n = m.len();
    m.iter().all(|row| row.len() == n) && (0..n).all(|i| (0..n).all(|j| m[i][j] == m[j][i]))
}

/// Solves `a x = b` for square `a` by fraction-free-ordered Gaussian
/// elimination. Pivot ties break by row order, so the output is deterministic.
/// Returns `None` when `a` is singular.
pub fn solve_square(a: &Matrix, b: &[Rat]) -> Option<Vec<Rat>> {
    let n = a.len();
    assert!(a.iter().all(|row| row.len() == n) && b.len() == n);
    let mut m: Vec<Vec<Rat>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();

    for col in 0..n {
        let pivot_row = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot_row);
        let pivot = m[col][col].clone();
        for entry in m[col].iter_mut() {
            *entry = &*entry / &pivot;
        }
        for row in 0..n {
            if row != col && !m[row][col].is_zero() {
                let factor = m[row][col].clone();
                for k in col..=n {
                    let delta = &factor * &m[col][k];
                    m[row][k] = &m[row][k] - &delta;
                }
            }
        }
    }
    Some(m.into_iter().map(|row| row[n].clone()).collect())
}

/// Inertia `(positive, negative, zero)` of a symmetric matrix, computed by
/// exact symmetric elimination. Zero diagonal blocks with a nonzero
/// off-diagonal entry contribute a hyperbolic `(+1, -1)` pair.
pub fn signature(m: &Matrix) -> (usize, usize, usize) {
    assert!(is_symmetric(m), "signature requires a symmetric matrix");
    let mut m = m.clone();
    let mut active: Vec<usize> = (0..m.len()).collect();
    let (mut pos, mut neg) = (0usize, 0usize);

    while !active.is_empty() {
        if let Some(&p) = active.iter().find(|&&i| !m[i][i].is_zero()) {
            if m[p][p].is_positive() {
                pos += 1;
            } else {
                neg += 1;
            }
            active.retain(|&i| i != p);
            let pivot = m[p][p].clone();
            for &i in &active {
                for &j in &active {
                    let delta = &(&m[p][i] * &m[p][j]) / &pivot;
                    m[i][j] = &m[i][j] - &delta;
                }
            }
        } else if let Some((p, q)) = first_offdiagonal(&m, &active) {
            // hyperbolic block [[0, c], [c, 0]]
            pos += 1;
            neg += 1;
            active.retain(|&i| i != p && i != q);
            let c = m[p][q].clone();
            for &i in &active {
                for &j in &active {
                    let delta = &(&(&m[p][i] * &m[q][j]) + &(&m[q][i] * &m[p][j])) / &c;
                    m[i][j] = &m[i][j] - &delta;
                }
            }
        } else {
            return (pos, neg, active.len());
        }
    }
    (pos, neg, 0)
}

fn first_offdiagonal(m: &Matrix, active: &[usize]) -> Option<(usize, usize)> {
    for (k, &i) in active.iter().enumerate() {
        for &j in &active[k + 1..] {
            if !m[i][j].is_zero() {
                return Some((i, j));
            }
        }
    }
    None
}

pub fn is_negative_definite(m: &Matrix) -> bool {
    let n = m.len();
    signature(m) == (0, n, 0)
}

/// One inequality `coeffs · x <= bound`.
#[derive(Clone, Debug)]
pub struct Inequality {
    pub coeffs: Vec<Rat>,
    pub bound: Rat,
}

/// Feasibility of a system of rational inequalities by Fourier–Motzkin
/// elimination. Exact and tiny-dimension only: the number of rows can grow
/// quadratically per eliminated variable.
pub fn fm_feasible(mut rows: Vec<Inequality>, num_vars: usize) -> bool {
    for var in 0..num_vars {
        let mut zero = Vec::new();
        let mut upper = Vec::new(); // positive coefficient on `var`
        let mut lower = Vec::new(); // negative coefficient on `var`
        for row in rows {
            if row.coeffs[var].is_zero() {
                zero.push(row);
            } else if row.coeffs[var].is_positive() {
                upper.push(row);
            } else {
                lower.push(row);
            }
        }
        let mut next = zero;
        for up in &upper {
            for lo in &lower {
                // nonnegative combination cancelling `var`:
                //   (-lo_coeff) * up + up_coeff * lo
                let a = -lo.coeffs[var].clone();
                let b = up.coeffs[var].clone();
                let coeffs = (0..num_vars)
                    .map(|k| &(&a * &up.coeffs[k]) + &(&b * &lo.coeffs[k]))
                    .collect();
                let bound = &(&a * &up.bound) + &(&b * &lo.bound);
                next.push(Inequality { coeffs, bound });
            }
        }
        rows = next;
    }
    rows.iter().all(|row| !row.bound.is_negative())
}

/// Does `target` lie in the cone of nonnegative rational combinations of
/// `gens`? Decided exactly: the equality constraints are split into opposite
/// inequalities and the combination variables eliminated by Fourier–Motzkin.
pub fn in_nonneg_span(gens: &[Vec<Rat>], target: &[Rat]) -> bool {
    let dim = target.len();
    assert!(gens.iter().all(|g| g.len() == dim));
    let vars = gens.len();
    if vars == 0 {
        return target.iter().all(|t| t.is_zero());
    }
    let mut rows = Vec::with_capacity(2 * dim + vars);
    for coord in 0..dim {
        let coeffs: Vec<Rat> = gens.iter().map(|g| g[coord].clone()).collect();
        rows.push(Inequality {
            coeffs: coeffs.clone(),
            bound: target[coord].clone(),
        });
        rows.push(Inequality {
            coeffs: coeffs.into_iter().map(|c| -c).collect(),
            bound: -target[coord].clone(),
        });
    }
    for v in 0..vars {
        let mut coeffs = vec![Rat::zero(); vars];
        coeffs[v] = -crate::rat::rat(1);
        rows.push(Inequality {
            coeffs,
            bound: Rat::zero(),
        });
    }
    fm_feasible(rows, vars)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_vec};

    fn mat(rows: &[&[i64]]) -> Matrix {
        rows.iter().map(|r| rat_vec(r)).collect()
    }

    #[test]
    fn solve_simple_system() {
        // x + y = 3, x - y = 1 => x = 2, y = 1
        let a = mat(&[&[1, 1], &[1, -1]]);
        let x = solve_square(&a, &rat_vec(&[3, 1])).unwrap();
        assert_eq!(x, rat_vec(&[2, 1]));
    }

    #[test]
    fn solve_detects_singular() {
        let a = mat(&[&[1, 2], &[2, 4]]);
        assert!(solve_square(&a, &rat_vec(&[1, 2])).is_none());
    }

    #[test]
    fn signature_of_blowup_gram() {
        // intersection form of the double blow-up: one positive direction
        let g = mat(&[&[1, 0, 0], &[0, -2, 1], &[0, 1, -1]]);
        assert_eq!(signature(&g), (1, 2, 0));
    }

    #[test]
    fn signature_of_hyperbolic_block() {
        let g = mat(&[&[0, 1], &[1, 0]]);
        assert_eq!(signature(&g), (1, 1, 0));
        let g = mat(&[&[0, 0], &[0, 0]]);
        assert_eq!(signature(&g), (0, 0, 2));
    }

    #[test]
    fn negative_definite_support() {
        assert!(is_negative_definite(&mat(&[&[-2, 1], &[1, -1]])));
        assert!(!is_negative_definite(&mat(&[&[-2, 1], &[1, 1]])));
        assert!(!is_negative_definite(&mat(&[&[-1, 1], &[1, -1]])));
    }

    #[test]
    fn cone_membership_basic() {
        let gens = vec![rat_vec(&[1, 0]), rat_vec(&[1, 1])];
        assert!(in_nonneg_span(&gens, &rat_vec(&[3, 1])));
        assert!(in_nonneg_span(&gens, &rat_vec(&[0, 0])));
        assert!(!in_nonneg_span(&gens, &rat_vec(&[0, 1])));
        assert!(!in_nonneg_span(&gens, &rat_vec(&[-1, 0])));
    }

    #[test]
    fn cone_membership_with_dependent_generators() {
        let gens = vec![rat_vec(&[1, 0]), rat_vec(&[2, 0]), rat_vec(&[0, 1])];
        assert!(in_nonneg_span(&gens, &rat_vec(&[5, 0])));
        assert!(!in_nonneg_span(&gens, &rat_vec(&[0, -1])));
    }

    #[test]
    fn cone_membership_rational_point() {
        let gens = vec![rat_vec(&[2, 1]), rat_vec(&[1, 2])];
        let target = vec![rat(1), ratio_half()];
        assert!(in_nonneg_span(&gens, &target));
    }

    fn ratio_half() -> Rat {
        crate::rat::ratio(1, 2)
    }
}
