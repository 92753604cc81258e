//! Exact integer linear algebra: Smith normal form and elementary divisors.

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};

/// Elementary divisors `d_1 | d_2 | … | d_k` (`k = min(rows, cols)`) of an
/// integer matrix, zeros last; `rank` counts the nonzero ones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm {
    divisors: Vec<BigUint>,
    rank: usize,
}

impl SmithForm {
    pub fn divisors(&self) -> &[BigUint] {
        &self.divisors
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn divisors_u64(&self) -> Vec<u64> {
        self.divisors
            .iter()
            .map(|d| u64::try_from(d).expect("divisor fits in u64"))
            .collect()
    }

    /// Number of divisors the prime `ell` divides — the `F_ell`-dimension of
    /// the cokernel torsion, and the rank drop of the matrix mod `ell`.
    pub fn count_divisible_by(&self, ell: u64) -> usize {
        let ell = BigUint::from(ell);
        self.divisors
            .iter()
            .filter(|d| !d.is_zero() && (*d % &ell).is_zero())
            .count()
    }

    /// Rank of the matrix over `F_ell`.
    pub fn rank_mod(&self, ell: u64) -> usize {
        self.rank - self.count_divisible_by(ell)
    }
}

/// Smith normal form over the integers.
///
/// Classic pivot-reduction: move a minimal-magnitude entry to the pivot,
/// clear its row and column by euclidean steps, then restore the
/// divisibility chain by folding non-multiples into the pivot row. Matrices
/// here are desk-scale (Cartan blocks, Gram matrices), so no effort is spent
/// on pivot-growth strategies beyond taking the smallest entry.
pub fn smith_normal_form(mat: &[Vec<BigInt>]) -> SmithForm {
    let rows = mat.len();
    let cols = if rows == 0 { 0 } else { mat[0].len() };
    let k = rows.min(cols);
    let mut a = mat.to_vec();
    let mut divisors: Vec<BigUint> = Vec::with_capacity(k);
    let mut t = 0;
    'pivot: while t < k {
        let Some((pi, pj)) = min_abs_entry(&a, t) else {
            break;
        };
        a.swap(t, pi);
        swap_cols(&mut a, t, pj);
        loop {
            // clear column t below the pivot
            for i in t + 1..rows {
                if !a[i][t].is_zero() {
                    let q = &a[i][t] / &a[t][t];
                    for j in t..cols {
                        let delta = &q * &a[t][j];
                        a[i][j] -= delta;
                    }
                    if !a[i][t].is_zero() {
                        // remainder is smaller than the pivot: promote it
                        a.swap(t, i);
                        continue 'pivot;
                    }
                }
            }
            // clear row t right of the pivot
            for j in t + 1..cols {
                if !a[t][j].is_zero() {
                    let q = &a[t][j] / &a[t][t];
                    for i in t..rows {
                        let delta = &q * &a[i][t];
                        a[i][j] -= delta;
                    }
                    if !a[t][j].is_zero() {
                        swap_cols(&mut a, t, j);
                        continue 'pivot;
                    }
                }
            }
            // divisibility fixup: the pivot must divide every remaining entry
            match find_nondivisible(&a, t) {
                Some(i) => {
                    for j in t..cols {
                        let add = a[i][j].clone();
                        a[t][j] += add;
                    }
                }
                None => break,
            }
        }
        divisors.push(a[t][t].abs().to_biguint().expect("non-negative"));
        t += 1;
    }
    let rank = divisors.len();
    divisors.resize(k, BigUint::zero());
    SmithForm { divisors, rank }
}

pub fn smith_normal_form_i64(mat: &[Vec<i64>]) -> SmithForm {
    let big: Vec<Vec<BigInt>> = mat
        .iter()
        .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    smith_normal_form(&big)
}

fn min_abs_entry(a: &[Vec<BigInt>], t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..a.len() {
        for j in t..a[i].len() {
            if !a[i][j].is_zero()
                && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs())
            {
                best = Some((i, j));
            }
        }
    }
    best
}

fn swap_cols(a: &mut [Vec<BigInt>], j1: usize, j2: usize) {
    if j1 != j2 {
        for row in a.iter_mut() {
            row.swap(j1, j2);
        }
    }
}

fn find_nondivisible(a: &[Vec<BigInt>], t: usize) -> Option<usize> {
    let rows = a.len();
    let cols = a[0].len();
    for i in t + 1..rows {
        for j in t + 1..cols {
            if !(&a[i][j] % &a[t][t]).is_zero() {
                return Some(i);
            }
        }
    }
    None
}
