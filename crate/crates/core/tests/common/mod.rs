//! Shared helpers for the integration suites.
//!
//! The dominance oracle here is deliberately self-contained: it carries its
//! own Cartan tables and its own exact linear solver (Cramer's rule over
//! `i128`), so that agreement with the library is a genuine cross-check
//! rather than the same code called twice.
#![allow(dead_code)]

use mindeg::degeneration::{enumerate_minimal_degenerations_below, MinimalDegeneration};
use mindeg::build_root_datum;
use rand::Rng;

/// The ambient types the classifier is exercised over.
pub const CLASSIFIER_TYPES: [&str; 6] = ["A3", "B3", "C3", "D4", "G2", "F4"];

fn cartan_table(label: &str) -> Vec<Vec<i64>> {
    // rows are simple roots; entry [i][j] = ⟨α_i, α_j∨⟩ (Bourbaki numbering)
    let rows: &[&[i64]] = match label {
        "A3" => &[&[2, -1, 0], &[-1, 2, -1], &[0, -1, 2]],
        "B3" => &[&[2, -1, 0], &[-1, 2, -2], &[0, -1, 2]],
        "C3" => &[&[2, -1, 0], &[-1, 2, -1], &[0, -2, 2]],
        "D4" => &[&[2, -1, 0, 0], &[-1, 2, -1, -1], &[0, -1, 2, 0], &[0, -1, 0, 2]],
        "G2" => &[&[2, -1], &[-3, 2]],
        "F4" => &[&[2, -1, 0, 0], &[-1, 2, -2, 0], &[0, -1, 2, -1], &[0, 0, -1, 2]],
        other => panic!("no oracle table for {other}"),
    };
    rows.iter().map(|r| r.to_vec()).collect()
}

/// Laplace-expansion determinant; fine for the tiny matrices used in tests.
pub fn det_laplace(m: &[Vec<i128>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    if n == 1 {
        return m[0][0];
    }
    let mut sum = 0i128;
    for j in 0..n {
        if m[0][j] == 0 {
            continue;
        }
        let minor: Vec<Vec<i128>> = (1..n)
            .map(|r| (0..n).filter(|&c| c != j).map(|c| m[r][c]).collect())
            .collect();
        let sign = if j % 2 == 0 { 1 } else { -1 };
        sum += sign * m[0][j] * det_laplace(&minor);
    }
    sum
}

pub fn det_i64(m: &[Vec<i64>]) -> i128 {
    let lifted: Vec<Vec<i128>> = m
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    det_laplace(&lifted)
}

/// Brute-force dominance-order oracle for one simple type.
pub struct Oracle {
    rank: usize,
    a: Vec<Vec<i64>>,
}

impl Oracle {
    pub fn new(label: &str) -> Self {
        let a = cartan_table(label);
        Oracle { rank: a.len(), a }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Weight coordinates of Σ dᵢ αᵢ (the i-th row of the Cartan matrix is αᵢ).
    fn weight_of_combo(&self, d: &[i64]) -> Vec<i64> {
        (0..self.rank)
            .map(|j| (0..self.rank).map(|i| d[i] * self.a[i][j]).sum())
            .collect()
    }

    /// Solves Aᵀ x = rhs exactly by Cramer's rule: returns (numerators,
    /// denominator) with the denominator positive.
    fn solve_rational(&self, rhs: &[i64]) -> (Vec<i128>, i128) {
        let n = self.rank;
        let at: Vec<Vec<i128>> = (0..n)
            .map(|r| (0..n).map(|c| self.a[c][r] as i128).collect())
            .collect();
        let den = det_laplace(&at);
        assert!(den > 0, "Cartan determinants are positive");
        let nums = (0..n)
            .map(|i| {
                let mut m = at.clone();
                for (r, row) in m.iter_mut().enumerate() {
                    row[i] = rhs[r] as i128;
                }
                det_laplace(&m)
            })
            .collect();
        (nums, den)
    }

    /// Simple-root coordinates of a weight-lattice vector, if it lies in the
    /// root lattice.
    pub fn root_coords(&self, diff: &[i64]) -> Option<Vec<i64>> {
        let (nums, den) = self.solve_rational(diff);
        nums.iter()
            .map(|&x| (x % den == 0).then(|| (x / den) as i64))
            .collect()
    }

    /// All dominant ν ≤ λ, each with the coordinates of λ − ν in the simple
    /// roots. Scans the box 0 ≤ d ≤ ⌊A⁻ᵀλ⌋, which bounds the coordinates
    /// because the inverse Cartan matrix is entrywise non-negative.
    pub fn dominant_below(&self, lambda: &[i64]) -> Vec<(Vec<i64>, Vec<i64>)> {
        assert!(lambda.iter().all(|&x| x >= 0));
        let (nums, den) = self.solve_rational(lambda);
        let bound: Vec<i64> = nums.iter().map(|&x| x.div_euclid(den).max(0) as i64).collect();
        let mut out = Vec::new();
        let mut d = vec![0i64; self.rank];
        loop {
            let combo = self.weight_of_combo(&d);
            let w: Vec<i64> = lambda.iter().zip(&combo).map(|(&l, &c)| l - c).collect();
            if w.iter().all(|&x| x >= 0) {
                out.push((w, d.clone()));
            }
            let mut k = 0;
            loop {
                if k == self.rank {
                    return out;
                }
                d[k] += 1;
                if d[k] <= bound[k] {
                    break;
                }
                d[k] = 0;
                k += 1;
            }
        }
    }

    /// Adjacency in the dominance order on dominant weights: λ covers μ
    /// (given as its difference coordinates `d`) iff d ≠ 0 and no dominant ν
    /// lies strictly between — that is, no entry of `below` has difference
    /// coordinates e with 0 ≠ e ≠ d and e ≤ d componentwise.
    pub fn is_adjacent(below: &[(Vec<i64>, Vec<i64>)], d: &[i64]) -> bool {
        if d.iter().all(|&x| x == 0) {
            return false;
        }
        !below.iter().any(|(_, e)| {
            e.iter().any(|&x| x != 0)
                && e != d
                && e.iter().zip(d).all(|(&a, &b)| a <= b)
        })
    }
}

/// All coefficient vectors of the given length with entries in 0..=max.
pub fn coeff_box(rank: usize, max: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut c = vec![0i64; rank];
    loop {
        out.push(c.clone());
        let mut k = 0;
        loop {
            if k == rank {
                return out;
            }
            c[k] += 1;
            if c[k] <= max {
                break;
            }
            c[k] = 0;
            k += 1;
        }
    }
}

/// Every minimal degeneration below a dominant weight with coefficients ≤ 2,
/// over the six classifier types.
pub fn all_degenerations() -> Vec<MinimalDegeneration> {
    let mut out = Vec::new();
    for label in CLASSIFIER_TYPES {
        let datum = build_root_datum(label).unwrap();
        for coeffs in coeff_box(datum.rank(), 2) {
            let lambda = datum.weight(&coeffs).unwrap();
            out.extend(enumerate_minimal_degenerations_below(&lambda).unwrap());
        }
    }
    out
}

pub fn identity(n: usize) -> Vec<Vec<i64>> {
    (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect()
}

pub fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let (m, k, n) = (a.len(), b.len(), b[0].len());
    (0..m)
        .map(|i| {
            (0..n)
                .map(|j| (0..k).map(|t| a[i][t] * b[t][j]).sum())
                .collect()
        })
        .collect()
}

/// A random determinant-±1 matrix, built from elementary operations on the
/// identity. Coefficients stay in {−1, 1} and the op count is small, so
/// entries stay far from overflow.
pub fn random_unimodular<R: Rng>(rng: &mut R, n: usize) -> Vec<Vec<i64>> {
    let mut m = identity(n);
    if n == 1 {
        if rng.gen_bool(0.5) {
            m[0][0] = -1;
        }
        return m;
    }
    for _ in 0..n + 3 {
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n - 1);
        if j >= i {
            j += 1;
        }
        match rng.gen_range(0..4) {
            0 => m.swap(i, j),
            1 => m[i].iter_mut().for_each(|x| *x = -*x),
            _ => {
                let c: i64 = if rng.gen_bool(0.5) { 1 } else { -1 };
                for t in 0..n {
                    m[j][t] += c * m[i][t];
                }
            }
        }
    }
    m
}

pub fn random_matrix<R: Rng>(rng: &mut R, rows: usize, cols: usize) -> Vec<Vec<i64>> {
    (0..rows)
        .map(|_| (0..cols).map(|_| rng.gen_range(-9..=9)).collect())
        .collect()
}
