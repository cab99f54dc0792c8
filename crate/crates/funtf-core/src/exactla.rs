//! Linear algebra in two regimes: exact rank/kernel over the rationals, and
//! numeric rank over floats via singular values with explicit gap
//! diagnostics.
//!
//! The exact routines clear denominators row by row and then run fraction-free
//! (Bareiss) elimination over big integers, so intermediate growth stays
//! polynomial. The numeric routine reports the singular-value gap at the rank
//! cut and refuses to pretend certainty when the gap is small.

use nalgebra::DMatrix;
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Relative singular-value tolerance used by default for numeric rank.
pub const DEFAULT_RANK_TOL: f64 = 1e-8;

/// Minimum singular-value gap ratio for a numeric rank to count as certain.
pub const GAP_CONFIDENCE: f64 = 1e6;

/// Dense matrix of arbitrary-precision rationals, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigRational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn from_i64(rows: usize, cols: usize, entries: &[i64]) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count mismatch");
        Self {
            rows,
            cols,
            data: entries
                .iter()
                .map(|&v| BigRational::from_integer(BigInt::from(v)))
                .collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigRational) {
        self.data[i * self.cols + j] = v;
    }

    /// Matrix-vector product.
    pub fn mul_vec(&self, v: &[BigRational]) -> Vec<BigRational> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = BigRational::zero();
                for j in 0..self.cols {
                    let e = self.get(i, j);
                    if !e.is_zero() {
                        acc += e * &v[j];
                    }
                }
                acc
            })
            .collect()
    }

    /// Clears denominators row by row, returning an integer matrix with the
    /// same row space (hence the same rank and kernel).
    fn to_integer_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|i| {
                let mut lcm = BigInt::one();
                for j in 0..self.cols {
                    let d = self.get(i, j).denom();
                    lcm = num::integer::lcm(lcm, d.clone());
                }
                (0..self.cols)
                    .map(|j| {
                        let e = self.get(i, j);
                        e.numer() * (&lcm / e.denom())
                    })
                    .collect()
            })
            .collect()
    }
}

/// How a rank was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RankMode {
    Exact,
    Numeric,
}

/// Rank of a matrix together with the evidence behind it.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RankResult {
    pub rank: usize,
    pub mode: RankMode,
    /// Descending singular values (numeric mode only).
    pub singular_values: Option<Vec<f64>>,
    /// sigma_rank / sigma_rank+1; infinite when the matrix has full rank.
    pub gap_ratio: Option<f64>,
    /// Numeric rank whose gap ratio falls below [`GAP_CONFIDENCE`].
    pub uncertain: bool,
}

/// Exact rank by fraction-free Gaussian elimination with pivoting.
pub fn rank_exact(m: &RationalMatrix) -> RankResult {
    let mut a = m.to_integer_rows();
    let rank = bareiss_rank(&mut a, m.cols);
    RankResult {
        rank,
        mode: RankMode::Exact,
        singular_values: None,
        gap_ratio: None,
        uncertain: false,
    }
}

/// Bareiss fraction-free elimination over the integers; returns the rank.
/// Pivots on the smallest nonzero magnitude in the column to limit growth.
fn bareiss_rank(a: &mut [Vec<BigInt>], cols: usize) -> usize {
    let rows = a.len();
    let mut prev_pivot = BigInt::one();
    let mut rank = 0;
    let mut col = 0;
    while rank < rows && col < cols {
        let pivot_row = (rank..rows)
            .filter(|&i| !a[i][col].is_zero())
            .min_by_key(|&i| a[i][col].magnitude().clone());
        let Some(p) = pivot_row else {
            col += 1;
            continue;
        };
        a.swap(rank, p);
        for i in rank + 1..rows {
            if a[i][col].is_zero() && a[rank][col].is_one() {
                // still must scale the remainder of the row below
            }
            for j in col + 1..cols {
                let num = &a[rank][col] * &a[i][j] - &a[i][col] * &a[rank][j];
                a[i][j] = num / &prev_pivot;
            }
            a[i][col] = BigInt::zero();
        }
        prev_pivot = a[rank][col].clone();
        rank += 1;
        col += 1;
    }
    rank
}

/// Basis of the right kernel, computed exactly. The returned vectors are
/// linearly independent and satisfy `m * v = 0`; their count is
/// `cols - rank`.
pub fn kernel_basis_exact(m: &RationalMatrix) -> Vec<Vec<BigRational>> {
    let rows = m.rows;
    let cols = m.cols;
    // Reduced row echelon form over the rationals.
    let mut a: Vec<Vec<BigRational>> = (0..rows)
        .map(|i| (0..cols).map(|j| m.get(i, j).clone()).collect())
        .collect();
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].recip();
        for j in c..cols {
            let v = &a[r][j] * &inv;
            a[r][j] = v;
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in c..cols {
                    let v = &a[i][j] - &f * &a[r][j];
                    a[i][j] = v;
                }
            }
        }
        pivot_cols.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    let free_cols: Vec<usize> = (0..cols).filter(|c| !pivot_cols.contains(c)).collect();
    free_cols
        .iter()
        .map(|&fc| {
            let mut v = vec![BigRational::zero(); cols];
            v[fc] = BigRational::one();
            for (ri, &pc) in pivot_cols.iter().enumerate() {
                v[pc] = -a[ri][fc].clone();
            }
            v
        })
        .collect()
}

/// Numeric rank from singular values: count of sigma above
/// `relative_tolerance * sigma_max`, with the gap ratio at the cut.
pub fn rank_numeric(m: &DMatrix<f64>, relative_tolerance: f64) -> Result<RankResult> {
    if m.iter().any(|v| !v.is_finite()) {
        return Err(Error::OutOfRange("matrix has non-finite entries".into()));
    }
    if m.nrows() == 0 || m.ncols() == 0 {
        return Ok(RankResult {
            rank: 0,
            mode: RankMode::Numeric,
            singular_values: Some(Vec::new()),
            gap_ratio: Some(f64::INFINITY),
            uncertain: false,
        });
    }
    let svd = m.clone().svd(false, false);
    let mut sv: Vec<f64> = svd.singular_values.iter().copied().collect();
    sv.sort_by(|a, b| b.partial_cmp(a).unwrap());
    let sigma_max = sv[0];
    let cut = relative_tolerance * sigma_max;
    let rank = sv.iter().take_while(|&&s| s > cut).count();
    let gap_ratio = if rank == 0 || rank == sv.len() {
        f64::INFINITY
    } else if sv[rank] == 0.0 {
        f64::INFINITY
    } else {
        sv[rank - 1] / sv[rank]
    };
    Ok(RankResult {
        rank,
        mode: RankMode::Numeric,
        singular_values: Some(sv),
        gap_ratio: Some(gap_ratio),
        uncertain: gap_ratio < GAP_CONFIDENCE,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn zero_matrix_has_rank_zero() {
        let m = RationalMatrix::zeros(4, 6);
        assert_eq!(rank_exact(&m).rank, 0);
        assert_eq!(kernel_basis_exact(&m).len(), 6);
    }

    #[test]
    fn identity_rank_and_empty_kernel() {
        let m = RationalMatrix::from_fn(5, 5, |i, j| if i == j { rat(1) } else { rat(0) });
        assert_eq!(rank_exact(&m).rank, 5);
        assert!(kernel_basis_exact(&m).is_empty());
    }

    #[test]
    fn kernel_of_k22_incidence_is_alternating_cycle() {
        // K_{2,2} incidence: vertices r0,r1,c0,c1; edges (0,0),(0,1),(1,0),(1,1).
        let m = RationalMatrix::from_i64(
            4,
            4,
            &[
                1, 1, 0, 0, //
                0, 0, 1, 1, //
                1, 0, 1, 0, //
                0, 1, 0, 1,
            ],
        );
        assert_eq!(rank_exact(&m).rank, 3);
        let ker = kernel_basis_exact(&m);
        assert_eq!(ker.len(), 1);
        let v = &ker[0];
        // Alternating up to scale: v = t * (1, -1, -1, 1).
        assert_eq!(v[0], -v[1].clone());
        assert_eq!(v[0], -v[2].clone());
        assert_eq!(v[0], v[3].clone());
        assert!(!v[0].is_zero());
    }

    #[test]
    fn kernel_vectors_annihilate_and_are_independent() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..25 {
            let rows = rng.gen_range(1..=8);
            let cols = rng.gen_range(1..=10);
            let m = RationalMatrix::from_fn(rows, cols, |_, _| rat(rng.gen_range(-5..=5)));
            let rank = rank_exact(&m).rank;
            let ker = kernel_basis_exact(&m);
            assert_eq!(ker.len(), cols - rank);
            for v in &ker {
                assert!(m.mul_vec(v).iter().all(|x| x.is_zero()));
            }
            if !ker.is_empty() {
                let stacked =
                    RationalMatrix::from_fn(ker.len(), cols, |i, j| ker[i][j].clone());
                assert_eq!(rank_exact(&stacked).rank, ker.len());
            }
        }
    }

    #[test]
    fn numeric_rank_identity() {
        let m = DMatrix::<f64>::identity(5, 5);
        let r = rank_numeric(&m, DEFAULT_RANK_TOL).unwrap();
        assert_eq!(r.rank, 5);
        assert_eq!(r.gap_ratio, Some(f64::INFINITY));
        assert!(!r.uncertain);
    }

    #[test]
    fn numeric_rank_noisy_outer_product() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let u = DMatrix::<f64>::from_fn(6, 1, |_, _| rng.gen_range(-1.0..1.0));
        let v = DMatrix::<f64>::from_fn(1, 7, |_, _| rng.gen_range(-1.0..1.0));
        let mut m = &u * &v;
        for e in m.iter_mut() {
            *e += rng.gen_range(-1e-14..1e-14);
        }
        let r = rank_numeric(&m, DEFAULT_RANK_TOL).unwrap();
        assert_eq!(r.rank, 1);
        assert!(r.gap_ratio.unwrap() > GAP_CONFIDENCE);
        assert!(!r.uncertain);
    }

    #[test]
    fn numeric_rejects_non_finite() {
        let mut m = DMatrix::<f64>::zeros(2, 2);
        m[(0, 0)] = f64::NAN;
        assert!(rank_numeric(&m, DEFAULT_RANK_TOL).is_err());
    }

    #[test]
    fn exact_and_certain_numeric_agree_on_random_integer_matrices() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for _ in 0..200 {
            let rows = rng.gen_range(1..=12);
            let cols = rng.gen_range(1..=20);
            let ints: Vec<i64> = (0..rows * cols).map(|_| rng.gen_range(-9..=9)).collect();
            let exact = rank_exact(&RationalMatrix::from_i64(rows, cols, &ints));
            let floats = DMatrix::<f64>::from_fn(rows, cols, |i, j| ints[i * cols + j] as f64);
            let numeric = rank_numeric(&floats, DEFAULT_RANK_TOL).unwrap();
            if !numeric.uncertain {
                assert_eq!(exact.rank, numeric.rank);
            }
        }
    }
}
