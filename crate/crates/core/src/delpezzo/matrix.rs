//! Integer matrices acting on cohomology, for the `f_* f^* = d·Id` check.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::series::Rational;

use super::PicardClass;

/// Row-major integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Mismatch("ragged matrix rows".into()));
        }
        Ok(Self {
            rows: rows.len(),
            cols,
            data: rows.concat(),
        })
    }

    pub fn scalar(n: usize, c: i64) -> Self {
        let mut data = vec![0; n * n];
        for i in 0..n {
            data[i * n + i] = c;
        }
        Self {
            rows: n,
            cols: n,
            data,
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, 1)
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.cols + j]
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Mismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut data = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc: i64 = 0;
                for k in 0..self.cols {
                    acc = self
                        .get(i, k)
                        .checked_mul(other.get(k, j))
                        .and_then(|v| acc.checked_add(v))
                        .ok_or_else(|| {
                            Error::Domain("integer overflow in matrix product".into())
                        })?;
                }
                data.push(acc);
            }
        }
        Ok(Self {
            rows: self.rows,
            cols: other.cols,
            data,
        })
    }

    /// Applies the matrix to the coordinates `(a, b_1..b_r)` of a class.
    pub fn apply(&self, class: &PicardClass) -> Result<PicardClass> {
        let v = class.coordinates();
        if self.cols != v.len() || self.rows != v.len() {
            return Err(Error::Mismatch(format!(
                "{}x{} matrix on a rank-{} lattice",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        let out: Vec<i64> = (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j) * v[j]).sum())
            .collect();
        Ok(PicardClass::new(out[0], out[1..].to_vec()))
    }

    fn to_rational(&self) -> Vec<Vec<Rational>> {
        (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| Rational::from_integer(BigInt::from(self.get(i, j))))
                    .collect()
            })
            .collect()
    }
}

fn rational_product(a: &[Vec<Rational>], b: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).fold(Rational::zero(), |acc, k| acc + &a[i][k] * &b[k][j]))
                .collect()
        })
        .collect()
}

fn is_rational_identity(m: &[Vec<Rational>]) -> bool {
    m.iter().enumerate().all(|(i, row)| {
        row.iter()
            .enumerate()
            .all(|(j, v)| if i == j { v.is_one() } else { v.is_zero() })
    })
}

/// Returns whether `pushforward · pullback = d·Id`. When it holds,
/// `(1/d)·pushforward` must be a two-sided inverse of `pullback` over `Q`;
/// that is re-checked and a failure is reported as an internal error.
pub fn pullback_pushforward_check(
    pullback: &IntMatrix,
    pushforward: &IntMatrix,
    d: i64,
) -> Result<bool> {
    let (n, m) = pullback.shape();
    if n != m || pushforward.shape() != (n, n) {
        return Err(Error::Mismatch(format!(
            "pullback {:?} and pushforward {:?} must be square of equal size",
            pullback.shape(),
            pushforward.shape()
        )));
    }
    if d < 1 {
        return Err(Error::Domain(format!("degree must be positive, got {d}")));
    }
    if pushforward.mul(pullback)? != IntMatrix::scalar(n, d) {
        return Ok(false);
    }
    let inv_d = Rational::new(BigInt::one(), BigInt::from(d));
    let scaled: Vec<Vec<Rational>> = pushforward
        .to_rational()
        .into_iter()
        .map(|row| row.into_iter().map(|v| v * &inv_d).collect())
        .collect();
    let pull = pullback.to_rational();
    if !is_rational_identity(&rational_product(&scaled, &pull))
        || !is_rational_identity(&rational_product(&pull, &scaled))
    {
        return Err(Error::Internal(
            "f_* f^* = d·Id but (1/d) f_* is not a two-sided inverse".into(),
        ));
    }
    Ok(true)
}
