//! Dense integer matrices: characteristic polynomial, determinant, permanent.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::poly::QPoly;
use crate::error::{Error, Result};

/// Ryser's formula is exponential in the dimension; this is the default cap.
pub const DEFAULT_PERMANENT_BOUND: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(IntMatrix { rows, cols, entries })
    }

    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        let entries = rows.iter().flat_map(|r| r.iter().cloned().map(Into::into)).collect();
        Self::new(rows.len(), cols, entries)
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, entries: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        self.entries.chunks(self.cols.max(1)).take(self.rows).map(<[BigInt]>::to_vec).collect()
    }

    fn require_square(&self) -> Result<usize> {
        if self.rows != self.cols {
            return Err(Error::NonSquare { rows: self.rows, cols: self.cols });
        }
        Ok(self.rows)
    }

    /// `det(M - qI)` via the division-free Berkowitz algorithm.
    pub fn charpoly(&self) -> Result<QPoly> {
        let n = self.require_square()?;
        // v holds the coefficients of det(xI - A_r), highest power first.
        let mut v = vec![BigInt::one()];
        for r in 0..n {
            let mut t = Vec::with_capacity(r + 2);
            t.push(BigInt::one());
            t.push(-self.get(r, r));
            let mut s: Vec<BigInt> = (0..r).map(|i| self.get(i, r).clone()).collect();
            for _ in 0..r {
                let dot: BigInt = (0..r).map(|j| self.get(r, j) * &s[j]).sum();
                t.push(-dot);
                s = (0..r).map(|i| (0..r).map(|j| self.get(i, j) * &s[j]).sum()).collect();
            }
            v = (0..r + 2)
                .map(|i| (0..=i.min(r)).map(|j| &t[i - j] * &v[j]).sum())
                .collect();
        }
        // coefficient of q^e in det(M - qI) is (-1)^n * v[n - e]
        let sign = if n % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        let coeffs = (0..=n).map(|e| &sign * &v[n - e]).collect();
        Ok(QPoly::new(0, coeffs))
    }

    /// Fraction-free (Bareiss) determinant.
    pub fn det(&self) -> Result<BigInt> {
        let n = self.require_square()?;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut a = self.to_rows();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                    return Ok(BigInt::zero());
                };
                a.swap(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = v / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        Ok(sign * &a[n - 1][n - 1])
    }

    pub fn permanent(&self) -> Result<BigInt> {
        self.permanent_bounded(DEFAULT_PERMANENT_BOUND)
    }

    /// Ryser inclusion-exclusion over column subsets, visited in Gray-code
    /// order so each step adds or removes a single column from the row sums.
    pub fn permanent_bounded(&self, bound: usize) -> Result<BigInt> {
        let n = self.require_square()?;
        if n > bound {
            return Err(Error::DimensionTooLarge { dim: n, bound });
        }
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut row_sums = vec![BigInt::zero(); n];
        let mut in_set = vec![false; n];
        let mut total = BigInt::zero();
        let mut size = 0usize;
        for g in 1u64..(1u64 << n) {
            let col = g.trailing_zeros() as usize;
            let adding = !in_set[col];
            in_set[col] = adding;
            for (i, s) in row_sums.iter_mut().enumerate() {
                if adding {
                    *s += self.get(i, col);
                } else {
                    *s -= self.get(i, col);
                }
            }
            if adding {
                size += 1;
            } else {
                size -= 1;
            }
            let prod: BigInt = row_sums.iter().product();
            if (n - size).is_multiple_of(2) {
                total += prod;
            } else {
                total -= prod;
            }
        }
        Ok(total)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn is_nonnegative(&self) -> bool {
        self.entries.iter().all(|e| !e.is_negative())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use itertools::Itertools;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    /// Sum over all permutations; the reference the Gray-code Ryser must match.
    fn naive_permanent(a: &IntMatrix) -> BigInt {
        let n = a.rows();
        (0..n).permutations(n).map(|p| p.iter().enumerate().map(|(i, &j)| a.get(i, j).clone()).product::<BigInt>()).sum()
    }

    #[test]
    fn charpoly_small_cases() {
        assert_eq!(IntMatrix::identity(2).charpoly().unwrap(), QPoly::from_i64s(0, &[1, -2, 1]));
        assert_eq!(IntMatrix::zeros(3, 3).charpoly().unwrap(), QPoly::monomial(-1, 3));
        assert_eq!(IntMatrix::zeros(0, 0).charpoly().unwrap(), QPoly::one());
        assert_eq!(m(&[&[2, 1], &[1, 2]]).charpoly().unwrap(), QPoly::from_i64s(0, &[3, -4, 1]));
    }

    #[test]
    fn charpoly_of_sylvester_matrix_n3() {
        let s = m(&[
            &[1, 1, 1, 0, 0],
            &[0, 1, 1, 1, 0],
            &[0, 0, 1, 1, 1],
            &[1, 1, 1, 1, 0],
            &[0, 1, 1, 1, 1],
        ]);
        assert_eq!(s.charpoly().unwrap(), QPoly::from_i64s(0, &[1, -3, 6, -7, 5, -1]));
        assert_eq!(s.det().unwrap(), BigInt::one());
    }

    #[test]
    fn non_square_rejected() {
        let a = IntMatrix::zeros(2, 3);
        assert_eq!(a.charpoly(), Err(Error::NonSquare { rows: 2, cols: 3 }));
        assert_eq!(a.permanent(), Err(Error::NonSquare { rows: 2, cols: 3 }));
        assert!(a.det().is_err());
    }

    #[test]
    fn permanent_examples() {
        let v5 = m(&[
            &[1, 1, 1, 0, 0],
            &[1, 1, 1, 1, 0],
            &[1, 1, 1, 1, 1],
            &[1, 1, 1, 1, 1],
            &[0, 1, 1, 1, 1],
        ]);
        assert_eq!(v5.permanent().unwrap(), BigInt::from(46));
        assert_eq!(IntMatrix::identity(6).permanent().unwrap(), BigInt::one());
        assert_eq!(m(&[&[1, 1, 1], &[1, 1, 1], &[1, 1, 1]]).permanent().unwrap(), BigInt::from(6));
        assert_eq!(IntMatrix::zeros(0, 0).permanent().unwrap(), BigInt::one());
    }

    #[test]
    fn permanent_bound() {
        assert_eq!(
            IntMatrix::identity(4).permanent_bounded(3),
            Err(Error::DimensionTooLarge { dim: 4, bound: 3 })
        );
    }

    #[test]
    fn ryser_matches_naive_expansion() {
        let a = m(&[&[3, -1, 2, 0], &[1, 4, -2, 5], &[0, 2, 7, 1], &[-3, 1, 1, 2]]);
        assert_eq!(a.permanent().unwrap(), naive_permanent(&a));
    }

    #[test]
    fn bareiss_handles_pivoting() {
        let a = m(&[&[0, 2, 1], &[1, 0, 0], &[3, 1, 4]]);
        // expand along second row: -1 * det([[2,1],[1,4]]) = -7
        assert_eq!(a.det().unwrap(), BigInt::from(-7));
        assert_eq!(m(&[&[1, 2], &[2, 4]]).det().unwrap(), BigInt::zero());
    }
}
