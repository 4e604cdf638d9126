//! Dense matrices over arbitrary-precision integers.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// A dense `rows x cols` matrix with `BigInt` entries, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        IntMatrix { rows, cols, data }
    }

    /// Convenience constructor from machine integers, mostly for tests.
    pub fn from_rows(rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        assert!(rows.iter().all(|row| row.len() == c));
        Self::from_fn(r, c, |i, j| BigInt::from(rows[i][j]))
    }

    pub fn diagonal(entries: &[BigInt]) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, e) in entries.iter().enumerate() {
            m[(i, i)] = e.clone();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn col(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn row(&self, i: usize) -> Vec<BigInt> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn transpose(&self) -> IntMatrix {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.rows, other.rows, "hstack: row mismatch");
        Self::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self[(i, j)].clone()
            } else {
                other[(i, j - self.cols)].clone()
            }
        })
    }

    /// Vertical concatenation.
    pub fn vstack(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.cols, "vstack: col mismatch");
        Self::from_fn(self.rows + other.rows, self.cols, |i, j| {
            if i < self.rows {
                self[(i, j)].clone()
            } else {
                other[(i - self.rows, j)].clone()
            }
        })
    }

    pub fn from_cols(cols: &[Vec<BigInt>], rows: usize) -> IntMatrix {
        for c in cols {
            assert_eq!(c.len(), rows);
        }
        Self::from_fn(rows, cols.len(), |i, j| cols[j][i].clone())
    }

    pub fn submatrix(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> IntMatrix {
        Self::from_fn(rows, cols, |i, j| self[(r0 + i, c0 + j)].clone())
    }

    pub fn block_diag(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
        let mut m = Self::zeros(a.rows + b.rows, a.cols + b.cols);
        for i in 0..a.rows {
            for j in 0..a.cols {
                m[(i, j)] = a[(i, j)].clone();
            }
        }
        for i in 0..b.rows {
            for j in 0..b.cols {
                m[(a.rows + i, a.cols + j)] = b[(i, j)].clone();
            }
        }
        m
    }

    pub fn apply(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.cols, "apply: dimension mismatch");
        let mut out = vec![BigInt::zero(); self.rows];
        for i in 0..self.rows {
            let mut acc = BigInt::zero();
            for j in 0..self.cols {
                let e = &self[(i, j)];
                if !e.is_zero() && !v[j].is_zero() {
                    acc += e * &v[j];
                }
            }
            out[i] = acc;
        }
        out
    }

    pub fn pow(&self, e: usize) -> IntMatrix {
        assert!(self.is_square());
        let mut acc = IntMatrix::identity(self.rows);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> BigInt {
        assert!(self.is_square(), "det: matrix not square");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut m = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[(k, k)].is_zero() {
                // pivot search
                let mut found = None;
                for i in k + 1..n {
                    if !m[(i, k)].is_zero() {
                        found = Some(i);
                        break;
                    }
                }
                match found {
                    Some(i) => {
                        for j in 0..n {
                            let a = m[(k, j)].clone();
                            let b = m[(i, j)].clone();
                            m[(k, j)] = b;
                            m[(i, j)] = a;
                        }
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &m[(i, j)] * &m[(k, k)] - &m[(i, k)] * &m[(k, j)];
                    m[(i, j)] = num / &prev;
                }
                m[(i, k)] = BigInt::zero();
            }
            prev = m[(k, k)].clone();
        }
        sign * m[(n - 1, n - 1)].clone()
    }

    pub fn scaled(&self, c: &BigInt) -> IntMatrix {
        Self::from_fn(self.rows, self.cols, |i, j| c * &self[(i, j)])
    }

    pub fn max_abs(&self) -> BigInt {
        self.data
            .iter()
            .map(|x| x.abs())
            .max()
            .unwrap_or_else(BigInt::zero)
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;
    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows, "mul: dimension mismatch");
        let mut out = IntMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        let prod = a * b;
                        out[(i, j)] += prod;
                    }
                }
            }
        }
        out
    }
}

impl Add for &IntMatrix {
    type Output = IntMatrix;
    fn add(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        IntMatrix::from_fn(self.rows, self.cols, |i, j| &self[(i, j)] + &rhs[(i, j)])
    }
}

impl Sub for &IntMatrix {
    type Output = IntMatrix;
    fn sub(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        IntMatrix::from_fn(self.rows, self.cols, |i, j| &self[(i, j)] - &rhs[(i, j)])
    }
}

impl Neg for &IntMatrix {
    type Output = IntMatrix;
    fn neg(self) -> IntMatrix {
        IntMatrix::from_fn(self.rows, self.cols, |i, j| -&self[(i, j)])
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  [")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self[(i, j)])?;
            }
            writeln!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self[(i, j)])?;
            }
            if i + 1 < self.rows {
                writeln!(f)?;
            }
        }
        Ok(())
    }
}

/// Vector helpers used throughout the workspace.
pub fn vec_add(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vec_sub(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vec_scale(c: &BigInt, a: &[BigInt]) -> Vec<BigInt> {
    a.iter().map(|x| c * x).collect()
}

pub fn vec_is_zero(a: &[BigInt]) -> bool {
    a.iter().all(|x| x.is_zero())
}

pub fn vec_from_i64(a: &[i64]) -> Vec<BigInt> {
    a.iter().map(|&x| BigInt::from(x)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mul_identity() {
        let a = IntMatrix::from_rows(&[&[1, 2], &[3, 4]]);
        let i = IntMatrix::identity(2);
        assert_eq!(&a * &i, a);
    }

    #[test]
    fn det_small() {
        let a = IntMatrix::from_rows(&[&[2, 1], &[0, 2]]);
        assert_eq!(a.det(), BigInt::from(4));
        let b = IntMatrix::from_rows(&[&[0, 1], &[1, 0]]);
        assert_eq!(b.det(), BigInt::from(-1));
        let c = IntMatrix::from_rows(&[&[-6, 111, -36, 6], &[5, -672, 210, 74], &[0, -255, 81, 24], &[-7, 255, -81, -10]]);
        // 1*3*21*0 pattern matrix from a known SNF example has det 0
        assert_eq!(c.det(), BigInt::zero());
    }
}
