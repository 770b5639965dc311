use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::rational::Rational;
use crate::error::{Error, Result};

/// Dense matrix of exact rationals.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn scalar(n: usize, c: Rational) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = c.clone();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Ok(RatMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| Rational::from_integer(v.into())).collect())
                .collect(),
        )
        .expect("rectangular literal")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> RatMatrix {
        let mut out = RatMatrix::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                out[(i, j)] = self[(r0 + i, c0 + j)].clone();
            }
        }
        out
    }

    /// `[[a, b], [c, d]]` assembled from four blocks.
    pub fn from_blocks(a: &RatMatrix, b: &RatMatrix, c: &RatMatrix, d: &RatMatrix) -> RatMatrix {
        let (n, k) = (a.rows, a.cols);
        let mut out = RatMatrix::zeros(n + c.rows, k + b.cols);
        for i in 0..out.rows {
            for j in 0..out.cols {
                out[(i, j)] = match (i < n, j < k) {
                    (true, true) => a[(i, j)].clone(),
                    (true, false) => b[(i, j - k)].clone(),
                    (false, true) => c[(i - n, j)].clone(),
                    (false, false) => d[(i - n, j - k)].clone(),
                };
            }
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> RatMatrix {
        RatMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|v| v * c).collect() }
    }

    pub fn det(&self) -> Rational {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        let mut a = self.clone();
        let mut det = Rational::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !a[(r, col)].is_zero()) else {
                return Rational::zero();
            };
            if p != col {
                a.swap_rows(p, col);
                det = -det;
            }
            let pivot = a[(col, col)].clone();
            det *= &pivot;
            for r in col + 1..n {
                if a[(r, col)].is_zero() {
                    continue;
                }
                let f = &a[(r, col)] / &pivot;
                for c in col..n {
                    let v = &f * &a[(col, c)];
                    a[(r, c)] -= v;
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Result<RatMatrix> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = RatMatrix::identity(n);
        for col in 0..n {
            let p = (col..n)
                .find(|&r| !a[(r, col)].is_zero())
                .ok_or_else(|| Error::DivisionByZero("singular matrix".into()))?;
            a.swap_rows(p, col);
            inv.swap_rows(p, col);
            let pivot = a[(col, col)].recip();
            for c in 0..n {
                a[(col, c)] *= &pivot;
                inv[(col, c)] *= &pivot;
            }
            for r in 0..n {
                if r == col || a[(r, col)].is_zero() {
                    continue;
                }
                let f = a[(r, col)].clone();
                for c in 0..n {
                    let va = &f * &a[(col, c)];
                    a[(r, c)] -= va;
                    let vi = &f * &inv[(col, c)];
                    inv[(r, c)] -= vi;
                }
            }
        }
        Ok(inv)
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(i * self.cols + c, j * self.cols + c);
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), &Rational)> {
        let cols = self.cols;
        self.data.iter().enumerate().map(move |(k, v)| ((k / cols, k % cols), v))
    }
}

impl std::ops::Index<(usize, usize)> for RatMatrix {
    type Output = Rational;

    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RatMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.data[i * self.cols + j]
    }
}

impl<'a> Mul<&'a RatMatrix> for &'a RatMatrix {
    type Output = RatMatrix;

    fn mul(self, rhs: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        let mut out = RatMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    out[(i, j)] += a * &rhs[(k, j)];
                }
            }
        }
        out
    }
}

impl<'a> Add<&'a RatMatrix> for &'a RatMatrix {
    type Output = RatMatrix;

    fn add(self, rhs: &RatMatrix) -> RatMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl<'a> Sub<&'a RatMatrix> for &'a RatMatrix {
    type Output = RatMatrix;

    fn sub(self, rhs: &RatMatrix) -> RatMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &RatMatrix {
    type Output = RatMatrix;

    fn neg(self) -> RatMatrix {
        RatMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| -a).collect() }
    }
}

impl fmt::Display for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.rows {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str("[")?;
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{}", self[(i, j)])?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{frac, int};

    #[test]
    fn det_and_inverse() {
        let a = RatMatrix::from_i64(&[&[1, 2], &[3, 4]]);
        assert_eq!(a.det(), int(-2));
        let inv = a.inverse().unwrap();
        assert_eq!(&a * &inv, RatMatrix::identity(2));
        assert_eq!(inv[(0, 0)], int(-2));
        assert_eq!(inv[(1, 0)], frac(3, 2));
        let s = RatMatrix::from_i64(&[&[1, 2], &[2, 4]]);
        assert_eq!(s.det(), int(0));
        assert!(s.inverse().is_err());
        let p = RatMatrix::from_i64(&[&[0, 1, 0], &[0, 0, 1], &[1, 0, 0]]);
        assert_eq!(p.det(), int(1));
    }

    #[test]
    fn blocks() {
        let i = RatMatrix::identity(1);
        let z = RatMatrix::zeros(1, 1);
        let g = RatMatrix::from_blocks(&z, &i, &(-&i), &z);
        assert_eq!(g, RatMatrix::from_i64(&[&[0, 1], &[-1, 0]]));
        assert_eq!(g.block(1, 0, 1, 1), -&i);
        assert_eq!(g.det(), int(1));
    }
}
