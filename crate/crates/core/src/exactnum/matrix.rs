use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::rational::{fmt_rational, Rational};
use super::serde_repr::RationalStr;
use super::vector::QVector;
use crate::error::{Error, Result};

/// Dense rectangular matrix of exact rationals, row-major.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "MatrixRepr", into = "MatrixRepr")]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

#[derive(Serialize, Deserialize)]
struct MatrixRepr {
    rows: Vec<Vec<RationalStr>>,
}

impl TryFrom<MatrixRepr> for QMatrix {
    type Error = Error;
    fn try_from(r: MatrixRepr) -> Result<Self> {
        QMatrix::from_rows(
            r.rows
                .into_iter()
                .map(|row| row.into_iter().map(|x| x.0).collect())
                .collect(),
        )
    }
}

impl From<QMatrix> for MatrixRepr {
    fn from(m: QMatrix) -> Self {
        MatrixRepr {
            rows: (0..m.rows)
                .map(|i| m.row_slice(i).iter().cloned().map(RationalStr).collect())
                .collect(),
        }
    }
}

impl QMatrix {
    /// Checked constructor: at least one row and one column, all rows of
    /// equal length.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let m = rows.len();
        let n = rows.first().map_or(0, Vec::len);
        if m == 0 || n == 0 {
            return Err(Error::InvalidInput("matrix must be at least 1x1".into()));
        }
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: bad.len(),
            });
        }
        Ok(QMatrix {
            rows: m,
            cols: n,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Matrix whose rows are the given vectors.
    pub fn from_row_vectors(rows: &[QVector]) -> Result<Self> {
        Self::from_rows(rows.iter().map(|v| v.entries().to_vec()).collect())
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[QVector]) -> Result<Self> {
        Ok(Self::from_row_vectors(cols)?.transpose())
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Rational::from_integer(x.into())).collect())
                .collect(),
        )
        .expect("rectangular literal")
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Rational::one();
        }
        m
    }

    pub fn diagonal(d: &[Rational]) -> Self {
        let n = d.len();
        let mut m = Self::zeros(n, n);
        for (i, x) in d.iter().enumerate() {
            m.data[i * n + i] = x.clone();
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn require_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NonSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: Rational) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row_slice(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row(&self, i: usize) -> QVector {
        QVector::from(self.row_slice(i).to_vec())
    }

    pub fn column(&self, j: usize) -> QVector {
        QVector::from((0..self.rows).map(|i| self.get(i, j).clone()).collect::<Vec<_>>())
    }

    pub fn rows_vec(&self) -> Vec<QVector> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn transpose(&self) -> QMatrix {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.data.iter().all(|x| !x.is_negative())
    }

    pub fn trace(&self) -> Rational {
        (0..self.rows.min(self.cols)).fold(Rational::zero(), |acc, i| acc + self.get(i, i))
    }

    pub fn scale(&self, c: &Rational) -> QMatrix {
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    pub fn mul_vec(&self, v: &QVector) -> QVector {
        assert_eq!(self.cols, v.dim(), "matrix-vector dimension mismatch");
        QVector::from(
            (0..self.rows)
                .map(|i| {
                    self.row_slice(i)
                        .iter()
                        .zip(v.iter())
                        .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
                })
                .collect::<Vec<_>>(),
        )
    }

    /// `I - self` for square matrices.
    pub fn identity_minus(&self) -> QMatrix {
        &Self::identity(self.rows) - self
    }

    pub fn pow(&self, mut k: u32) -> QMatrix {
        let mut base = self.clone();
        let mut acc = Self::identity(self.rows);
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Stacks matrices with equal column counts on top of each other.
    pub fn vstack(blocks: &[QMatrix]) -> Result<QMatrix> {
        let cols = blocks.first().map_or(0, |b| b.cols);
        let mut data = Vec::new();
        let mut rows = 0;
        for b in blocks {
            if b.cols != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: b.cols,
                });
            }
            rows += b.rows;
            data.extend(b.data.iter().cloned());
        }
        Ok(QMatrix { rows, cols, data })
    }

    /// Block-diagonal direct sum.
    pub fn direct_sum(&self, other: &QMatrix) -> QMatrix {
        let (r, c) = (self.rows + other.rows, self.cols + other.cols);
        let mut m = Self::zeros(r, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(i, j, self.get(i, j).clone());
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                m.set(self.rows + i, self.cols + j, other.get(i, j).clone());
            }
        }
        m
    }

    /// Reduced row echelon form with pivots chosen left to right; returns
    /// the reduced matrix and its pivot columns.
    pub fn rref(&self) -> (QMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).recip();
            for j in c..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c).clone();
                for j in c..m.cols {
                    let v = m.get(i, j) - &f * m.get(r, j);
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Inverse of a square matrix, `None` when singular.
    pub fn inverse(&self) -> Option<QMatrix> {
        let n = self.rows;
        if !self.is_square() {
            return None;
        }
        let mut aug = Self::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, Rational::one());
        }
        let (red, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, red.get(i, n + j).clone());
            }
        }
        Some(inv)
    }

    /// Evaluates the polynomial with ascending coefficients `coeffs` at this
    /// square matrix by Horner's rule.
    pub fn eval_poly(&self, coeffs: &[Rational]) -> QMatrix {
        let n = self.rows;
        let mut acc = Self::zeros(n, n);
        for c in coeffs.iter().rev() {
            acc = &acc * self;
            for i in 0..n {
                let v = acc.get(i, i) + c;
                acc.set(i, i, v);
            }
        }
        acc
    }

    pub fn commutes_with(&self, other: &QMatrix) -> bool {
        &(self * other) == &(other * self)
    }

    /// Largest absolute row sum.
    pub fn max_abs_row_sum(&self) -> Rational {
        (0..self.rows)
            .map(|i| {
                self.row_slice(i)
                    .iter()
                    .fold(Rational::zero(), |acc, x| acc + x.abs())
            })
            .max()
            .unwrap_or_else(Rational::zero)
    }

    /// Largest absolute column sum.
    pub fn max_abs_col_sum(&self) -> Rational {
        self.transpose().max_abs_row_sum()
    }
}

/// Canonical basis of the null space `{v : Mv = 0}`: one vector per free
/// column of the reduced row echelon form, with a one in that column and
/// zeros in the other free columns. Empty iff the kernel is trivial.
pub fn kernel_basis(m: &QMatrix) -> Vec<QVector> {
    let (red, pivots) = m.rref();
    let n = m.ncols();
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = QVector::zeros(n);
            v[f] = Rational::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -red.get(r, f).clone();
            }
            v
        })
        .collect()
}

impl Mul for &QMatrix {
    type Output = QMatrix;
    fn mul(self, rhs: &QMatrix) -> QMatrix {
        assert_eq!(self.cols, rhs.rows, "matrix product dimension mismatch");
        let mut out = QMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * rhs.cols + j;
                    out.data[idx] += a * b;
                }
            }
        }
        out
    }
}

impl Add for &QMatrix {
    type Output = QMatrix;
    fn add(self, rhs: &QMatrix) -> QMatrix {
        assert_eq!(self.shape(), rhs.shape());
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &QMatrix {
    type Output = QMatrix;
    fn sub(self, rhs: &QMatrix) -> QMatrix {
        assert_eq!(self.shape(), rhs.shape());
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl fmt::Debug for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..self.rows)
            .map(|i| {
                let cells: Vec<String> = self.row_slice(i).iter().map(fmt_rational).collect();
                format!("[{}]", cells.join(", "))
            })
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::super::rational::{q, qi};
    use super::*;

    fn example_s() -> QMatrix {
        QMatrix::from_rows(vec![
            vec![qi(1), qi(0), qi(0)],
            vec![q(1, 3), q(1, 3), q(1, 3)],
            vec![qi(0), qi(0), qi(1)],
        ])
        .unwrap()
    }

    fn span_contains(basis: &[QVector], v: &QVector) -> bool {
        let mut rows = basis.to_vec();
        let r0 = QMatrix::from_row_vectors(&rows).unwrap().rank();
        rows.push(v.clone());
        QMatrix::from_row_vectors(&rows).unwrap().rank() == r0
    }

    #[test]
    fn identity_has_trivial_kernel() {
        assert!(kernel_basis(&QMatrix::identity(3)).is_empty());
    }

    #[test]
    fn kernel_of_non_power_bounded_example() {
        let t = QMatrix::from_i64(&[&[1, 0, 0], &[1, 1, 1], &[0, 0, 1]]);
        let k = kernel_basis(&t.identity_minus());
        assert_eq!(k.len(), 2);
        assert!(span_contains(&k, &QVector::from_i64(&[1, 0, -1])));
        assert!(span_contains(&k, &QVector::from_i64(&[0, 1, 0])));
    }

    #[test]
    fn kernel_of_markov_example() {
        let k = kernel_basis(&example_s().identity_minus());
        assert_eq!(k.len(), 2);
        assert!(span_contains(&k, &QVector::from_i64(&[1, 1, 1])));
        assert!(span_contains(&k, &QVector::from_i64(&[1, 0, -1])));
        // canonical form: free columns 1 and 2
        assert_eq!(k[0], QVector::from_i64(&[2, 1, 0]));
        assert_eq!(k[1], QVector::from_i64(&[-1, 0, 1]));
    }

    #[test]
    fn inverse_and_power() {
        let a = QMatrix::from_i64(&[&[2, 1], &[1, 1]]);
        let inv = a.inverse().unwrap();
        assert_eq!(&a * &inv, QMatrix::identity(2));
        assert!(QMatrix::from_i64(&[&[1, 2], &[2, 4]]).inverse().is_none());
        assert_eq!(a.pow(3), &(&a * &a) * &a);
        assert_eq!(a.pow(0), QMatrix::identity(2));
    }

    #[test]
    fn eval_poly_matches_direct() {
        let a = QMatrix::from_i64(&[&[0, 1], &[1, 0]]);
        // a^2 - 1 = 0 for a permutation of order two
        assert!(a.eval_poly(&[qi(-1), qi(0), qi(1)]).is_zero());
    }

    #[test]
    fn json_shape() {
        let m = QMatrix::from_rows(vec![vec![q(1, 3), qi(0)]]).unwrap();
        let s = serde_json::to_string(&m).unwrap();
        assert_eq!(s, r#"{"rows":[["1/3","0"]]}"#);
        let back: QMatrix = serde_json::from_str(&s).unwrap();
        assert_eq!(back, m);
        assert!(serde_json::from_str::<QMatrix>(r#"{"rows":[["1"],["1","2"]]}"#).is_err());
    }
}
