use std::fmt;
use std::ops::{Add, Index, IndexMut, Neg, Sub};

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::rational::{fmt_rational, max_q, primitive_integer, Rational};
use super::serde_repr::RationalStr;
use crate::error::{Error, Result};

/// Dense vector of exact rationals.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QVector(Vec<Rational>);

impl QVector {
    /// Checked constructor; rejects the empty vector.
    pub fn new(entries: Vec<Rational>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidInput("vector must have dimension >= 1".into()));
        }
        Ok(QVector(entries))
    }

    pub fn zeros(n: usize) -> Self {
        QVector(vec![Rational::zero(); n])
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = Self::zeros(n);
        v.0[i] = Rational::from_integer(1.into());
        v
    }

    pub fn from_i64(xs: &[i64]) -> Self {
        QVector(xs.iter().map(|&x| Rational::from_integer(x.into())).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[Rational] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<Rational> {
        self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Rational> {
        self.0.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|x| !x.is_negative())
    }

    /// Componentwise `self >= other`.
    pub fn dominates(&self, other: &QVector) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a >= b)
    }

    pub fn dot(&self, other: &QVector) -> Rational {
        self.0
            .iter()
            .zip(&other.0)
            .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
    }

    pub fn scale(&self, c: &Rational) -> QVector {
        QVector(self.0.iter().map(|x| x * c).collect())
    }

    /// Componentwise absolute value (the ambient modulus).
    pub fn abs(&self) -> QVector {
        QVector(self.0.iter().map(Signed::abs).collect())
    }

    /// Componentwise maximum (the ambient supremum).
    pub fn sup(&self, other: &QVector) -> QVector {
        QVector(self.0.iter().zip(&other.0).map(|(a, b)| max_q(a, b)).collect())
    }

    pub fn sup_norm(&self) -> Rational {
        self.0
            .iter()
            .map(Signed::abs)
            .max()
            .unwrap_or_else(Rational::zero)
    }

    pub fn one_norm(&self) -> Rational {
        self.0.iter().fold(Rational::zero(), |acc, x| acc + x.abs())
    }

    /// Primitive integer representative (entries integral with gcd one).
    pub fn primitive(&self) -> QVector {
        QVector(
            primitive_integer(&self.0)
                .into_iter()
                .map(Rational::from_integer)
                .collect(),
        )
    }

    /// Support: indices of the nonzero entries.
    pub fn support(&self) -> Vec<usize> {
        (0..self.dim()).filter(|&i| !self.0[i].is_zero()).collect()
    }
}

/// Componentwise supremum of a nonempty family.
pub fn sup_all<'a>(vs: impl IntoIterator<Item = &'a QVector>) -> Option<QVector> {
    let mut it = vs.into_iter();
    let first = it.next()?.clone();
    Some(it.fold(first, |acc, v| acc.sup(v)))
}

impl From<Vec<Rational>> for QVector {
    fn from(v: Vec<Rational>) -> Self {
        QVector(v)
    }
}

impl Index<usize> for QVector {
    type Output = Rational;
    fn index(&self, i: usize) -> &Rational {
        &self.0[i]
    }
}

impl IndexMut<usize> for QVector {
    fn index_mut(&mut self, i: usize) -> &mut Rational {
        &mut self.0[i]
    }
}

impl Add for &QVector {
    type Output = QVector;
    fn add(self, rhs: &QVector) -> QVector {
        QVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &QVector {
    type Output = QVector;
    fn sub(self, rhs: &QVector) -> QVector {
        QVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &QVector {
    type Output = QVector;
    fn neg(self) -> QVector {
        QVector(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Debug for QVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for QVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(fmt_rational).collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl Serialize for QVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.0.iter().map(fmt_rational))
    }
}

impl<'de> Deserialize<'de> for QVector {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw: Vec<RationalStr> = Vec::deserialize(d)?;
        Ok(QVector(raw.into_iter().map(|r| r.0).collect()))
    }
}
