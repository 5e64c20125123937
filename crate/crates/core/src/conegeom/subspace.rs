use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::{kernel_basis, QMatrix, QVector, Rational};

/// Linear subspace of `Q^n`, stored by its reduced-row-echelon basis.
///
/// Two subspaces are equal iff their canonical bases are equal.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "SubspaceRepr", into = "SubspaceRepr")]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<QVector>,
    pivots: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct SubspaceRepr {
    ambient_dim: usize,
    basis: Vec<QVector>,
}

impl TryFrom<SubspaceRepr> for Subspace {
    type Error = Error;
    fn try_from(r: SubspaceRepr) -> Result<Self> {
        Subspace::span(r.ambient_dim, &r.basis)
    }
}

impl From<Subspace> for SubspaceRepr {
    fn from(s: Subspace) -> Self {
        SubspaceRepr {
            ambient_dim: s.ambient_dim,
            basis: s.basis,
        }
    }
}

impl Subspace {
    /// Span of arbitrary vectors of dimension `ambient_dim`.
    pub fn span(ambient_dim: usize, vectors: &[QVector]) -> Result<Self> {
        if ambient_dim == 0 {
            return Err(Error::InvalidInput("ambient dimension must be >= 1".into()));
        }
        if let Some(v) = vectors.iter().find(|v| v.dim() != ambient_dim) {
            return Err(Error::DimensionMismatch {
                expected: ambient_dim,
                found: v.dim(),
            });
        }
        if vectors.is_empty() {
            return Ok(Self::zero(ambient_dim));
        }
        let (red, pivots) = QMatrix::from_row_vectors(vectors)?.rref();
        let basis = (0..pivots.len()).map(|i| red.row(i)).collect();
        Ok(Subspace {
            ambient_dim,
            basis,
            pivots,
        })
    }

    pub fn zero(n: usize) -> Self {
        Subspace {
            ambient_dim: n,
            basis: vec![],
            pivots: vec![],
        }
    }

    pub fn full(n: usize) -> Self {
        Subspace {
            ambient_dim: n,
            basis: (0..n).map(|i| QVector::unit(n, i)).collect(),
            pivots: (0..n).collect(),
        }
    }

    /// Null space of a matrix, as a subspace of its column space dimension.
    pub fn kernel_of(m: &QMatrix) -> Self {
        Self::span(m.ncols(), &kernel_basis(m)).expect("kernel vectors have matching dimension")
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[QVector] {
        &self.basis
    }

    /// Coefficients of `v` in the canonical basis, `None` if `v` is not in
    /// the subspace.
    pub fn coordinates(&self, v: &QVector) -> Option<Vec<Rational>> {
        if v.dim() != self.ambient_dim {
            return None;
        }
        let coeffs: Vec<Rational> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let recon = self.combine(&coeffs);
        (recon == *v).then_some(coeffs)
    }

    pub fn contains(&self, v: &QVector) -> bool {
        self.coordinates(v).is_some()
    }

    /// `sum_j coeffs[j] * basis[j]`.
    pub fn combine(&self, coeffs: &[Rational]) -> QVector {
        let mut out = QVector::zeros(self.ambient_dim);
        for (c, b) in coeffs.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            out = &out + &b.scale(c);
        }
        out
    }

    /// Basis of the orthogonal complement `{y : y . b = 0 for all b}`.
    pub fn annihilator(&self) -> Vec<QVector> {
        if self.is_zero() {
            return (0..self.ambient_dim)
                .map(|i| QVector::unit(self.ambient_dim, i))
                .collect();
        }
        let m = QMatrix::from_row_vectors(&self.basis).expect("nonempty basis");
        kernel_basis(&m)
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                found: other.ambient_dim,
            });
        }
        let mut constraints = self.annihilator();
        constraints.extend(other.annihilator());
        if constraints.is_empty() {
            return Ok(Self::full(self.ambient_dim));
        }
        Ok(Self::kernel_of(&QMatrix::from_row_vectors(&constraints)?))
    }

    /// Rows of the coordinate map: row `i` holds the `i`-th entries of the
    /// basis vectors, so `x_i = row_i . c` for `x = sum c_j b_j`.
    pub(crate) fn coordinate_rows(&self) -> Vec<QVector> {
        (0..self.ambient_dim)
            .map(|i| QVector::from(self.basis.iter().map(|b| b[i].clone()).collect::<Vec<_>>()))
            .collect()
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "span{:?} in Q^{}", self.basis, self.ambient_dim)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_basis_is_order_independent() {
        let a = Subspace::span(
            3,
            &[QVector::from_i64(&[1, 1, 1]), QVector::from_i64(&[1, 0, -1])],
        )
        .unwrap();
        let b = Subspace::span(
            3,
            &[QVector::from_i64(&[2, 1, 0]), QVector::from_i64(&[-1, 0, 1])],
        )
        .unwrap();
        assert_eq!(a, b);
        assert_eq!(a.basis()[0], QVector::from_i64(&[1, 0, -1]));
        assert_eq!(a.basis()[1], QVector::from_i64(&[0, 1, 2]));
    }

    #[test]
    fn membership_and_annihilator() {
        let f = Subspace::span(3, &[QVector::from_i64(&[1, 1, 1])]).unwrap();
        assert!(f.contains(&QVector::from_i64(&[3, 3, 3])));
        assert!(!f.contains(&QVector::from_i64(&[3, 3, 2])));
        for y in f.annihilator() {
            assert!(y.dot(&QVector::from_i64(&[1, 1, 1])).is_zero());
        }
        let g = Subspace::span(3, &[QVector::from_i64(&[1, 0, 0]), QVector::from_i64(&[0, 1, 0])])
            .unwrap();
        let h = Subspace::span(3, &[QVector::from_i64(&[1, 1, 0]), QVector::from_i64(&[0, 0, 1])])
            .unwrap();
        let i = g.intersect(&h).unwrap();
        assert_eq!(i, Subspace::span(3, &[QVector::from_i64(&[1, 1, 0])]).unwrap());
    }

    #[test]
    fn json_round_trip_canonicalizes() {
        let s: Subspace =
            serde_json::from_str(r#"{"ambient_dim": 2, "basis": [["2", "4"]]}"#).unwrap();
        assert_eq!(s.basis()[0], QVector::from_i64(&[1, 2]));
        assert!(serde_json::from_str::<Subspace>(r#"{"ambient_dim": 3, "basis": [["1"]]}"#).is_err());
    }
}
