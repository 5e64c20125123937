use super::charpoly::char_poly;
use super::matrix::{kernel_basis, QMatrix};
use super::poly::QPolynomial;
use super::rational::qi;
use crate::error::{Error, Result};

/// True iff the eigenvalues carried by `q` are semisimple for `m`, i.e.
/// `dim ker q(M) = dim ker q(M)^2`. `q` must divide the characteristic
/// polynomial.
pub fn semisimple_check(m: &QMatrix, q: &QPolynomial) -> Result<bool> {
    m.require_square()?;
    let cp = char_poly(m)?;
    if q.is_zero() || !q.divides(&cp) {
        return Err(Error::NotADivisor(q.to_string()));
    }
    let qm = m.eval_poly(q.coeffs());
    let qm2 = &qm * &qm;
    Ok(qm.rank() == qm2.rank())
}

/// Projection onto `ker(I - M)` along `range(I - M)`.
///
/// Returns the zero matrix when 1 is not an eigenvalue and
/// [`Error::DefectiveFixedSpace`] when it is not semisimple.
pub fn fix_projection(m: &QMatrix) -> Result<QMatrix> {
    let n = m.require_square()?;
    let a = m.identity_minus();
    let right = kernel_basis(&a);
    if right.is_empty() {
        return Ok(QMatrix::zeros(n, n));
    }
    if !semisimple_check(m, &QPolynomial::linear_root(qi(1)))? {
        return Err(Error::DefectiveFixedSpace);
    }
    let left = kernel_basis(&a.transpose());
    let v = QMatrix::from_columns(&right)?;
    let ut = QMatrix::from_row_vectors(&left)?;
    let inner = (&ut * &v)
        .inverse()
        .ok_or_else(|| Error::InternalInconsistency("biorthogonal pairing is singular".into()))?;
    Ok(&(&v * &inner) * &ut)
}
