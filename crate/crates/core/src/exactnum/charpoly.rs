use num_traits::{One, Zero};

use super::matrix::QMatrix;
use super::poly::QPolynomial;
use super::rational::Rational;
use crate::error::Result;

/// Characteristic polynomial `det(xI - M)` by the Faddeev–LeVerrier
/// recursion. Every division is by a nonzero integer, so the result is exact.
pub fn char_poly(m: &QMatrix) -> Result<QPolynomial> {
    let n = m.require_square()?;
    let mut coeffs = vec![Rational::zero(); n + 1];
    coeffs[n] = Rational::one();
    let mut mk = QMatrix::zeros(n, n);
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I
        mk = &(m * &mk) + &QMatrix::identity(n).scale(&coeffs[n - k + 1]);
        let am = m * &mk;
        coeffs[n - k] = -am.trace() / Rational::from_integer(k.into());
    }
    Ok(QPolynomial::new(coeffs))
}
