use num_traits::{Signed, Zero};
use serde::Serialize;

use super::Verdict;
use crate::error::Result;
use crate::exactnum::serde_repr::rational;
use crate::exactnum::sturm::{count_real_roots, Point};
use crate::exactnum::{char_poly, qi, QMatrix, QPolynomial, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SemigroupReport {
    pub metzler: bool,
    #[serde(with = "rational")]
    pub log_norm_sup: Rational,
    /// Number of conjugate pairs `±iβ`, `β > 0`, among the eigenvalues.
    pub imaginary_pairs: usize,
    pub zero_eigenvalue: bool,
    pub imaginary_eigenvalues: String,
    pub verdict: Verdict,
}

/// For a generator of a positive contraction semigroup, a nonzero
/// imaginary eigenvalue `iβ` would force all `ikβ` into the spectrum, which
/// a matrix cannot have. Metzler plus nonpositive logarithmic norm in the
/// sup norm certifies such a generator.
pub fn semigroup_imaginary_check(a: &QMatrix) -> Result<SemigroupReport> {
    let n = a.require_square()?;
    let metzler = (0..n).all(|i| (0..n).all(|j| i == j || !a.get(i, j).is_negative()));
    let log_norm_sup = (0..n)
        .map(|i| {
            let off: Rational = (0..n).filter(|&j| j != i).map(|j| a.get(i, j).abs()).sum();
            a.get(i, i) + off
        })
        .max()
        .expect("nonempty");
    let cp = char_poly(a)?;
    // roots r with -r also a root, then x^2 = -s
    let mut g = cp.gcd(&cp.reflect());
    let mut zero_eigenvalue = false;
    let x = QPolynomial::from_i64(&[0, 1]);
    while !g.is_constant() && g.coeff(0).is_zero() {
        zero_eigenvalue = true;
        g = g.exact_div(&x).expect("x divides");
    }
    let h: Vec<Rational> = (0..=g.degree() / 2)
        .map(|k| {
            let c = g.coeff(2 * k);
            if k % 2 == 1 {
                -c
            } else {
                c
            }
        })
        .collect();
    let imaginary_pairs = count_real_roots(&QPolynomial::new(h), &Point::At(qi(0)), &Point::PosInf);
    let verdict = if !(metzler && !log_norm_sup.is_positive()) {
        Verdict::Inapplicable
    } else if imaginary_pairs == 0 {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    Ok(SemigroupReport {
        metzler,
        log_norm_sup,
        imaginary_pairs,
        zero_eigenvalue: zero_eigenvalue || cp.coeff(0).is_zero(),
        imaginary_eigenvalues: match imaginary_pairs {
            0 => "none".into(),
            k => format!("{k} conjugate pair(s) ±iβ with β > 0"),
        },
        verdict,
    })
}
