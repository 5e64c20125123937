use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::rational::{common_denominator, fmt_rational, Rational};
use super::serde_repr::RationalStr;
use crate::error::Error;

/// Univariate polynomial over the rationals, coefficients in ascending
/// degree. Trailing zero coefficients are always stripped, so the zero
/// polynomial has no coefficients at all.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "PolyRepr", into = "PolyRepr")]
pub struct QPolynomial {
    coeffs: Vec<Rational>,
}

#[derive(Serialize, Deserialize)]
struct PolyRepr {
    coeffs: Vec<RationalStr>,
}

impl TryFrom<PolyRepr> for QPolynomial {
    type Error = Error;
    fn try_from(r: PolyRepr) -> Result<Self, Error> {
        Ok(QPolynomial::new(r.coeffs.into_iter().map(|c| c.0).collect()))
    }
}

impl From<QPolynomial> for PolyRepr {
    fn from(p: QPolynomial) -> Self {
        PolyRepr {
            coeffs: p.coeffs.into_iter().map(RationalStr).collect(),
        }
    }
}

impl QPolynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        QPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    pub fn from_integers(coeffs: &[BigInt]) -> Self {
        Self::new(coeffs.iter().cloned().map(Rational::from_integer).collect())
    }

    pub fn zero() -> Self {
        QPolynomial { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// The monic linear polynomial `x - r`.
    pub fn linear_root(r: Rational) -> Self {
        Self::new(vec![-r, Rational::one()])
    }

    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree; the zero polynomial reports degree 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// Sign of `p(x)` as `x -> +inf` (`positive = true`) or `-inf`.
    pub fn sign_at_infinity(&self, positive: bool) -> i8 {
        if self.is_zero() {
            return 0;
        }
        let s = if self.leading().is_positive() { 1 } else { -1 };
        if positive || self.degree() % 2 == 0 {
            s
        } else {
            -s
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.leading().recip())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rational::from_integer(k.into()))
                .collect(),
        )
    }

    pub fn pow(&self, k: usize) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }

    /// `x^deg p(1/x)`: the coefficient list reversed.
    pub fn reciprocal(&self) -> Self {
        let mut c = self.coeffs.clone();
        c.reverse();
        Self::new(c)
    }

    /// `p(-x)`.
    pub fn reflect(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// `p(q(x))`.
    pub fn compose(&self, q: &QPolynomial) -> Self {
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| &(&acc * q) + &Self::constant(c.clone()))
    }

    /// Euclidean division: `self = quot * d + rem` with `deg rem < deg d`.
    ///
    /// # Panics
    ///
    /// Panics on division by the zero polynomial.
    pub fn div_rem(&self, d: &QPolynomial) -> (QPolynomial, QPolynomial) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let mut rem = self.coeffs.clone();
        let dd = d.degree();
        if self.is_zero() || self.degree() < dd {
            return (Self::zero(), self.clone());
        }
        let inv_lc = d.leading().recip();
        let mut quot = vec![Rational::zero(); self.degree() - dd + 1];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] * &inv_lc;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[k + j] -= &c * dc;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Self::new(quot), Self::new(rem))
    }

    pub fn rem(&self, d: &QPolynomial) -> QPolynomial {
        self.div_rem(d).1
    }

    pub fn divides(&self, other: &QPolynomial) -> bool {
        !self.is_zero() && other.rem(self).is_zero()
    }

    /// Exact quotient, `None` when `d` does not divide `self`.
    pub fn exact_div(&self, d: &QPolynomial) -> Option<QPolynomial> {
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    /// Monic greatest common divisor (zero iff both inputs are zero).
    pub fn gcd(&self, other: &QPolynomial) -> QPolynomial {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Splits `self = content * primitive` where `primitive` has coprime
    /// integer coefficients and a positive leading coefficient.
    pub fn content_and_primitive(&self) -> (Rational, Vec<BigInt>) {
        if self.is_zero() {
            return (Rational::zero(), vec![]);
        }
        let den = common_denominator(self.coeffs.iter());
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * Rational::from_integer(den.clone())).to_integer())
            .collect();
        let mut g = ints.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
        if ints.last().is_some_and(|l| l.is_negative()) {
            g = -g;
        }
        let prim = ints.iter().map(|v| v / &g).collect();
        (Rational::new(g, den), prim)
    }

    /// Primitive integer representative with positive leading coefficient.
    pub fn primitive_part(&self) -> QPolynomial {
        Self::from_integers(&self.content_and_primitive().1)
    }

    /// Squarefree decomposition (Yun): pairs `(a_i, i)` with monic,
    /// pairwise coprime, squarefree `a_i` such that the monic part of
    /// `self` equals the product of `a_i^i`.
    pub fn squarefree_decomposition(&self) -> Vec<(QPolynomial, usize)> {
        let f = self.monic();
        if f.is_constant() {
            return vec![];
        }
        let mut out = Vec::new();
        let fp = f.derivative();
        let a0 = f.gcd(&fp);
        let mut b = f.exact_div(&a0).expect("gcd divides");
        let c = fp.exact_div(&a0).expect("gcd divides");
        let mut d = &c - &b.derivative();
        let mut i = 1;
        while !b.is_constant() {
            let a = b.gcd(&d);
            let nb = b.exact_div(&a).expect("gcd divides");
            let nc = d.exact_div(&a).expect("gcd divides");
            d = &nc - &nb.derivative();
            if !a.is_constant() {
                out.push((a, i));
            }
            b = nb;
            i += 1;
        }
        out
    }

    /// Product of the distinct monic irreducible factors.
    pub fn radical(&self) -> QPolynomial {
        self.squarefree_decomposition()
            .into_iter()
            .fold(QPolynomial::one(), |acc, (a, _)| &acc * &a)
    }

    /// Total order used to sort factor lists deterministically: by degree,
    /// then coefficients from the top down.
    pub fn canonical_cmp(&self, other: &QPolynomial) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

impl Add for &QPolynomial {
    type Output = QPolynomial;
    fn add(self, rhs: &QPolynomial) -> QPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        QPolynomial::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &QPolynomial {
    type Output = QPolynomial;
    fn sub(self, rhs: &QPolynomial) -> QPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        QPolynomial::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Neg for &QPolynomial {
    type Output = QPolynomial;
    fn neg(self) -> QPolynomial {
        QPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &QPolynomial {
    type Output = QPolynomial;
    fn mul(self, rhs: &QPolynomial) -> QPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return QPolynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QPolynomial::new(out)
    }
}

impl fmt::Debug for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let show_coeff = k == 0 || !a.is_one();
            if show_coeff {
                if a.is_integer() {
                    write!(f, "{}", fmt_rational(&a))?;
                } else {
                    write!(f, "({})", fmt_rational(&a))?;
                }
            }
            match k {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}
