use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational scalar, always kept in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

/// Builds `num / den`.
///
/// # Panics
///
/// Panics if `den` is zero.
pub fn q(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Builds the integer `n` as a rational.
pub fn qi(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `"p/q"` or `"p"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    let bad = || Error::InvalidInput(format!("not a rational number: {s:?}"));
    if let Some((n, d)) = t.split_once('/') {
        let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
        let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
        if d.is_zero() {
            return Err(Error::InvalidInput(format!("zero denominator in {s:?}")));
        }
        Ok(Rational::new(n, d))
    } else {
        BigInt::from_str(t).map(Rational::from_integer).map_err(|_| bad())
    }
}

/// Canonical text form: `"p/q"`, or `"p"` when the denominator is one.
pub fn fmt_rational(x: &Rational) -> String {
    x.to_string()
}

/// Lossy conversion used only by floating cross-checks.
pub fn to_f64(x: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    x.to_f64().unwrap_or_else(|| {
        // Very large numerators or denominators: scale both down first.
        let n = x.numer();
        let d = x.denom();
        let shift = n.bits().max(d.bits()).saturating_sub(1000) as usize;
        let n = (n >> shift).to_f64().unwrap_or(f64::NAN);
        let d = (d >> shift).to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

pub(crate) fn max_q(a: &Rational, b: &Rational) -> Rational {
    if a >= b {
        a.clone()
    } else {
        b.clone()
    }
}

/// Least common multiple of the denominators.
pub(crate) fn common_denominator<'a>(xs: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    xs.into_iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}

/// Scales a rational vector to the primitive integer vector pointing the
/// same way (gcd of entries 1). The zero vector is returned unchanged.
pub(crate) fn primitive_integer(xs: &[Rational]) -> Vec<BigInt> {
    let den = common_denominator(xs.iter());
    let ints: Vec<BigInt> = xs
        .iter()
        .map(|x| (x * Rational::from_integer(den.clone())).to_integer())
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
    if g.is_zero() {
        return ints;
    }
    ints.into_iter().map(|v| v / &g).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rational("2/4").unwrap(), q(1, 2));
        assert_eq!(parse_rational("-3").unwrap(), qi(-3));
        assert_eq!(parse_rational(" 6/-4 ").unwrap(), q(-3, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
        assert_eq!(fmt_rational(&q(-3, 2)), "-3/2");
        assert_eq!(fmt_rational(&qi(7)), "7");
    }

    #[test]
    fn primitive_scaling() {
        let v = primitive_integer(&[q(1, 2), q(-1, 3), qi(0)]);
        assert_eq!(v, vec![BigInt::from(3), BigInt::from(-2), BigInt::from(0)]);
    }
}
