//! Sturm chains and Cauchy indices over the rationals.

use num_traits::{Signed, Zero};

use super::poly::QPolynomial;
use super::rational::Rational;

/// Signed remainder sequence `p0, p1, p2 = -rem(p0, p1), ...`.
pub fn signed_remainder_sequence(p0: &QPolynomial, p1: &QPolynomial) -> Vec<QPolynomial> {
    let mut seq = vec![p0.clone()];
    if p1.is_zero() {
        return seq;
    }
    seq.push(p1.clone());
    loop {
        let n = seq.len();
        let r = seq[n - 2].rem(&seq[n - 1]);
        if r.is_zero() {
            break;
        }
        seq.push(-&r);
    }
    seq
}

/// Where to evaluate a chain: a finite rational point or one of the ends
/// of the real line.
#[derive(Clone, Debug)]
pub enum Point {
    NegInf,
    At(Rational),
    PosInf,
}

fn sign_at(p: &QPolynomial, at: &Point) -> i8 {
    match at {
        Point::NegInf => p.sign_at_infinity(false),
        Point::PosInf => p.sign_at_infinity(true),
        Point::At(x) => {
            let v = p.eval(x);
            if v.is_zero() {
                0
            } else if v.is_positive() {
                1
            } else {
                -1
            }
        }
    }
}

/// Number of sign changes in the chain at a point, zeros skipped.
pub fn sign_variations(seq: &[QPolynomial], at: &Point) -> usize {
    let signs: Vec<i8> = seq.iter().map(|p| sign_at(p, at)).filter(|&s| s != 0).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Number of distinct real roots of `p` in the half-open interval `(a, b]`.
/// Endpoints may be infinite.
pub fn count_real_roots(p: &QPolynomial, a: &Point, b: &Point) -> usize {
    if p.is_zero() || p.is_constant() {
        return 0;
    }
    let seq = signed_remainder_sequence(p, &p.derivative());
    let va = sign_variations(&seq, a);
    let vb = sign_variations(&seq, b);
    va.saturating_sub(vb)
}

/// Cauchy index of `num/den` over the whole real line: the number of poles
/// where the quotient jumps from `-inf` to `+inf` minus those where it jumps
/// from `+inf` to `-inf`.
pub fn cauchy_index(num: &QPolynomial, den: &QPolynomial) -> i64 {
    if den.is_zero() || num.is_zero() {
        return 0;
    }
    let seq = signed_remainder_sequence(den, num);
    sign_variations(&seq, &Point::NegInf) as i64 - sign_variations(&seq, &Point::PosInf) as i64
}

#[cfg(test)]
mod tests {
    use super::super::rational::qi;
    use super::*;

    #[test]
    fn counts_roots_in_interval() {
        // (x-1)(x+1)(x-3)
        let p = &(&QPolynomial::from_i64(&[-1, 1]) * &QPolynomial::from_i64(&[1, 1]))
            * &QPolynomial::from_i64(&[-3, 1]);
        assert_eq!(count_real_roots(&p, &Point::NegInf, &Point::PosInf), 3);
        assert_eq!(count_real_roots(&p, &Point::At(qi(-2)), &Point::At(qi(2))), 2);
        assert_eq!(count_real_roots(&p, &Point::At(qi(0)), &Point::At(qi(2))), 1);
        // repeated roots are counted once
        let sq = QPolynomial::from_i64(&[-1, 1]).pow(3);
        assert_eq!(count_real_roots(&sq, &Point::NegInf, &Point::PosInf), 1);
        // no real roots
        assert_eq!(
            count_real_roots(&QPolynomial::from_i64(&[1, 0, 1]), &Point::NegInf, &Point::PosInf),
            0
        );
    }

    #[test]
    fn cauchy_index_of_derivative_counts_roots() {
        let p = QPolynomial::from_i64(&[-2, 0, 1]);
        assert_eq!(cauchy_index(&p.derivative(), &p), 2);
        assert_eq!(cauchy_index(&QPolynomial::from_i64(&[1]), &QPolynomial::from_i64(&[0, 1])), 1);
        assert_eq!(cauchy_index(&QPolynomial::from_i64(&[-1]), &QPolynomial::from_i64(&[0, 1])), -1);
    }
}
