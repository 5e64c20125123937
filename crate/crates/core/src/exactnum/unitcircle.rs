//! Exact location of polynomial roots relative to the unit circle.
//!
//! Roots on the circle are isolated with the reciprocal gcd
//! `gcd(p, x^d p(1/x))`, after which the self-reciprocal part is folded by
//! `t = x + 1/x` and its real roots in `(-2, 2)` are counted with a Sturm
//! chain. The remaining roots are counted inside the disk by mapping the
//! disk onto the left half-plane (`x = (1+s)/(1-s)`) and reading the
//! Routh–Hurwitz Cauchy index. Only rational arithmetic is involved.

use num_traits::{One, Zero};
use serde::Serialize;

use super::factor::factor_over_rationals;
use super::poly::QPolynomial;
use super::rational::{qi, Rational};
use super::sturm::{cauchy_index, count_real_roots, Point};
use crate::error::{Error, Result};

/// Root location verdict relative to the closed unit disk.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum DiskVerdict {
    AllStrictlyInside,
    InsideWithBoundary,
    SomeOutside,
}

/// Unimodular root content of a polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundaryRoots {
    /// Roots on the unit circle, counted with multiplicity.
    pub count: usize,
    /// Monic polynomial whose roots are exactly the unimodular roots, with
    /// multiplicity.
    pub factor: QPolynomial,
    /// Squarefree unimodular content per multiplicity level.
    pub parts: Vec<(QPolynomial, usize)>,
    /// Irreducible self-reciprocal factors with roots both on and off the
    /// circle; their unimodular roots are included in `count` but cannot be
    /// split off rationally.
    pub inseparable: Vec<QPolynomial>,
}

/// `(count_on_circle, boundary_factor)` for a nonzero polynomial.
pub fn unit_circle_root_count(p: &QPolynomial) -> Result<BoundaryRoots> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut out = BoundaryRoots {
        count: 0,
        factor: QPolynomial::one(),
        parts: vec![],
        inseparable: vec![],
    };
    for (part, mult) in p.squarefree_decomposition() {
        let (count, circle, mut insep) = circle_content_squarefree(&part)?;
        out.count += mult * count;
        if !circle.is_constant() {
            out.factor = &out.factor * &circle.pow(mult);
            out.parts.push((circle, mult));
        }
        out.inseparable.append(&mut insep);
    }
    Ok(out)
}

/// Circle root count, rational circle factor and inseparable factors of a
/// squarefree polynomial.
fn circle_content_squarefree(s: &QPolynomial) -> Result<(usize, QPolynomial, Vec<QPolynomial>)> {
    let mut g = s.gcd(&s.reciprocal());
    let mut count = 0;
    let mut circle = QPolynomial::one();
    for r in [qi(1), qi(-1)] {
        if g.eval(&r).is_zero() {
            let lin = QPolynomial::linear_root(r);
            g = g.exact_div(&lin).expect("root divides");
            circle = &circle * &lin;
            count += 1;
        }
    }
    if g.is_constant() {
        return Ok((count, circle, vec![]));
    }
    let folded = chebyshev_fold(&g)?;
    let inner = count_real_roots(&folded, &Point::At(qi(-2)), &Point::At(qi(2)));
    if 2 * inner == g.degree() {
        return Ok((count + 2 * inner, &circle * &g, vec![]));
    }
    if inner == 0 {
        return Ok((count, circle, vec![]));
    }
    // Mixed content: separate by irreducible factors.
    let mut insep = Vec::new();
    for f in factor_over_rationals(&g)?.factors {
        let fm = f.poly.monic();
        if fm.reciprocal().monic() != fm {
            continue;
        }
        let k = count_real_roots(&chebyshev_fold(&fm)?, &Point::At(qi(-2)), &Point::At(qi(2)));
        if 2 * k == fm.degree() {
            circle = &circle * &fm;
        } else if k > 0 {
            insep.push(fm);
        }
    }
    Ok((count + 2 * inner, circle, insep))
}

/// For a monic palindromic `h` of degree `2m` returns `H` of degree `m` with
/// `h(x) = x^m H(x + 1/x)`.
fn chebyshev_fold(h: &QPolynomial) -> Result<QPolynomial> {
    let d = h.degree();
    let hm = h.monic();
    if d % 2 == 1 || hm.reciprocal().monic() != hm {
        return Err(Error::InternalInconsistency(format!(
            "{h} is not palindromic of even degree"
        )));
    }
    let m = d / 2;
    // D_0 = 2, D_1 = t, D_{j+1} = t D_j - D_{j-1};  x^j + x^{-j} = D_j(t)
    let t = QPolynomial::monomial(Rational::one(), 1);
    let mut dickson = vec![QPolynomial::constant(qi(2)), t.clone()];
    for j in 1..m {
        let next = &(&t * &dickson[j]) - &dickson[j - 1];
        dickson.push(next);
    }
    let mut out = QPolynomial::constant(hm.coeff(m));
    for j in 1..=m {
        out = &out + &dickson[j].scale(&hm.coeff(m + j));
    }
    Ok(out)
}

/// Number of roots strictly inside the unit disk of a polynomial with no
/// roots on the unit circle.
fn count_inside_off_circle(q: &QPolynomial) -> usize {
    let d = q.degree();
    if d == 0 {
        return 0;
    }
    // Q(s) = sum a_k (1+s)^k (1-s)^(d-k)
    let plus = QPolynomial::from_i64(&[1, 1]);
    let minus = QPolynomial::from_i64(&[1, -1]);
    let mut bilinear = QPolynomial::zero();
    for (k, a) in q.coeffs().iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        let term = &plus.pow(k) * &minus.pow(d - k);
        bilinear = &bilinear + &term.scale(a);
    }
    debug_assert_eq!(bilinear.degree(), d);
    // Q(i w) = A(w) + i B(w)
    let mut re = vec![Rational::zero(); d + 1];
    let mut im = vec![Rational::zero(); d + 1];
    for (k, c) in bilinear.coeffs().iter().enumerate() {
        let sign = if (k / 2) % 2 == 0 { c.clone() } else { -c.clone() };
        if k % 2 == 0 {
            re[k] = sign;
        } else {
            im[k] = sign;
        }
    }
    let (re, im) = (QPolynomial::new(re), QPolynomial::new(im));
    // left minus right half-plane roots
    let diff = if d % 2 == 0 {
        -cauchy_index(&im, &re)
    } else {
        cauchy_index(&re, &im)
    };
    ((d as i64 + diff) / 2) as usize
}

/// Exact verdict on where the roots of `p` lie relative to the unit circle.
pub fn unit_disk_verdict(p: &QPolynomial) -> Result<DiskVerdict> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.is_constant() {
        return Ok(DiskVerdict::AllStrictlyInside);
    }
    let boundary = unit_circle_root_count(p)?;
    if !boundary.inseparable.is_empty() {
        // an off-circle root of a self-reciprocal factor pairs with its
        // inverse, so one of the two lies outside
        return Ok(DiskVerdict::SomeOutside);
    }
    let rest = p.exact_div(&boundary.factor).ok_or_else(|| {
        Error::InternalInconsistency("boundary factor does not divide".into())
    })?;
    let inside = count_inside_off_circle(&rest);
    Ok(if inside < rest.degree() {
        DiskVerdict::SomeOutside
    } else if boundary.count > 0 {
        DiskVerdict::InsideWithBoundary
    } else {
        DiskVerdict::AllStrictlyInside
    })
}

/// Number of roots strictly inside the unit disk, with multiplicity.
pub fn count_strictly_inside(p: &QPolynomial) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let boundary = unit_circle_root_count(p)?;
    if !boundary.inseparable.is_empty() {
        return Err(Error::Unsupported(
            "inseparable unimodular content in an irreducible factor".into(),
        ));
    }
    let rest = p.exact_div(&boundary.factor).expect("boundary divides");
    Ok(count_inside_off_circle(&rest))
}
