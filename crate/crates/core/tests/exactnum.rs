mod common;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use rand::Rng;

use latfix::exactnum::cyclotomic::cyclotomic;
use latfix::exactnum::{
    char_poly, factor_over_rationals, fix_projection, kernel_basis, q, qi, unit_circle_root_count,
    unit_disk_verdict, DiskVerdict, Rational,
};
use latfix::random::{random_substochastic, trial_rng};
use latfix::{QMatrix, QPolynomial, QVector};

use common::{float_roots, to_f64};

fn small_rational() -> impl Strategy<Value = Rational> {
    (-5i64..=5, 1i64..=4).prop_map(|(n, d)| q(n, d))
}

fn rational_matrix(max: usize) -> impl Strategy<Value = QMatrix> {
    (1..=max, 1..=max).prop_flat_map(|(r, c)| {
        // sparse-ish rows so that rank deficiency is common
        prop::collection::vec(
            prop::collection::vec(prop_oneof![2 => Just(qi(0)), 3 => small_rational()], c),
            r,
        )
        .prop_map(|rows| QMatrix::from_rows(rows).unwrap())
    })
}

/// Rank by fraction-free (Bareiss) elimination on the integer matrix
/// obtained by clearing denominators row by row.
fn bareiss_rank(m: &QMatrix) -> usize {
    let mut a: Vec<Vec<BigInt>> = (0..m.nrows())
        .map(|i| {
            let row = m.row_slice(i);
            let l = row.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
            row.iter().map(|x| x.numer() * (&l / x.denom())).collect()
        })
        .collect();
    let (rows, cols) = (m.nrows(), m.ncols());
    let mut prev = BigInt::one();
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !a[r][c].is_zero()) else { continue };
        a.swap(rank, p);
        for r in rank + 1..rows {
            for k in c + 1..cols {
                let v = &a[rank][c] * &a[r][k] - &a[r][c] * &a[rank][k];
                a[r][k] = v / &prev;
            }
            a[r][c] = BigInt::zero();
        }
        prev = a[rank][c].clone();
        rank += 1;
    }
    rank
}

fn poly_strategy() -> impl Strategy<Value = QPolynomial> {
    prop::collection::vec(-4i64..=4, 2..=9)
        .prop_filter("nonconstant", |c| c.iter().skip(1).any(|&x| x != 0))
        .prop_map(|c| QPolynomial::from_i64(&c))
        // floating roots are only accurate to 1e-9 when simple
        .prop_filter("squarefree", |p| p.gcd(&p.derivative()).is_constant())
}

/// Distinct factors with known root locations: cyclotomic, rational roots
/// off the circle, and quadratics with a complex pair of modulus `sqrt(c)`.
fn planted_factors(seed: u64) -> Vec<QPolynomial> {
    let mut rng = trial_rng(seed, 0);
    let mut out: Vec<QPolynomial> = vec![];
    let mut degree = 0;
    let target = rng.gen_range(1..=8);
    while degree < target {
        let f = match rng.gen_range(0..3) {
            0 => cyclotomic(rng.gen_range(1..=12)),
            1 => {
                let r = q(rng.gen_range(-6..=6), rng.gen_range(1..=4));
                if r.abs() == qi(1) {
                    continue;
                }
                QPolynomial::linear_root(r)
            }
            _ => {
                let c = q(rng.gen_range(1..=9), rng.gen_range(1..=4));
                let b = q(rng.gen_range(-3..=3), rng.gen_range(1..=4));
                if &b * &b >= qi(4) * &c {
                    continue;
                }
                QPolynomial::new(vec![c, b, qi(1)])
            }
        };
        if degree + f.degree() > 8 || out.contains(&f) || out.iter().any(|g| !g.gcd(&f).is_constant()) {
            continue;
        }
        degree += f.degree();
        out.push(f);
    }
    out
}

fn product(fs: &[QPolynomial]) -> QPolynomial {
    fs.iter().fold(QPolynomial::one(), |acc, f| &acc * f)
}

proptest! {
    #![proptest_config(common::proptest_config(200))]

    #[test]
    fn kernel_vectors_are_annihilated(m in rational_matrix(8)) {
        let ker = kernel_basis(&m);
        for v in &ker {
            prop_assert!(m.mul_vec(v).is_zero());
        }
        prop_assert_eq!(ker.len(), m.ncols() - bareiss_rank(&m));
        if !ker.is_empty() {
            prop_assert_eq!(QMatrix::from_row_vectors(&ker).unwrap().rank(), ker.len());
        }
    }

    #[test]
    fn factorization_expands_back(
        orders in prop::collection::vec((1u64..=12, 1usize..=2), 0..=3),
        roots in prop::collection::vec(small_rational(), 0..=3),
        unit in small_rational().prop_filter("nonzero", |c| !c.is_zero()),
    ) {
        let mut p = QPolynomial::constant(unit);
        for (n, m) in &orders {
            p = &p * &cyclotomic(*n).pow(*m);
        }
        for r in &roots {
            p = &p * &QPolynomial::linear_root(r.clone());
        }
        prop_assume!(p.degree() <= 16);
        let f = factor_over_rationals(&p).unwrap();
        prop_assert_eq!(f.expand(), p);
        let found = f.cyclotomic_orders();
        for (n, _) in &orders {
            prop_assert!(found.contains(n));
        }
    }

    #[test]
    fn disk_verdict_matches_float_roots(p in poly_strategy()) {
        check_disk_verdict(&p)?;
    }

    #[test]
    fn disk_verdict_on_planted_roots(seed in any::<u64>()) {
        check_disk_verdict(&product(&planted_factors(seed)))?;
    }

    #[test]
    fn circle_count_matches_float_roots(seed in any::<u64>()) {
        let p = product(&planted_factors(seed));
        let count = unit_circle_root_count(&p).unwrap().count;
        let float = float_roots(&p).iter().filter(|z| (z.norm() - 1.0).abs() < 1e-9).count();
        prop_assert_eq!(count, float, "{:?}", p);
    }

    #[test]
    fn projection_is_the_ergodic_limit(seed in any::<u64>(), n in 1usize..=6) {
        let m = random_substochastic(&mut trial_rng(seed, 0), n);
        let p = fix_projection(&m).unwrap();
        prop_assert_eq!(&(&p * &p), &p);
        prop_assert_eq!(&(&m * &p), &p);
        prop_assert_eq!(&(&p * &m), &p);
        check_power_limit(&m, &p)?;
    }
}

fn check_disk_verdict(p: &QPolynomial) -> Result<(), TestCaseError> {
    let verdict = unit_disk_verdict(p).unwrap();
    let roots = float_roots(p);
    let expected = if roots.iter().any(|z| z.norm() > 1.0 + 1e-9) {
        DiskVerdict::SomeOutside
    } else if roots.iter().any(|z| z.norm() > 1.0 - 1e-9) {
        DiskVerdict::InsideWithBoundary
    } else {
        DiskVerdict::AllStrictlyInside
    };
    prop_assert_eq!(verdict, expected, "{:?}", p);
    Ok(())
}

/// `M^k v` approaches `P v`; for a periodic peripheral part the average
/// over one period is used instead.
fn check_power_limit(m: &QMatrix, p: &QMatrix) -> Result<(), TestCaseError> {
    let n = m.nrows();
    let cp = char_poly(m).unwrap();
    let period = factor_over_rationals(&cp)
        .unwrap()
        .cyclotomic_orders()
        .into_iter()
        .fold(1u64, |l, o| l.lcm(&o)) as usize;
    let a = to_f64(m);
    let v = nalgebra::DVector::from_fn(n, |i, _| (i as f64 + 1.0).sin());
    let exact = to_f64(p) * &v;
    // A^(2^20) by repeated squaring
    let mut big = a.clone();
    for _ in 0..20 {
        big = &big * &big;
    }
    let mut x = &big * &v;
    let mut avg = nalgebra::DVector::zeros(n);
    for _ in 0..period {
        avg += &x;
        x = &a * x;
    }
    avg /= period as f64;
    let err = (avg - exact).amax();
    prop_assert!(err < 1e-9, "error {err} with period {period}");
    Ok(())
}

#[test]
fn rank_oracle_sanity() {
    let m = QMatrix::from_i64(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
    assert_eq!(bareiss_rank(&m), 2);
    assert_eq!(kernel_basis(&m), vec![QVector::from_i64(&[-1, -1, 1])]);
}
