//! Cyclotomic polynomials: the exact vehicle for "eigenvalue is a root of
//! unity".

use num_integer::Integer;

use num_traits::One;

use super::poly::QPolynomial;
use super::rational::Rational;

/// Euler's totient.
pub fn euler_phi(n: u64) -> u64 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

/// The `n`-th cyclotomic polynomial, via `x^n - 1 = prod_{d | n} Phi_d`.
pub fn cyclotomic(n: u64) -> QPolynomial {
    assert!(n >= 1);
    let mut p = &QPolynomial::monomial(Rational::one(), n as usize) - &QPolynomial::one();
    for d in 1..n {
        if n % d == 0 {
            p = p.exact_div(&cyclotomic(d)).expect("cyclotomic divisibility");
        }
    }
    p
}

/// All orders `n` with `phi(n) <= max_degree`, ascending.
///
/// Uses `phi(n) >= sqrt(n/2)` to bound the search.
pub fn orders_up_to_degree(max_degree: usize) -> Vec<u64> {
    let bound = 2 * (max_degree as u64).pow(2) + 2;
    (1..=bound)
        .filter(|&n| euler_phi(n) <= max_degree as u64)
        .collect()
}

/// The order `n` when `p` (up to a nonzero scalar) equals `Phi_n`.
pub fn cyclotomic_order(p: &QPolynomial) -> Option<u64> {
    if p.is_constant() {
        return None;
    }
    let monic = p.monic();
    let deg = monic.degree() as u64;
    orders_up_to_degree(deg as usize)
        .into_iter()
        .filter(|&n| euler_phi(n) == deg)
        .find(|&n| cyclotomic(n) == monic)
}

/// Order of `lambda^k` when `lambda` is a primitive `n`-th root of unity.
pub fn power_order(n: u64, k: u64) -> u64 {
    n / n.gcd(&k)
}
