//! Complete factorization over the rationals for desk-scale degrees.
//!
//! Squarefree decomposition first, then each squarefree part is split by
//! the classical Zassenhaus route: factor modulo a small prime, lift the
//! modular factors with linear Hensel steps past the Mignotte bound and
//! recombine subsets by trial division over the integers.

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::SeedableRng;
use serde::Serialize;

use super::cyclotomic::cyclotomic_order;
use super::modp::{Fp, PolyP};
use super::poly::QPolynomial;
use super::rational::Rational;
use crate::error::{Error, Result};

/// Largest degree accepted by [`factor_over_rationals`].
pub const MAX_FACTOR_DEGREE: usize = 16;

/// One irreducible factor with its multiplicity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Factor {
    /// Irreducible, primitive integer coefficients, positive leading term.
    pub poly: QPolynomial,
    pub multiplicity: usize,
    /// `Some(n)` when the factor is the `n`-th cyclotomic polynomial.
    pub cyclotomic_order: Option<u64>,
}

/// `unit * prod factor^multiplicity`, reproducing the input exactly.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactoredPolynomial {
    #[serde(with = "super::serde_repr::rational")]
    pub unit: Rational,
    pub factors: Vec<Factor>,
}

impl FactoredPolynomial {
    pub fn expand(&self) -> QPolynomial {
        self.factors
            .iter()
            .fold(QPolynomial::constant(self.unit.clone()), |acc, f| {
                &acc * &f.poly.pow(f.multiplicity)
            })
    }

    /// Orders `n` of the cyclotomic factors, ascending.
    pub fn cyclotomic_orders(&self) -> Vec<u64> {
        let mut v: Vec<u64> = self.factors.iter().filter_map(|f| f.cyclotomic_order).collect();
        v.sort_unstable();
        v
    }
}

/// Irreducible factorization of a nonzero polynomial of degree at most
/// [`MAX_FACTOR_DEGREE`].
pub fn factor_over_rationals(p: &QPolynomial) -> Result<FactoredPolynomial> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.degree() > MAX_FACTOR_DEGREE {
        return Err(Error::UnsupportedDegree {
            degree: p.degree(),
            bound: MAX_FACTOR_DEGREE,
        });
    }
    let (unit, _) = p.content_and_primitive();
    let mut factors = Vec::new();
    for (part, mult) in p.squarefree_decomposition() {
        let prim: Vec<BigInt> = part.content_and_primitive().1;
        for f in factor_squarefree_primitive(&prim) {
            let poly = QPolynomial::from_integers(&f);
            let cyclotomic_order = cyclotomic_order(&poly);
            factors.push(Factor {
                poly,
                multiplicity: mult,
                cyclotomic_order,
            });
        }
    }
    factors.sort_by(|a, b| a.poly.canonical_cmp(&b.poly));
    let out = FactoredPolynomial { unit, factors };
    if out.expand() != *p {
        return Err(Error::InternalInconsistency(format!(
            "factorization of {p} does not multiply back"
        )));
    }
    Ok(out)
}

fn lc(f: &[BigInt]) -> &BigInt {
    f.last().expect("nonzero polynomial")
}

fn to_q(f: &[BigInt]) -> QPolynomial {
    QPolynomial::from_integers(f)
}

fn small_primes() -> impl Iterator<Item = u64> {
    (3u64..).filter(|&n| (2..).take_while(|d| d * d <= n).all(|d| n % d != 0))
}

fn reduce_mod(f: &[BigInt], p: u64) -> PolyP {
    let pb = BigInt::from(p);
    let mut v: PolyP = f
        .iter()
        .map(|c| c.mod_floor(&pb).to_u64().expect("residue fits"))
        .collect();
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

/// Factors a squarefree primitive integer polynomial with positive leading
/// coefficient into primitive irreducibles.
fn factor_squarefree_primitive(f: &[BigInt]) -> Vec<Vec<BigInt>> {
    let n = f.len() - 1;
    if n <= 1 {
        return vec![f.to_vec()];
    }
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed);
    // Try a handful of good primes and keep the one with fewest modular
    // factors; fewer factors means less recombination work.
    let mut best: Option<(u64, Vec<PolyP>)> = None;
    let mut tried = 0;
    for p in small_primes() {
        if tried == 6 {
            break;
        }
        let field = Fp::new(p);
        if (lc(f) % BigInt::from(p)).is_zero() {
            continue;
        }
        let fp = reduce_mod(f, p);
        if !field.is_squarefree(&fp) {
            continue;
        }
        tried += 1;
        let facs = field.factor_squarefree(&field.monic(&fp), &mut rng);
        if facs.len() == 1 {
            return vec![f.to_vec()];
        }
        if best.as_ref().is_none_or(|(_, b)| facs.len() < b.len()) {
            best = Some((p, facs));
        }
    }
    let (p, modular) = best.expect("some prime is good for a squarefree polynomial");
    // Mignotte-style bound on coefficients of lc(f) * (monic factor).
    let norm1: BigInt = f.iter().map(|c| c.abs()).sum();
    let bound: BigInt = (BigInt::one() << n) * norm1 * lc(f).abs() * 2;
    let mut modulus = BigInt::from(p);
    let mut steps = 1;
    while modulus <= bound {
        modulus *= p;
        steps += 1;
    }
    let lifted = hensel_lift(f, p, &modular, steps);
    recombine(f, lifted, &modulus)
}

/// Lifts `f = lc(f) * prod g_j (mod p)` with monic `g_j` to a congruence
/// modulo `p^steps`.
fn hensel_lift(f: &[BigInt], p: u64, modular: &[PolyP], steps: u32) -> Vec<Vec<BigInt>> {
    let field = Fp::new(p);
    let r = modular.len();
    let lc_inv = field.inv((lc(f).mod_floor(&BigInt::from(p))).to_u64().unwrap());
    // partial-fraction coefficients: sum_j s_j prod_{i != j} g_i = 1 (mod p)
    let cofactors: Vec<PolyP> = (0..r)
        .map(|j| {
            modular
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != j)
                .fold(vec![1u64], |acc, (_, g)| field.mul(&acc, g))
        })
        .collect();
    let s: Vec<PolyP> = (0..r)
        .map(|j| field.inv_mod(&cofactors[j], &modular[j]).expect("coprime modular factors"))
        .collect();

    let mut lifted: Vec<Vec<BigInt>> = modular
        .iter()
        .map(|g| g.iter().map(|&c| BigInt::from(c)).collect())
        .collect();
    let mut m = BigInt::from(p);
    let lcf = lc(f).clone();
    for _ in 1..steps {
        let prod = lifted
            .iter()
            .fold(QPolynomial::constant(Rational::from_integer(lcf.clone())), |acc, g| {
                &acc * &to_q(g)
            });
        let err = &to_q(f) - &prod;
        let e: Vec<BigInt> = err
            .coeffs()
            .iter()
            .map(|c| {
                let c = c.to_integer();
                debug_assert!((&c % &m).is_zero());
                c / &m
            })
            .collect();
        let t = field.scale(&reduce_mod(&e, p), lc_inv);
        for j in 0..r {
            let delta = field.rem(&field.mul(&s[j], &t), &modular[j]);
            let g = &mut lifted[j];
            for (k, &d) in delta.iter().enumerate() {
                g[k] += &m * BigInt::from(d);
            }
        }
        m *= p;
    }
    lifted
}

fn symmetric_mod(c: &BigInt, m: &BigInt) -> BigInt {
    let r = c.mod_floor(m);
    if &r * 2 > *m {
        r - m
    } else {
        r
    }
}

fn primitive_of(g: &[BigInt]) -> Vec<BigInt> {
    let mut v = g.to_vec();
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    let mut cont = v.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if cont.is_zero() {
        return v;
    }
    if lc(&v).is_negative() {
        cont = -cont;
    }
    v.iter().map(|c| c / &cont).collect()
}

fn recombine(f: &[BigInt], mut pool: Vec<Vec<BigInt>>, modulus: &BigInt) -> Vec<Vec<BigInt>> {
    let mut f = f.to_vec();
    let mut found = Vec::new();
    let mut size = 1;
    while 2 * size <= pool.len() {
        let mut hit = None;
        for subset in (0..pool.len()).combinations(size) {
            let lcf = Rational::from_integer(lc(&f).clone());
            let prod = subset
                .iter()
                .fold(QPolynomial::constant(lcf), |acc, &i| &acc * &to_q(&pool[i]));
            let cand: Vec<BigInt> = prod
                .coeffs()
                .iter()
                .map(|c| symmetric_mod(&c.to_integer(), modulus))
                .collect();
            let cand = primitive_of(&cand);
            if cand.len() < 2 {
                continue;
            }
            // cheap constant-term screen before the full division
            if !cand[0].is_zero() && !(&f[0] % &cand[0]).is_zero() {
                continue;
            }
            if let Some(quot) = to_q(&f).exact_div(&to_q(&cand)) {
                if quot.coeffs().iter().all(|c| c.is_integer()) {
                    hit = Some((subset, cand, quot));
                    break;
                }
            }
        }
        match hit {
            Some((subset, cand, quot)) => {
                found.push(cand);
                f = quot.coeffs().iter().map(|c| c.to_integer()).collect();
                for &i in subset.iter().rev() {
                    pool.remove(i);
                }
            }
            None => size += 1,
        }
    }
    if f.len() > 1 {
        found.push(primitive_of(&f));
    }
    found
}
