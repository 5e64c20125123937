//! Dense polynomial arithmetic over a small prime field `F_p`.

use num_bigint::BigUint;
use rand::Rng;

/// Ascending coefficients in `[0, p)`, trailing zeros stripped.
pub(crate) type PolyP = Vec<u64>;

#[derive(Clone, Copy, Debug)]
pub(crate) struct Fp {
    pub p: u64,
}

impl Fp {
    pub fn new(p: u64) -> Self {
        debug_assert!(p < (1 << 31));
        Fp { p }
    }

    fn trim(mut a: PolyP) -> PolyP {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    pub fn inv(&self, a: u64) -> u64 {
        self.pow_scalar(a, self.p - 2)
    }

    fn pow_scalar(&self, mut a: u64, mut e: u64) -> u64 {
        let mut acc = 1u64;
        a %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * a % self.p;
            }
            a = a * a % self.p;
            e >>= 1;
        }
        acc
    }

    pub fn sub(&self, a: &[u64], b: &[u64]) -> PolyP {
        let n = a.len().max(b.len());
        Self::trim(
            (0..n)
                .map(|i| {
                    (a.get(i).copied().unwrap_or(0) + self.p - b.get(i).copied().unwrap_or(0))
                        % self.p
                })
                .collect(),
        )
    }

    pub fn mul(&self, a: &[u64], b: &[u64]) -> PolyP {
        if a.is_empty() || b.is_empty() {
            return vec![];
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % self.p;
            }
        }
        Self::trim(out)
    }

    pub fn scale(&self, a: &[u64], c: u64) -> PolyP {
        Self::trim(a.iter().map(|&x| x * c % self.p).collect())
    }

    pub fn monic(&self, a: &[u64]) -> PolyP {
        match a.last() {
            None => vec![],
            Some(&lc) => self.scale(a, self.inv(lc)),
        }
    }

    pub fn div_rem(&self, a: &[u64], b: &[u64]) -> (PolyP, PolyP) {
        assert!(!b.is_empty(), "division by zero polynomial mod p");
        let mut rem = a.to_vec();
        if a.len() < b.len() {
            return (vec![], Self::trim(rem));
        }
        let db = b.len() - 1;
        let inv = self.inv(*b.last().unwrap());
        let mut quot = vec![0u64; a.len() - db];
        for k in (0..quot.len()).rev() {
            let c = rem[k + db] * inv % self.p;
            if c == 0 {
                continue;
            }
            for (j, &bc) in b.iter().enumerate() {
                rem[k + j] = (rem[k + j] + self.p - c * bc % self.p) % self.p;
            }
            quot[k] = c;
        }
        rem.truncate(db);
        (Self::trim(quot), Self::trim(rem))
    }

    pub fn rem(&self, a: &[u64], b: &[u64]) -> PolyP {
        self.div_rem(a, b).1
    }

    pub fn gcd(&self, a: &[u64], b: &[u64]) -> PolyP {
        let (mut x, mut y) = (a.to_vec(), b.to_vec());
        while !y.is_empty() {
            let r = self.rem(&x, &y);
            x = y;
            y = r;
        }
        self.monic(&x)
    }

    /// Inverse of `a` modulo `m`; `None` when they are not coprime.
    pub fn inv_mod(&self, a: &[u64], m: &[u64]) -> Option<PolyP> {
        // extended Euclid tracking only the coefficient of a
        let (mut r0, mut r1) = (m.to_vec(), self.rem(a, m));
        let (mut t0, mut t1): (PolyP, PolyP) = (vec![], vec![1]);
        while !r1.is_empty() {
            let (q, r) = self.div_rem(&r0, &r1);
            let t2 = self.sub(&t0, &self.mul(&q, &t1));
            r0 = r1;
            r1 = r;
            t0 = t1;
            t1 = t2;
        }
        if r0.len() != 1 {
            return None;
        }
        let c = self.inv(r0[0]);
        Some(self.rem(&self.scale(&t0, c), m))
    }

    pub fn derivative(&self, a: &[u64]) -> PolyP {
        Self::trim(
            a.iter()
                .enumerate()
                .skip(1)
                .map(|(k, &c)| (k as u64 % self.p) * c % self.p)
                .collect(),
        )
    }

    pub fn pow_mod(&self, base: &[u64], exp: &BigUint, m: &[u64]) -> PolyP {
        let mut acc: PolyP = vec![1];
        let mut b = self.rem(base, m);
        let bits = exp.bits();
        for i in 0..bits {
            if exp.bit(i) {
                acc = self.rem(&self.mul(&acc, &b), m);
            }
            if i + 1 < bits {
                b = self.rem(&self.mul(&b, &b), m);
            }
        }
        self.rem(&acc, m)
    }

    pub fn is_squarefree(&self, a: &[u64]) -> bool {
        let d = self.derivative(a);
        !d.is_empty() && self.gcd(a, &d).len() == 1
    }

    /// Complete factorization of a monic squarefree polynomial into monic
    /// irreducibles: distinct-degree splitting followed by Cantor–Zassenhaus
    /// equal-degree splitting. Requires an odd prime.
    pub fn factor_squarefree<R: Rng>(&self, f: &[u64], rng: &mut R) -> Vec<PolyP> {
        let mut out = Vec::new();
        let mut rest = f.to_vec();
        let x: PolyP = vec![0, 1];
        let mut h = x.clone();
        let mut d = 0;
        let pbig = BigUint::from(self.p);
        while rest.len() > 1 {
            d += 1;
            if 2 * d > rest.len() - 1 {
                out.push(rest.clone());
                break;
            }
            h = self.pow_mod(&h, &pbig, &rest);
            let g = self.gcd(&self.sub(&h, &x), &rest);
            if g.len() > 1 {
                self.equal_degree(&g, d, rng, &mut out);
                rest = self.div_rem(&rest, &g).0;
                h = self.rem(&h, &rest);
            }
        }
        out
    }

    fn equal_degree<R: Rng>(&self, g: &[u64], d: usize, rng: &mut R, out: &mut Vec<PolyP>) {
        let n = g.len() - 1;
        if n == d {
            out.push(g.to_vec());
            return;
        }
        let exp = (BigUint::from(self.p).pow(d as u32) - 1u32) / 2u32;
        loop {
            let a: PolyP = Self::trim((0..n).map(|_| rng.gen_range(0..self.p)).collect());
            if a.len() < 2 {
                continue;
            }
            let b = self.sub(&self.pow_mod(&a, &exp, g), &[1]);
            let h = self.gcd(&b, g);
            if h.len() > 1 && h.len() < g.len() {
                let other = self.div_rem(g, &h).0;
                self.equal_degree(&h, d, rng, out);
                self.equal_degree(&self.monic(&other), d, rng, out);
                return;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn factors_mod_seven() {
        let f = Fp::new(7);
        // (x+1)(x+2)(x^2+1) mod 7; x^2+1 is irreducible since 7 = 3 mod 4
        let poly = f.mul(&f.mul(&[1, 1], &[2, 1]), &[1, 0, 1]);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        let mut got = f.factor_squarefree(&poly, &mut rng);
        got.sort();
        assert_eq!(got, vec![vec![1, 0, 1], vec![1, 1], vec![2, 1]]);
    }

    #[test]
    fn inverse_mod_polynomial() {
        let f = Fp::new(5);
        let m = vec![2, 0, 1];
        let a = vec![2, 1];
        let inv = f.inv_mod(&a, &m).unwrap();
        assert_eq!(f.rem(&f.mul(&a, &inv), &m), vec![1]);
    }
}
