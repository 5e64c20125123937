//! Seeded generators for randomized checks.
//!
//! Every trial gets its own ChaCha stream derived from `(seed, trial)`, so a
//! batch produces the same samples whether it runs sequentially or on many
//! threads.

use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::conegeom::Subspace;
use crate::exactnum::{q, QMatrix, QVector, Rational};

pub type TrialRng = ChaCha8Rng;

pub fn trial_rng(seed: u64, trial: u64) -> TrialRng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

/// `a/b` with `|a| <= num_bound` and `1 <= b <= max_den`.
pub fn small_rational<R: Rng>(rng: &mut R, num_bound: i64, max_den: i64) -> Rational {
    q(rng.gen_range(-num_bound..=num_bound), rng.gen_range(1..=max_den))
}

pub fn small_nonneg_rational<R: Rng>(rng: &mut R, num_bound: i64, max_den: i64) -> Rational {
    q(rng.gen_range(0..=num_bound), rng.gen_range(1..=max_den))
}

pub fn random_vector<R: Rng>(rng: &mut R, n: usize, num_bound: i64, max_den: i64) -> QVector {
    QVector::from((0..n).map(|_| small_rational(rng, num_bound, max_den)).collect::<Vec<_>>())
}

pub fn random_nonneg_vector<R: Rng>(rng: &mut R, n: usize, num_bound: i64, max_den: i64) -> QVector {
    QVector::from(
        (0..n)
            .map(|_| small_nonneg_rational(rng, num_bound, max_den))
            .collect::<Vec<_>>(),
    )
}

pub fn random_integer_matrix<R: Rng>(rng: &mut R, rows: usize, cols: usize, lo: i64, hi: i64) -> QMatrix {
    QMatrix::from_rows(
        (0..rows)
            .map(|_| (0..cols).map(|_| Rational::from_integer(rng.gen_range(lo..=hi).into())).collect())
            .collect(),
    )
    .expect("nonempty")
}

/// A nonzero subspace of `Q^n`, mixing generic spans with structured ones
/// so that all three order types show up.
pub fn random_subspace<R: Rng>(rng: &mut R, n: usize) -> Subspace {
    loop {
        let k = rng.gen_range(1..=n);
        let vectors: Vec<QVector> = match rng.gen_range(0..4) {
            // generic integer span
            0 => (0..k)
                .map(|_| QVector::from_i64(&(0..n).map(|_| rng.gen_range(-2..=2)).collect::<Vec<_>>()))
                .collect(),
            // disjointly supported positive blocks
            1 => {
                let labels: Vec<usize> = (0..n).map(|_| rng.gen_range(0..=k)).collect();
                (0..k)
                    .map(|b| {
                        QVector::from_i64(
                            &labels
                                .iter()
                                .map(|&l| if l == b { rng.gen_range(1..=3) } else { 0 })
                                .collect::<Vec<_>>(),
                        )
                    })
                    .collect()
            }
            // sparse nonnegative generators, often overlapping
            2 => (0..k)
                .map(|_| {
                    QVector::from_i64(
                        &(0..n)
                            .map(|_| if rng.gen_bool(0.4) { rng.gen_range(1..=2) } else { 0 })
                            .collect::<Vec<_>>(),
                    )
                })
                .collect(),
            // positive vectors plus one signed direction
            _ => {
                let mut vs: Vec<QVector> = (0..k.saturating_sub(1))
                    .map(|_| QVector::from_i64(&(0..n).map(|_| rng.gen_range(0..=2)).collect::<Vec<_>>()))
                    .collect();
                vs.push(QVector::from_i64(&(0..n).map(|_| rng.gen_range(-1..=1)).collect::<Vec<_>>()));
                vs
            }
        };
        let s = Subspace::span(n, &vectors).expect("matching dimensions");
        if !s.is_zero() {
            return s;
        }
    }
}

/// Random element of `F` with small rational coordinates.
pub fn random_member<R: Rng>(rng: &mut R, f: &Subspace) -> QVector {
    let c: Vec<Rational> = (0..f.dim()).map(|_| small_rational(rng, 4, 3)).collect();
    f.combine(&c)
}

/// Random permutation of `0..n`.
pub fn random_permutation<R: Rng>(rng: &mut R, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

/// `P M P^T` for the permutation `perm`; preserves positivity and all the
/// lattice norms used here.
pub fn permute(m: &QMatrix, perm: &[usize]) -> QMatrix {
    let n = m.nrows();
    let mut out = QMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            out.set(perm[i], perm[j], m.get(i, j).clone());
        }
    }
    out
}

/// Nonnegative row with small integer weights summing to `total`.
fn random_distribution<R: Rng>(rng: &mut R, n: usize, total: &Rational, density: f64) -> Vec<Rational> {
    let mut w: Vec<i64> = (0..n)
        .map(|_| if rng.gen_bool(density) { rng.gen_range(1..=4) } else { 0 })
        .collect();
    if w.iter().all(|&x| x == 0) {
        w[rng.gen_range(0..n)] = 1;
    }
    let sum: i64 = w.iter().sum();
    w.into_iter().map(|x| q(x, sum) * total).collect()
}

/// Entrywise nonnegative matrix with row sums at most one.
pub fn random_substochastic<R: Rng>(rng: &mut R, n: usize) -> QMatrix {
    let rows = (0..n)
        .map(|_| {
            let total = if rng.gen_bool(0.5) {
                Rational::one()
            } else {
                small_nonneg_rational(rng, 3, 3).min(Rational::one())
            };
            random_distribution(rng, n, &total, 0.5)
        })
        .collect();
    QMatrix::from_rows(rows).expect("square")
}

/// Stochastic matrix where `absorbing` coordinates are fixed and the other
/// rows spread mass over everything, like a random walk with traps.
pub fn random_absorbing_chain<R: Rng>(rng: &mut R, n: usize, absorbing: usize) -> QMatrix {
    let absorbing = absorbing.clamp(1, n);
    let rows = (0..n)
        .map(|i| {
            if i < absorbing {
                (0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect()
            } else {
                random_distribution(rng, n, &Rational::one(), 0.6)
            }
        })
        .collect();
    QMatrix::from_rows(rows).expect("square")
}

/// Cyclic permutation matrix of order `n`.
pub fn cycle_matrix(n: usize) -> QMatrix {
    let mut m = QMatrix::zeros(n, n);
    for i in 0..n {
        m.set(i, (i + 1) % n, Rational::one());
    }
    m
}

/// Cycle of length `cycle` next to a strict contraction of size `extra`
/// (row sums at most 1/2), conjugated by a random permutation.
pub fn planted_cyclic_block<R: Rng>(rng: &mut R, cycle: usize, extra: usize) -> QMatrix {
    let mut m = cycle_matrix(cycle);
    if extra > 0 {
        let rows = (0..extra)
            .map(|_| {
                let total = q(1, rng.gen_range(2..=4));
                random_distribution(rng, extra, &total, 0.6)
            })
            .collect();
        m = m.direct_sum(&QMatrix::from_rows(rows).expect("square"));
    }
    let perm = random_permutation(rng, m.nrows());
    permute(&m, &perm)
}

/// Positive sup-norm contraction of size `n`, drawn from a mix of shapes:
/// substochastic, absorbing chains, permutation-like and planted cycles.
pub fn random_positive_contraction<R: Rng>(rng: &mut R, n: usize) -> QMatrix {
    match rng.gen_range(0..4) {
        0 => random_substochastic(rng, n),
        1 => {
            let k = rng.gen_range(1..=n);
            let perm = random_permutation(rng, n);
            permute(&random_absorbing_chain(rng, n, k), &perm)
        }
        2 => {
            // permutation with some rows damped
            let perm = random_permutation(rng, n);
            let mut m = QMatrix::zeros(n, n);
            for (i, &j) in perm.iter().enumerate() {
                let w = if rng.gen_bool(0.7) { Rational::one() } else { q(rng.gen_range(0..=2), 3) };
                m.set(i, j, w);
            }
            m
        }
        _ => {
            let cycle = rng.gen_range(1..=n);
            planted_cyclic_block(rng, cycle, n - cycle)
        }
    }
}

/// Commuting family of sup-norm positive contractions: either powers of one
/// operator or a block-diagonal family whose blocks are powers of a common
/// block, conjugated by one permutation.
pub fn random_commuting_family<R: Rng>(rng: &mut R, n: usize) -> Vec<QMatrix> {
    if rng.gen_bool(0.5) {
        let t = random_positive_contraction(rng, n);
        let t2 = &t * &t;
        let t3 = &t2 * &t;
        return vec![t, t2, t3];
    }
    let members = rng.gen_range(2..=3);
    let mut blocks: Vec<QMatrix> = vec![];
    let mut left = n;
    while left > 0 {
        let size = rng.gen_range(1..=left);
        blocks.push(if rng.gen_bool(0.5) {
            let k = rng.gen_range(1..=size);
            random_absorbing_chain(rng, size, k)
        } else {
            random_positive_contraction(rng, size)
        });
        left -= size;
    }
    let perm = random_permutation(rng, n);
    (0..members)
        .map(|_| {
            let mut m: Option<QMatrix> = None;
            for b in &blocks {
                let e = rng.gen_range(0..=2u32);
                let piece = b.pow(e);
                m = Some(match m {
                    None => piece,
                    Some(acc) => acc.direct_sum(&piece),
                });
            }
            permute(&m.expect("at least one block"), &perm)
        })
        .collect()
}

/// Positive `l1` contraction (column sums at most one) with a nontrivial
/// fixed space: a column-stochastic block next to an optional damped block.
pub fn random_l1_contraction_with_fixed<R: Rng>(rng: &mut R, n: usize) -> QMatrix {
    let stochastic = rng.gen_range(1..=n);
    let row_stochastic = if rng.gen_bool(0.5) {
        let k = rng.gen_range(1..=stochastic);
        random_absorbing_chain(rng, stochastic, k)
    } else {
        let rows = (0..stochastic)
            .map(|_| random_distribution(rng, stochastic, &Rational::one(), 0.5))
            .collect();
        QMatrix::from_rows(rows).expect("square")
    };
    let mut m = row_stochastic.transpose();
    if stochastic < n {
        m = m.direct_sum(&random_substochastic(rng, n - stochastic).transpose());
    }
    let perm = random_permutation(rng, n);
    permute(&m, &perm)
}

/// Metzler matrix with nonpositive sup-norm logarithmic norm.
pub fn random_dissipative_metzler<R: Rng>(rng: &mut R, n: usize) -> QMatrix {
    let mut m = QMatrix::zeros(n, n);
    for i in 0..n {
        let mut off = Rational::zero();
        for j in 0..n {
            if i != j && rng.gen_bool(0.5) {
                let x = small_nonneg_rational(rng, 3, 2);
                off += &x;
                m.set(i, j, x);
            }
        }
        let slack = if rng.gen_bool(0.5) { Rational::zero() } else { small_nonneg_rational(rng, 2, 2) };
        m.set(i, i, -(off + slack));
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn streams_are_reproducible() {
        let a: Vec<u32> = (0..4).map(|t| trial_rng(7, t).gen()).collect();
        let b: Vec<u32> = (0..4).map(|t| trial_rng(7, t).gen()).collect();
        assert_eq!(a, b);
        assert_ne!(a[0], a[1]);
    }
}
