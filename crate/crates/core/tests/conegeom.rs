mod common;

use num_traits::Zero;
use proptest::prelude::*;
use rand::Rng;

use latfix::conegeom::simplex::{minimize, LpOutcome};
use latfix::conegeom::{
    classify_subspace, least_upper_bound_in, modulus_in, positive_cone, sign_pattern_sublattice_oracle,
    Subspace, Verdict,
};
use latfix::exactnum::Rational;
use latfix::random::{random_member, random_subspace, small_nonneg_rational, trial_rng, TrialRng};
use latfix::QVector;

fn nonneg_combination(rng: &mut TrialRng, rays: &[QVector], n: usize) -> QVector {
    rays.iter().fold(QVector::zeros(n), |acc, r| &acc + &r.scale(&small_nonneg_rational(rng, 4, 3)))
}

/// Exact test that `x` is a nonnegative combination of `rays`.
fn in_cone(rays: &[QVector], x: &QVector) -> bool {
    let a: Vec<Vec<Rational>> = (0..x.dim())
        .map(|i| rays.iter().map(|r| r.entries()[i].clone()).collect())
        .collect();
    let c = vec![Rational::zero(); rays.len()];
    if rays.is_empty() {
        return x.is_zero();
    }
    matches!(minimize(&c, &a, x.entries()), LpOutcome::Optimal { .. })
}

proptest! {
    #![proptest_config(common::proptest_config(200))]

    #[test]
    fn rays_generate_the_positive_part(seed in any::<u64>(), n in 1usize..=6) {
        let mut rng = trial_rng(seed, 0);
        let f = random_subspace(&mut rng, n);
        let rays = positive_cone(&f).rays;
        for (i, r) in rays.iter().enumerate() {
            prop_assert!(r.is_nonnegative() && !r.is_zero());
            prop_assert!(f.contains(r));
            prop_assert_eq!(&r.primitive(), r);
            prop_assert!(r.entries().iter().all(|x| x.is_integer()));
            if i > 0 {
                prop_assert!(rays[i - 1].entries() < r.entries());
            }
        }
        for _ in 0..20 {
            let x = nonneg_combination(&mut rng, &rays, n);
            prop_assert!(f.contains(&x) && x.is_nonnegative());
        }
        // rejection samples of F ∩ R^n_+
        for _ in 0..200 {
            let x = random_member(&mut rng, &f);
            if x.is_nonnegative() {
                prop_assert!(in_cone(&rays, &x), "{} not generated", x);
            }
        }
    }

    #[test]
    fn least_upper_bounds_are_least(seed in any::<u64>(), n in 1usize..=5) {
        let mut rng = trial_rng(seed, 0);
        let f = random_subspace(&mut rng, n);
        let rays = positive_cone(&f).rays;
        let g: Vec<QVector> = (0..rng.gen_range(1..=3)).map(|_| random_member(&mut rng, &f)).collect();
        let Some(u) = least_upper_bound_in(&f, &g).unwrap() else { return Ok(()) };
        prop_assert!(f.contains(&u));
        for x in &g {
            prop_assert!(u.dominates(x));
        }
        let mut tested = 0;
        for _ in 0..400 {
            if tested == 100 {
                break;
            }
            let z = if rng.gen_bool(0.5) {
                &u + &nonneg_combination(&mut rng, &rays, n)
            } else {
                random_member(&mut rng, &f)
            };
            if g.iter().all(|x| z.dominates(x)) {
                tested += 1;
                prop_assert!(z.dominates(&u), "upper bound {} not above {}", z, u);
            }
        }
    }

    #[test]
    fn modulus_of_positive_vectors(seed in any::<u64>(), n in 1usize..=6) {
        let mut rng = trial_rng(seed, 0);
        let f = random_subspace(&mut rng, n);
        let c = classify_subspace(&f).unwrap();
        prop_assume!(c.verdict != Verdict::NotLatticeSubspace);
        let x = nonneg_combination(&mut rng, &c.rays, n);
        prop_assert_eq!(modulus_in(&f, &x).unwrap(), Some(x));
        let y = random_member(&mut rng, &f);
        let m = modulus_in(&f, &y).unwrap().expect("lattice subspaces have moduli");
        prop_assert!(m.dominates(&y.abs()));
        if c.verdict == Verdict::Sublattice {
            prop_assert_eq!(m, y.abs());
        }
    }
}

fn span(n: usize, vs: &[&[i64]]) -> Subspace {
    Subspace::span(n, &vs.iter().map(|v| QVector::from_i64(v)).collect::<Vec<_>>()).unwrap()
}

#[test]
fn curated_corpus_agrees_with_oracle() {
    let corpus = [
        (span(3, &[&[1, 1, 1], &[1, 0, -1]]), Verdict::LatticeSubspaceOnly),
        (span(3, &[&[1, 0, -1], &[0, 1, 0]]), Verdict::NotLatticeSubspace),
        (span(2, &[&[1, -1]]), Verdict::NotLatticeSubspace),
        (span(3, &[&[1, 1, 0], &[0, 0, 1]]), Verdict::Sublattice),
        (span(4, &[&[1, 1, 1, 1]]), Verdict::Sublattice),
        (span(3, &[&[1, 2, 0]]), Verdict::Sublattice),
        (span(3, &[&[1, 1, 0], &[0, 1, 1]]), Verdict::LatticeSubspaceOnly),
        (span(4, &[&[1, 0, 1, 0], &[0, 1, 0, 1], &[1, 1, 0, 0]]), Verdict::NotLatticeSubspace),
        (Subspace::full(5), Verdict::Sublattice),
    ];
    for (f, expected) in corpus {
        let c = classify_subspace(&f).unwrap();
        assert_eq!(c.verdict, expected, "{:?}", f);
        assert_eq!(sign_pattern_sublattice_oracle(&f).unwrap(), expected == Verdict::Sublattice);
    }
}

#[test]
fn four_ray_cone_lacks_a_supremum() {
    // a cone over a square in a 3-dimensional subspace of R^4
    let f = span(4, &[&[1, 0, 1, 0], &[0, 1, 0, 1], &[1, 1, 0, 0]]);
    let c = classify_subspace(&f).unwrap();
    assert_eq!(c.rays.len(), 4);
    assert!(c.cone_generating && !c.cone_simplicial);
    let found = c.rays.iter().enumerate().any(|(i, x)| {
        c.rays[i + 1..]
            .iter()
            .any(|y| least_upper_bound_in(&f, &[x.clone(), y.clone()]).unwrap().is_none())
    });
    assert!(found);
}
