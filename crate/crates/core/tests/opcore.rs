mod common;

use proptest::prelude::*;
use rand::Rng;

use latfix::conegeom::{classify_subspace, Verdict};
use latfix::exactnum::{q, qi, Rational};
use latfix::fixlattice::fixed_space_of;
use latfix::opcore::{
    contraction_check, operator_norm, power_bounded_verdict, NormTag, OperatorFamily,
    PositiveMatrixOperator, PowerBoundedness,
};
use latfix::random::{
    random_integer_matrix, random_l1_contraction_with_fixed, random_member, random_nonneg_vector,
    random_positive_contraction, trial_rng,
};
use latfix::{Error, QMatrix, QVector};

fn norm_tag(rng: &mut impl Rng, n: usize) -> NormTag {
    match rng.gen_range(0..3) {
        0 => NormTag::Sup,
        1 => NormTag::One,
        _ => {
            let w = random_nonneg_vector(rng, n, 3, 2);
            let w = w.iter().map(|x| if *x == qi(0) { qi(1) } else { x.clone() }).collect();
            NormTag::WeightedOne(QVector::new(w).unwrap())
        }
    }
}

proptest! {
    #![proptest_config(common::proptest_config(200))]

    #[test]
    fn operator_norm_is_submultiplicative(seed in any::<u64>(), n in 1usize..=5) {
        let mut rng = trial_rng(seed, 0);
        let tag = norm_tag(&mut rng, n);
        let a = random_integer_matrix(&mut rng, n, n, 0, 3).scale(&q(1, rng.gen_range(1..=4)));
        let b = random_integer_matrix(&mut rng, n, n, 0, 3).scale(&q(1, rng.gen_range(1..=4)));
        let t = PositiveMatrixOperator::new(a, tag.clone()).unwrap();
        let u = PositiveMatrixOperator::new(b, tag).unwrap();
        let tu = t.compose(&u).unwrap();
        prop_assert!(operator_norm(&tu) <= operator_norm(&t) * operator_norm(&u));
    }

    #[test]
    fn families_reject_noncommuting_pairs(seed in any::<u64>(), n in 1usize..=4) {
        let mut rng = trial_rng(seed, 0);
        let a = random_integer_matrix(&mut rng, n, n, 0, 2);
        let b = if rng.gen_bool(0.3) { &a * &a } else { random_integer_matrix(&mut rng, n, n, 0, 2) };
        let commute = &a * &b == &b * &a;
        let ops = vec![
            PositiveMatrixOperator::new(a, NormTag::Sup).unwrap(),
            PositiveMatrixOperator::new(b, NormTag::Sup).unwrap(),
        ];
        match OperatorFamily::new(ops) {
            Ok(_) => prop_assert!(commute),
            Err(e) => {
                prop_assert!(!commute);
                prop_assert_eq!(e, Error::NonCommuting(0, 1));
            }
        }
    }

    #[test]
    fn strictly_monotone_norms_fix_moduli(seed in any::<u64>(), n in 1usize..=6) {
        let mut rng = trial_rng(seed, 0);
        let m = random_l1_contraction_with_fixed(&mut rng, n);
        let (m, tag) = if rng.gen_bool(0.5) {
            (m, NormTag::One)
        } else {
            // W^{-1} M W is a contraction for the weighted l1 norm with weights w
            let w: Vec<Rational> = (0..n).map(|_| q(rng.gen_range(1..=5), rng.gen_range(1..=3))).collect();
            let wm = QMatrix::diagonal(&w);
            let wi = wm.inverse().unwrap();
            (&(&wi * &m) * &wm, NormTag::WeightedOne(QVector::new(w).unwrap()))
        };
        let t = PositiveMatrixOperator::new(m, tag).unwrap();
        prop_assert!(t.norm_tag().is_strictly_monotone());
        prop_assert!(contraction_check(&t));
        let f = fixed_space_of(&t).unwrap();
        prop_assert!(!f.is_zero());
        for _ in 0..5 {
            let x = random_member(&mut rng, &f).abs();
            prop_assert_eq!(t.apply(&x).unwrap(), x);
        }
        prop_assert_eq!(classify_subspace(&f).unwrap().verdict, Verdict::Sublattice);
    }
}

proptest! {
    #![proptest_config(common::proptest_config(40))]

    #[test]
    fn power_bounded_norms_stay_bounded(seed in any::<u64>(), n in 1usize..=4) {
        let mut rng = trial_rng(seed, 0);
        let scale = q(rng.gen_range(2..=6), 4);
        let m = random_positive_contraction(&mut rng, n).scale(&scale);
        let t = PositiveMatrixOperator::new(m, NormTag::Sup).unwrap();
        let verdict = power_bounded_verdict(&t).unwrap();
        let mut p = t.clone();
        let mut sup_32 = operator_norm(&t);
        let mut sup_64 = sup_32.clone();
        for k in 2..=64 {
            p = p.compose(&t).unwrap();
            let norm = operator_norm(&p);
            if k <= 32 {
                sup_32 = sup_32.max(norm.clone());
            }
            sup_64 = sup_64.max(norm);
        }
        if verdict == PowerBoundedness::Yes {
            prop_assert!(sup_64 <= &sup_32 * qi(2), "{} vs {}", sup_64, sup_32);
        }
        if let PowerBoundedness::No { .. } = verdict {
            prop_assert!(sup_64 > qi(1));
        }
    }
}

#[test]
fn identity_like_and_scaled_examples() {
    let t = PositiveMatrixOperator::new(QMatrix::identity(3).scale(&q(3, 2)), NormTag::One).unwrap();
    assert!(matches!(power_bounded_verdict(&t).unwrap(), PowerBoundedness::No { .. }));
    let s = PositiveMatrixOperator::new(QMatrix::identity(3), NormTag::One).unwrap();
    assert_eq!(power_bounded_verdict(&s).unwrap(), PowerBoundedness::Yes);
}
