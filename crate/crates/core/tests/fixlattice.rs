mod common;

use proptest::prelude::*;
use rand::Rng;

use latfix::conegeom::am_property_check;
use latfix::exactnum::{fix_projection, q, qi};
use latfix::fixlattice::{
    fixed_space_of, fixed_space_report, least_fixed_above, matrix_transfinite_trace, sup_in_fixspace,
    Conformance, TraceOutcome, TraceVector, DEFAULT_LIMIT_STEP_BUDGET,
};
use latfix::opcore::{NormTag, OperatorFamily, PositiveMatrixOperator};
use latfix::random::{random_commuting_family, random_member, random_positive_contraction, trial_rng};
use latfix::{Error, QMatrix, QVector};

proptest! {
    #![proptest_config(common::proptest_config(100))]

    #[test]
    fn matrix_traces_need_one_limit_step(seed in any::<u64>(), n in 1usize..=6) {
        let mut rng = trial_rng(seed, 0);
        let t = PositiveMatrixOperator::new(random_positive_contraction(&mut rng, n), NormTag::Sup).unwrap();
        let f = fixed_space_of(&t).unwrap();
        prop_assume!(!f.is_zero());
        let g: Vec<QVector> = (0..rng.gen_range(1..=3)).map(|_| random_member(&mut rng, &f)).collect();
        let trace = matrix_transfinite_trace(&t, &g, DEFAULT_LIMIT_STEP_BUDGET).unwrap();
        let TraceOutcome::FixedPointReached { vector: TraceVector::Finite(v), limit_steps } = &trace.outcome else {
            return Err(TestCaseError::fail(format!("{:?}", trace.outcome)));
        };
        prop_assert!(*limit_steps <= 1);
        let family = OperatorFamily::single(t.clone());
        prop_assert_eq!(v, &sup_in_fixspace(&family, &g).unwrap().g_f);
    }

    #[test]
    fn conformant_families_keep_the_am_property(seed in any::<u64>(), n in 1usize..=5) {
        let mut rng = trial_rng(seed, 0);
        let members = random_commuting_family(&mut rng, n)
            .into_iter()
            .map(|m| PositiveMatrixOperator::new(m, NormTag::Sup).unwrap())
            .collect();
        let family = OperatorFamily::new(members).unwrap();
        let report = fixed_space_report(&family).unwrap();
        prop_assert_eq!(report.conformance, Conformance::Conformant);
        if !report.fixed_space.is_zero() {
            prop_assert!(am_property_check(&report.fixed_space, 100, seed).unwrap());
        }
    }
}

fn markov_s() -> PositiveMatrixOperator {
    let m = QMatrix::from_rows(vec![
        vec![qi(1), qi(0), qi(0)],
        vec![q(1, 3), q(1, 3), q(1, 3)],
        vec![qi(0), qi(0), qi(1)],
    ])
    .unwrap();
    PositiveMatrixOperator::new(m, NormTag::Sup).unwrap()
}

#[test]
fn least_fixed_above_examples() {
    let family = OperatorFamily::single(markov_s());
    let g = QVector::from_i64(&[1, 0, 1]);
    let f = least_fixed_above(&family, &g).unwrap();
    assert_eq!(f, QVector::from_i64(&[1, 1, 1]));
    assert_eq!(f, fix_projection(markov_s().matrix()).unwrap().mul_vec(&g));
    assert_eq!(least_fixed_above(&family, &QVector::zeros(3)).unwrap(), QVector::zeros(3));
    assert_eq!(
        least_fixed_above(&family, &QVector::from_i64(&[0, 1, 0])),
        Err(Error::NotSuperFixed(0))
    );
}
