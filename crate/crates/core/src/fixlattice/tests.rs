use super::*;
use crate::conegeom::Verdict;
use crate::exactnum::{q, qi, QMatrix, QVector};
use crate::opcore::{NormTag, OperatorFamily, PositiveMatrixOperator};
use crate::seqspace::{e41, e42, e42_start, e43, e43_f, ChainValue};
use crate::Error;

fn s_matrix() -> QMatrix {
    QMatrix::from_rows(vec![
        vec![qi(1), qi(0), qi(0)],
        vec![q(1, 3), q(1, 3), q(1, 3)],
        vec![qi(0), qi(0), qi(1)],
    ])
    .unwrap()
}

fn s_family() -> OperatorFamily {
    OperatorFamily::single(PositiveMatrixOperator::new(s_matrix(), NormTag::Sup).unwrap())
}

fn v(xs: &[i64]) -> QVector {
    QVector::from_i64(xs)
}

#[test]
fn fixed_spaces() {
    let f = fixed_space_of_family(&s_family()).unwrap();
    let expected = crate::conegeom::Subspace::span(3, &[v(&[1, 1, 1]), v(&[1, 0, -1])]).unwrap();
    assert_eq!(f, expected);
    let id = PositiveMatrixOperator::new(QMatrix::identity(3), NormTag::Sup).unwrap();
    let fam = OperatorFamily::new(vec![id.clone(), id]).unwrap();
    assert_eq!(fixed_space_of_family(&fam).unwrap().dim(), 3);
    let s = PositiveMatrixOperator::new(s_matrix(), NormTag::Sup).unwrap();
    let fam = OperatorFamily::new(vec![s.clone(), s.power(2)]).unwrap();
    assert_eq!(fixed_space_of_family(&fam).unwrap(), expected);
}

#[test]
fn reports() {
    let r = fixed_space_report(&s_family()).unwrap();
    assert!(r.family_valid);
    assert_eq!(r.classification.as_ref().unwrap().verdict, Verdict::LatticeSubspaceOnly);
    assert_eq!(r.conformance, Conformance::Conformant);
    assert!(r.norm_checks.iter().all(|c| c.equal));

    let t = QMatrix::from_i64(&[&[1, 0, 0], &[1, 1, 1], &[0, 0, 1]]);
    let r = fixed_space_report_raw(&[t], &NormTag::Sup).unwrap();
    assert!(!r.family_valid);
    assert_eq!(r.classification.as_ref().unwrap().verdict, Verdict::NotLatticeSubspace);
    assert_eq!(r.conformance, Conformance::NotApplicable);
}

#[test]
fn suprema_in_fix_space() {
    let fam = s_family();
    let out = sup_in_fixspace(&fam, &[v(&[1, 0, -1]), v(&[-1, 0, 1])]).unwrap();
    assert_eq!(out.g_e, v(&[1, 0, 1]));
    assert_eq!(out.g_f, v(&[1, 1, 1]));
    let single = sup_in_fixspace(&fam, &[v(&[2, 1, 0])]).unwrap();
    assert_eq!(single.g_f, v(&[2, 1, 0]));
    let out = sup_in_fixspace(&fam, &[v(&[1, 1, 1]), v(&[1, 0, -1])]).unwrap();
    assert_eq!(out.g_e, v(&[1, 1, 1]));
    assert_eq!(out.g_f, v(&[1, 1, 1]));
    assert!(matches!(sup_in_fixspace(&fam, &[v(&[1, 0, 0])]), Err(Error::NotInSubspace(0))));
}

#[test]
fn least_fixed_vectors() {
    let fam = s_family();
    assert_eq!(least_fixed_above(&fam, &v(&[1, 0, 1])).unwrap(), v(&[1, 1, 1]));
    assert_eq!(least_fixed_above(&fam, &v(&[2, 1, 0])).unwrap(), v(&[2, 1, 0]));
    assert_eq!(least_fixed_above(&fam, &v(&[0, 0, 0])).unwrap(), v(&[0, 0, 0]));
    assert!(matches!(least_fixed_above(&fam, &v(&[0, 1, 0])), Err(Error::NotSuperFixed(0))));
}

#[test]
fn matrix_trace_takes_one_step() {
    let t = PositiveMatrixOperator::new(s_matrix(), NormTag::Sup).unwrap();
    let tr = matrix_transfinite_trace(&t, &[v(&[1, 0, -1]), v(&[-1, 0, 1])], DEFAULT_LIMIT_STEP_BUDGET).unwrap();
    assert_eq!(
        tr.outcome,
        TraceOutcome::FixedPointReached {
            vector: TraceVector::Finite(v(&[1, 1, 1])),
            limit_steps: 1
        }
    );
}

#[test]
fn symbolic_traces() {
    let t = e42();
    let fhat = crate::seqspace::SymbolicVector::new(
        vec![qi(1), qi(0), qi(-1)],
        vec![ChainValue::zero(), ChainValue::zero()],
        vec![],
    );
    let tr = symbolic_transfinite_trace(&t, 1, &[fhat.clone(), fhat.neg()], DEFAULT_LIMIT_STEP_BUDGET).unwrap();
    assert_eq!(tr.start, TraceVector::Symbolic(e42_start()));
    assert_eq!(tr.steps.len(), 2);
    assert!(!tr.steps[0].is_fixed && tr.steps[1].is_fixed);
    match &tr.outcome {
        TraceOutcome::FixedPointReached {
            vector: TraceVector::Symbolic(g2),
            limit_steps: 2,
        } => {
            assert_eq!(g2.finite_part(), &[qi(1), qi(1), qi(1)]);
            assert!(g2.chains().iter().all(|c| *c == ChainValue::constant(qi(1))));
        }
        other => panic!("{other:?}"),
    }

    let f = e43_f();
    let tr = symbolic_transfinite_trace(&e43(), 2, &[f.clone(), f.neg()], DEFAULT_LIMIT_STEP_BUDGET).unwrap();
    assert_eq!(tr.outcome, TraceOutcome::Unbounded { step_norms: vec![qi(1), qi(2), qi(4)] });
    assert!(matches!(
        symbolic_transfinite_trace(&e43(), 1, &[f], 8),
        Err(Error::NotInSubspace(0))
    ));
}

#[test]
fn symbolic_classifications() {
    let e41_fix = SymbolicFixedSpace::new(&e41(), 1).unwrap();
    assert_eq!(e41_fix.classification.unwrap().verdict, Verdict::NotLatticeSubspace);
    let e43_fix = SymbolicFixedSpace::new(&e43(), 2).unwrap();
    assert_eq!(e43_fix.basis, vec![e43_f()]);
    assert_eq!(e43_fix.classification.unwrap().verdict, Verdict::NotLatticeSubspace);
    assert!(SymbolicFixedSpace::new(&e43(), 1).unwrap().classification.is_none());

    let e42_fix = SymbolicFixedSpace::new(&e42(), 1).unwrap();
    assert_eq!(
        e42_fix.classification.as_ref().unwrap().verdict,
        Verdict::LatticeSubspaceOnly
    );
    // the LP supremum agrees with the two-step trace
    let fhat = crate::seqspace::SymbolicVector::new(
        vec![qi(1), qi(0), qi(-1)],
        vec![ChainValue::zero(), ChainValue::zero()],
        vec![],
    );
    let sup = e42_fix.sup_of(&[fhat.clone(), fhat.neg()]).unwrap().unwrap();
    assert_eq!(sup, v(&[1, 1, 1, 1, 1]));
}
