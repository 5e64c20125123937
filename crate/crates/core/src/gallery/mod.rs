//! Worked examples as reproducible reports.
//!
//! Every case returns a JSON object with sorted keys, all rationals as
//! strings, and a `checks` object of named boolean assertions about the
//! expected outcome. A case passes when every check is true.

use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::conegeom::{
    am_property_check, classify_subspace, least_upper_bound_in, modulus_in, positive_cone,
    sign_pattern_sublattice_oracle, Subspace, Verdict,
};
use crate::cyclicity::root_of_unity_spectrum;
use crate::error::{Error, Result};
use crate::exactnum::{char_poly, fix_projection, q, qi, QMatrix, QPolynomial, QVector};
use crate::fixlattice::{
    fixed_space_of, fixed_space_report, matrix_transfinite_trace, symbolic_transfinite_trace,
    Conformance, SymbolicFixedSpace, TraceOutcome, TraceVector, DEFAULT_LIMIT_STEP_BUDGET,
};
use crate::opcore::{
    contraction_check, operator_norm, power_bounded_verdict, NormTag, OperatorFamily,
    PositiveMatrixOperator, PowerBoundedness,
};
use crate::seqspace::{
    e41, e42, e43, e43_f, symbolic_eigenspace, symbolic_operator_norm, ChainValue, SymbolicVector,
};

pub const CASE_IDS: [&str; 7] = ["intro-strict", "intro-kb", "e41", "e42a", "e42b", "e43", "e44"];

pub fn case_title(id: &str) -> Option<&'static str> {
    Some(match id {
        "intro-strict" => "l1 contraction: the fixed space is a sublattice",
        "intro-kb" => "power-bounded operator on R^3: orbit limit is the modulus in the fixed space",
        "e41" => "contraction on c0 whose fixed space has no positive vectors",
        "e42a" => "Markov matrix whose fixed space is a lattice subspace but not a sublattice",
        "e42b" => "two limit steps are needed to reach the supremum in the fixed space",
        "e43" => "power-bounded operator of norm 2: -1 is an eigenvalue, 1 is not",
        "e44" => "non-power-bounded matrix whose fixed space is not a lattice subspace",
        _ => return None,
    })
}

pub fn run_case(id: &str) -> Result<Value> {
    let body = match id {
        "intro-strict" => intro_strict()?,
        "intro-kb" => intro_kb()?,
        "e41" => case_e41()?,
        "e42a" => case_e42a()?,
        "e42b" => case_e42b()?,
        "e43" => case_e43()?,
        "e44" => case_e44()?,
        _ => return Err(Error::InvalidInput(format!("unknown gallery case {id:?}"))),
    };
    let mut obj = match body {
        Value::Object(m) => m,
        _ => unreachable!("cases build objects"),
    };
    obj.insert("id".into(), json!(id));
    obj.insert("title".into(), json!(case_title(id)));
    Ok(Value::Object(obj))
}

/// Pretty JSON with sorted keys and a trailing newline.
pub fn canonical_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values always serialize");
    s.push('\n');
    s
}

/// Names of failing checks in a case report.
pub fn failed_checks(report: &Value) -> Vec<String> {
    report
        .get("checks")
        .and_then(Value::as_object)
        .map(|m| {
            m.iter()
                .filter(|(_, v)| v.as_bool() != Some(true))
                .map(|(k, _)| k.clone())
                .collect()
        })
        .unwrap_or_else(|| vec!["checks".into()])
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report types serialize")
}

fn checks(items: &[(&str, bool)]) -> Value {
    let m: Map<String, Value> = items.iter().map(|(k, v)| (k.to_string(), json!(v))).collect();
    Value::Object(m)
}

fn v(xs: &[i64]) -> QVector {
    QVector::from_i64(xs)
}

fn markov_s() -> QMatrix {
    QMatrix::from_rows(vec![
        vec![qi(1), qi(0), qi(0)],
        vec![q(1, 3), q(1, 3), q(1, 3)],
        vec![qi(0), qi(0), qi(1)],
    ])
    .expect("square")
}

fn matrix_summary(t: &PositiveMatrixOperator) -> Result<Value> {
    Ok(json!({
        "matrix": to_value(t.matrix()),
        "norm": to_value(t.norm_tag()),
        "operator_norm": operator_norm(t).to_string(),
        "contractive": contraction_check(t),
        "power_bounded": to_value(&power_bounded_verdict(t)?),
        "char_poly": to_value(&char_poly(t.matrix())?),
    }))
}

fn intro_strict() -> Result<Value> {
    let m = QMatrix::from_rows(vec![
        vec![q(1, 2), q(1, 2), qi(0)],
        vec![q(1, 2), q(1, 2), qi(0)],
        vec![qi(0), qi(0), qi(1)],
    ])?;
    let t = PositiveMatrixOperator::new(m, NormTag::One)?;
    let report = fixed_space_report(&OperatorFamily::single(t.clone()))?;
    let f = v(&[1, 1, -2]);
    let abs_f = f.abs();
    let abs_fixed = t.apply(&abs_f)? == abs_f;
    let oracle = sign_pattern_sublattice_oracle(&report.fixed_space)?;
    let verdict = report.classification.as_ref().map(|c| c.verdict);
    Ok(json!({
        "operator": matrix_summary(&t)?,
        "fixed_space_report": to_value(&report),
        "f": to_value(&f),
        "abs_f": to_value(&abs_f),
        "t_abs_f": to_value(&t.apply(&abs_f)?),
        "sign_pattern_oracle": oracle,
        "checks": checks(&[
            ("contractive_in_l1", contraction_check(&t)),
            ("f_is_fixed", t.apply(&f)? == f),
            ("abs_f_is_fixed", abs_fixed),
            ("sublattice", verdict == Some(Verdict::Sublattice)),
            ("oracle_agrees", oracle),
            ("conformant", report.conformance == Conformance::Conformant),
        ]),
    }))
}

fn intro_kb() -> Result<Value> {
    let d = QMatrix::diagonal(&[qi(1), qi(2), qi(1)]);
    let d_inv = d.inverse().expect("invertible");
    let m = &(&d * &markov_s()) * &d_inv;
    let t = PositiveMatrixOperator::new(m, NormTag::Sup)?;
    let fix = fixed_space_of(&t)?;
    let class = classify_subspace(&fix)?;
    let f = v(&[1, 0, -1]);
    let abs_f = f.abs();
    let orbit_limit = fix_projection(t.matrix())?.mul_vec(&abs_f);
    let modulus = modulus_in(&fix, &f)?;
    let expected_fix = Subspace::span(3, &[v(&[1, 2, 1]), v(&[1, 0, -1])])?;
    Ok(json!({
        "operator": matrix_summary(&t)?,
        "fixed_space": to_value(&fix),
        "classification": to_value(&class),
        "f": to_value(&f),
        "orbit_limit_of_abs_f": to_value(&orbit_limit),
        "modulus_in_fixed_space": to_value(&modulus),
        "checks": checks(&[
            ("not_contractive", !contraction_check(&t)),
            ("power_bounded", power_bounded_verdict(&t)? == PowerBoundedness::Yes),
            ("fixed_space_matches", fix == expected_fix),
            ("lattice_subspace", class.verdict != Verdict::NotLatticeSubspace),
            ("orbit_limit_is_1_2_1", orbit_limit == v(&[1, 2, 1])),
            ("orbit_limit_is_modulus", modulus.as_ref() == Some(&orbit_limit)),
        ]),
    }))
}

fn symbolic_space_value(space: &SymbolicFixedSpace) -> Value {
    json!({
        "basis": to_value(&space.basis),
        "coordinates": to_value(&space.coordinates),
        "embedded": to_value(&space.embedded),
        "classification": to_value(&space.classification),
    })
}

fn case_e41() -> Result<Value> {
    let t = e41();
    let fix = SymbolicFixedSpace::new(&t, 1)?;
    let expected = SymbolicVector::new(vec![qi(1), qi(-1)], vec![ChainValue::zero()], vec![]);
    let verdict = fix.classification.as_ref().map(|c| c.verdict);
    let rays_empty = fix.classification.as_ref().is_some_and(|c| c.rays.is_empty());
    Ok(json!({
        "operator": to_value(&t),
        "symbolic_norm": symbolic_operator_norm(&t).to_string(),
        "fixed_space": symbolic_space_value(&fix),
        "checks": checks(&[
            ("contractive", symbolic_operator_norm(&t) <= qi(1)),
            ("basis_is_u", fix.basis == vec![expected]),
            ("no_positive_fixed_vectors", rays_empty),
            ("not_lattice_subspace", verdict == Some(Verdict::NotLatticeSubspace)),
        ]),
    }))
}

fn case_e42a() -> Result<Value> {
    let t = PositiveMatrixOperator::new(markov_s(), NormTag::Sup)?;
    let report = fixed_space_report(&OperatorFamily::single(t.clone()))?;
    let fix = &report.fixed_space;
    let class = classify_subspace(fix)?;
    let fhat = v(&[1, 0, -1]);
    let modulus = modulus_in(fix, &fhat)?;
    let oracle = sign_pattern_sublattice_oracle(fix)?;
    let am = am_property_check(fix, 100, 0)?;
    let expected_fix = Subspace::span(3, &[v(&[1, 1, 1]), v(&[1, 0, -1])])?;
    Ok(json!({
        "operator": matrix_summary(&t)?,
        "fixed_space": to_value(fix),
        "positive_cone": to_value(&positive_cone(fix).rays),
        "classification": to_value(&class),
        "modulus_of_fhat": to_value(&modulus),
        "sign_pattern_oracle": oracle,
        "am_property_100_trials": am,
        "conformance": to_value(&report.conformance),
        "checks": checks(&[
            ("markov", contraction_check(&t) && t.apply(&v(&[1, 1, 1]))? == v(&[1, 1, 1])),
            ("fixed_space_matches", *fix == expected_fix),
            ("lattice_subspace_only", class.verdict == Verdict::LatticeSubspaceOnly),
            ("rays", class.rays == vec![v(&[0, 1, 2]), v(&[2, 1, 0])]),
            ("modulus_is_ones", modulus == Some(v(&[1, 1, 1]))),
            ("oracle_says_not_sublattice", !oracle),
            ("am_property", am),
            ("conformant", report.conformance == Conformance::Conformant),
        ]),
    }))
}

fn case_e42b() -> Result<Value> {
    let t = e42();
    let zero2 = || vec![ChainValue::zero(), ChainValue::zero()];
    let fhat = SymbolicVector::new(vec![qi(1), qi(0), qi(-1)], zero2(), vec![]);
    let g = [fhat.clone(), fhat.neg()];
    let trace = symbolic_transfinite_trace(&t, 1, &g, DEFAULT_LIMIT_STEP_BUDGET)?;
    let fix = SymbolicFixedSpace::new(&t, 1)?;
    let lp_sup = fix.sup_of(&g)?;

    let ones = || ChainValue::constant(qi(1));
    let g1 = SymbolicVector::new(vec![qi(1); 3], vec![ones(), ChainValue::zero()], vec![]);
    let g2 = SymbolicVector::new(vec![qi(1); 3], vec![ones(), ones()], vec![]);
    let step = |i: usize| trace.steps.get(i).map(|s| s.vector.clone());
    let reached = match &trace.outcome {
        TraceOutcome::FixedPointReached { vector, limit_steps } => {
            *limit_steps == 2 && *vector == TraceVector::Symbolic(g2.clone())
        }
        _ => false,
    };
    let lp_matches = lp_sup.as_ref() == Some(&fix.window().embed(&g2));

    // the finite part alone: one limit step in R^3
    let s = PositiveMatrixOperator::new(markov_s(), NormTag::Sup)?;
    let matrix_trace = matrix_transfinite_trace(&s, &[v(&[1, 0, -1]), v(&[-1, 0, 1])], DEFAULT_LIMIT_STEP_BUDGET)?;
    let matrix_one_step = matches!(
        &matrix_trace.outcome,
        TraceOutcome::FixedPointReached { limit_steps: 1, vector } if *vector == TraceVector::Finite(v(&[1, 1, 1]))
    );
    Ok(json!({
        "operator": to_value(&t),
        "symbolic_norm": symbolic_operator_norm(&t).to_string(),
        "fixed_space": symbolic_space_value(&fix),
        "trace": to_value(&trace),
        "lp_supremum_in_window": to_value(&lp_sup),
        "matrix_trace": to_value(&matrix_trace),
        "checks": checks(&[
            ("norm_one", symbolic_operator_norm(&t) == qi(1)),
            ("first_step_is_g1", step(0) == Some(TraceVector::Symbolic(g1.clone()))),
            ("g1_not_fixed", trace.steps.first().is_some_and(|s| !s.is_fixed)),
            ("second_step_is_g2", step(1) == Some(TraceVector::Symbolic(g2.clone()))),
            ("two_limit_steps", reached),
            ("lp_supremum_agrees", lp_matches),
            ("matrix_case_one_step", matrix_one_step),
        ]),
    }))
}

fn case_e43() -> Result<Value> {
    let t = e43();
    let f = e43_f();
    let minus = symbolic_eigenspace(&t, &qi(-1))?;
    let plus = symbolic_eigenspace(&t, &qi(1))?;
    let fix2 = SymbolicFixedSpace::new(&t, 2)?;
    let trace = symbolic_transfinite_trace(&t, 2, &[f.clone(), f.neg()], DEFAULT_LIMIT_STEP_BUDGET)?;
    let norms_ok = matches!(
        &trace.outcome,
        TraceOutcome::Unbounded { step_norms } if *step_norms == vec![qi(1), qi(2), qi(4)]
    );
    let verdict = fix2.classification.as_ref().map(|c| c.verdict);
    Ok(json!({
        "operator": to_value(&t),
        "symbolic_norm": symbolic_operator_norm(&t).to_string(),
        "eigenspace_minus_one": to_value(&minus),
        "eigenspace_one": to_value(&plus),
        "fixed_space_of_square": symbolic_space_value(&fix2),
        "divergence_trace": to_value(&trace),
        "cyclicity": {
            "matrix_dimension_estimate": "Inapplicable: infinite-dimensional and not contractive",
            "eigenvalue_minus_one_present": !minus.is_empty(),
            "eigenvalue_one_present": !plus.is_empty(),
        },
        "checks": checks(&[
            ("norm_two", symbolic_operator_norm(&t) == qi(2)),
            ("t_f_is_minus_f", crate::seqspace::apply(&t, &f)? == f.neg()),
            ("minus_one_eigenspace_is_span_f", minus == vec![f.clone()]),
            ("one_is_not_an_eigenvalue", plus.is_empty()),
            ("fix_of_square_not_lattice_subspace", verdict == Some(Verdict::NotLatticeSubspace)),
            ("divergence_norms_1_2_4", norms_ok),
        ]),
    }))
}

fn case_e44() -> Result<Value> {
    let t = PositiveMatrixOperator::new(QMatrix::from_i64(&[&[1, 0, 0], &[1, 1, 1], &[0, 0, 1]]), NormTag::Sup)?;
    let cp = char_poly(t.matrix())?;
    let fix = fixed_space_of(&t)?;
    let class = classify_subspace(&fix)?;
    let spectrum = root_of_unity_spectrum(&t)?;
    let report = fixed_space_report(&OperatorFamily::single(t.clone()))?;
    let cube = QPolynomial::from_i64(&[-1, 3, -3, 1]);
    let expected_fix = Subspace::span(3, &[v(&[1, 0, -1]), v(&[0, 1, 0])])?;
    let sup_pm = least_upper_bound_in(&fix, &[v(&[1, 0, -1]), v(&[-1, 0, 1])])?;
    Ok(json!({
        "operator": matrix_summary(&t)?,
        "fixed_space": to_value(&fix),
        "classification": to_value(&class),
        "root_of_unity_spectrum": to_value(&spectrum),
        "supremum_of_pm_v1": to_value(&sup_pm),
        "fixed_space_report": to_value(&report),
        "checks": checks(&[
            ("char_poly_is_x_minus_1_cubed", cp == cube),
            ("not_power_bounded", matches!(power_bounded_verdict(&t)?, PowerBoundedness::No { .. })),
            ("norm_three", operator_norm(&t) == qi(3)),
            ("fixed_space_matches", fix == expected_fix),
            ("single_ray", class.rays == vec![v(&[0, 1, 0])]),
            ("cone_not_generating", !class.cone_generating),
            ("not_lattice_subspace", class.verdict == Verdict::NotLatticeSubspace),
            ("geometric_multiplicity_two", spectrum.multiplicity(1) == 2),
            ("no_supremum_of_pm_v1", sup_pm.is_none()),
            ("theorem_not_applicable", report.conformance == Conformance::NotApplicable),
        ]),
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_case_passes_its_checks() {
        for id in CASE_IDS {
            let r = run_case(id).unwrap();
            assert!(failed_checks(&r).is_empty(), "{id}: {:?}", failed_checks(&r));
        }
        assert!(run_case("nope").is_err());
    }

    #[test]
    fn reports_are_reproducible() {
        for id in CASE_IDS {
            assert_eq!(canonical_json(&run_case(id).unwrap()), canonical_json(&run_case(id).unwrap()));
        }
    }
}
