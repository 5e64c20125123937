use serde::Serialize;

use crate::conegeom::{classify_subspace, modulus_in, LatticeClassification, Subspace, Verdict};
use crate::error::Result;
use crate::exactnum::serde_repr::rational;
use crate::exactnum::{QMatrix, Rational};
use crate::opcore::{contraction_check, NormTag, OperatorFamily, PositiveMatrixOperator};

/// Whether the fixed space behaves as the contraction theorem predicts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Conformance {
    Conformant,
    Violated,
    /// The family is not a commuting family of positive contractions, so
    /// nothing is predicted.
    NotApplicable,
}

/// Norm comparison for `G = {b, -b}`: `g_E = |b|` against the supremum
/// `g_F` computed inside the fixed space.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NormCheck {
    pub description: String,
    #[serde(with = "rational")]
    pub norm_g_e: Rational,
    pub norm_g_f: Option<String>,
    pub equal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FixedSpaceReport {
    pub family_valid: bool,
    pub issues: Vec<String>,
    pub norm: String,
    pub fixed_space: Subspace,
    /// `None` for the zero space.
    pub classification: Option<LatticeClassification>,
    pub conformance: Conformance,
    pub norm_checks: Vec<NormCheck>,
}

impl FixedSpaceReport {
    pub fn theorem_conformant(&self) -> bool {
        self.conformance != Conformance::Violated
    }
}

/// Common fixed vectors `∩ ker(I - T_i)`.
pub fn fixed_space_of_matrices(ms: &[QMatrix]) -> Result<Subspace> {
    let n = ms.first().map_or(0, QMatrix::nrows);
    let blocks: Vec<QMatrix> = ms.iter().map(QMatrix::identity_minus).collect();
    if blocks.is_empty() {
        return Ok(Subspace::full(n.max(1)));
    }
    Ok(Subspace::kernel_of(&QMatrix::vstack(&blocks)?))
}

pub fn fixed_space_of_family(family: &OperatorFamily) -> Result<Subspace> {
    let ms: Vec<QMatrix> = family.members().iter().map(|t| t.matrix().clone()).collect();
    fixed_space_of_matrices(&ms)
}

pub fn fixed_space_report(family: &OperatorFamily) -> Result<FixedSpaceReport> {
    let ms: Vec<QMatrix> = family.members().iter().map(|t| t.matrix().clone()).collect();
    fixed_space_report_raw(&ms, family.norm_tag())
}

/// Report for matrices that may fail validation; failures are recorded in
/// `issues` rather than returned as errors.
pub fn fixed_space_report_raw(ms: &[QMatrix], norm: &NormTag) -> Result<FixedSpaceReport> {
    let n = ms
        .first()
        .ok_or_else(|| crate::Error::InvalidInput("operator family is empty".into()))?
        .require_square()?;
    let mut issues = vec![];
    for (i, m) in ms.iter().enumerate() {
        if m.require_square()? != n {
            return Err(crate::Error::DimensionMismatch {
                expected: n,
                found: m.nrows(),
            });
        }
        match PositiveMatrixOperator::new(m.clone(), norm.clone()) {
            Ok(t) => {
                if !contraction_check(&t) {
                    issues.push(format!("member {i} is not contractive"));
                }
            }
            Err(e) => issues.push(format!("member {i}: {e}")),
        }
    }
    for i in 0..ms.len() {
        for j in i + 1..ms.len() {
            if !ms[i].commutes_with(&ms[j]) {
                issues.push(format!("members {i} and {j} do not commute"));
            }
        }
    }
    let family_valid = issues.is_empty();
    let fixed_space = fixed_space_of_matrices(ms)?;
    let classification = if fixed_space.is_zero() {
        None
    } else {
        Some(classify_subspace(&fixed_space)?)
    };

    let mut norm_checks = vec![];
    for (k, b) in fixed_space.basis().iter().enumerate() {
        let g_e = b.abs();
        let g_f = modulus_in(&fixed_space, b)?;
        let norm_g_e = norm.vector_norm(&g_e);
        let norm_g_f = g_f.as_ref().map(|v| norm.vector_norm(v));
        norm_checks.push(NormCheck {
            description: format!("G = {{±b{k}}}, b{k} = {b}"),
            equal: norm_g_f.as_ref() == Some(&norm_g_e),
            norm_g_f: norm_g_f.map(|x| x.to_string()),
            norm_g_e,
        });
    }

    let conformance = if !family_valid {
        Conformance::NotApplicable
    } else {
        let class_ok = match &classification {
            None => true,
            Some(c) if norm.is_strictly_monotone() => c.verdict == Verdict::Sublattice,
            Some(c) => c.verdict != Verdict::NotLatticeSubspace,
        };
        if class_ok && norm_checks.iter().all(|c| c.equal) {
            Conformance::Conformant
        } else {
            Conformance::Violated
        }
    };
    Ok(FixedSpaceReport {
        family_valid,
        issues,
        norm: norm.name().into(),
        fixed_space,
        classification,
        conformance,
        norm_checks,
    })
}

/// Fixed vectors as a convenience for single operators.
pub fn fixed_space_of(t: &PositiveMatrixOperator) -> Result<Subspace> {
    fixed_space_of_matrices(std::slice::from_ref(t.matrix()))
}

