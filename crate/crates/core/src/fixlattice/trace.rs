use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::serde_repr::rational_vec;
use crate::exactnum::{fix_projection, sup_all, QVector, Rational};
use crate::opcore::{power_bounded_verdict, PositiveMatrixOperator, PowerBoundedness};
use crate::seqspace::{apply_power, orbit_sup_power, pointwise_sup, OrbitSup, ShiftInsertOperator, SymbolicVector};

pub const DEFAULT_LIMIT_STEP_BUDGET: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum TraceVector {
    Finite(QVector),
    Symbolic(SymbolicVector),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    pub limit_step: usize,
    pub vector: TraceVector,
    pub is_fixed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind")]
pub enum TraceOutcome {
    FixedPointReached { vector: TraceVector, limit_steps: usize },
    Unbounded {
        #[serde(with = "rational_vec")]
        step_norms: Vec<Rational>,
    },
    NoSupremum { reason: String },
}

/// Sequence of limit steps `g_{k+1} = sup_n T^n g_k` started at the
/// ambient supremum of `G`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TransfiniteTrace {
    pub start: TraceVector,
    pub steps: Vec<TraceStep>,
    pub outcome: TraceOutcome,
}

/// Matrix case: the increasing orbit converges in norm, so its supremum is
/// its limit `P g_E` and is fixed after one limit step.
pub fn matrix_transfinite_trace(
    t: &PositiveMatrixOperator,
    g: &[QVector],
    budget: usize,
) -> Result<TransfiniteTrace> {
    let m = t.matrix();
    for (i, v) in g.iter().enumerate() {
        if t.apply(v)? != *v {
            return Err(Error::NotInSubspace(i));
        }
    }
    let g_e = sup_all(g).ok_or_else(|| Error::InvalidInput("empty family".into()))?;
    if power_bounded_verdict(t)? != PowerBoundedness::Yes {
        return Err(Error::Precondition("operator is not power bounded".into()));
    }
    let proj = fix_projection(m)?;
    let mut cur = g_e.clone();
    let mut steps = vec![];
    while m.mul_vec(&cur) != cur {
        if steps.len() == budget {
            return Err(Error::BudgetExhausted(budget));
        }
        cur = proj.mul_vec(&cur);
        steps.push(TraceStep {
            limit_step: steps.len() + 1,
            vector: TraceVector::Finite(cur.clone()),
            is_fixed: m.mul_vec(&cur) == cur,
        });
    }
    Ok(TransfiniteTrace {
        start: TraceVector::Finite(g_e),
        outcome: TraceOutcome::FixedPointReached {
            vector: TraceVector::Finite(cur),
            limit_steps: steps.len(),
        },
        steps,
    })
}

/// Symbolic case for `op^power`; `G` must consist of `op^power`-fixed vectors.
pub fn symbolic_transfinite_trace(
    op: &ShiftInsertOperator,
    power: usize,
    g: &[SymbolicVector],
    budget: usize,
) -> Result<TransfiniteTrace> {
    let first = g.first().ok_or_else(|| Error::InvalidInput("empty family".into()))?;
    for (i, v) in g.iter().enumerate() {
        if apply_power(op, v, power)? != *v {
            return Err(Error::NotInSubspace(i));
        }
    }
    let mut g_e = first.clone();
    for v in &g[1..] {
        g_e = pointwise_sup(&g_e, v)?;
    }
    let is_fixed = |v: &SymbolicVector| -> Result<bool> { Ok(apply_power(op, v, power)? == *v) };
    let mut cur = g_e.clone();
    let mut steps: Vec<TraceStep> = vec![];
    let outcome = loop {
        if is_fixed(&cur)? {
            break TraceOutcome::FixedPointReached {
                vector: TraceVector::Symbolic(cur),
                limit_steps: steps.len(),
            };
        }
        if steps.len() == budget {
            return Err(Error::BudgetExhausted(budget));
        }
        match orbit_sup_power(op, power, &cur)? {
            OrbitSup::Stabilized { sup } => {
                steps.push(TraceStep {
                    limit_step: steps.len() + 1,
                    is_fixed: is_fixed(&sup)?,
                    vector: TraceVector::Symbolic(sup.clone()),
                });
                cur = sup;
            }
            OrbitSup::Unbounded { steps: evidence, step_norms } => {
                for v in evidence {
                    steps.push(TraceStep {
                        limit_step: steps.len() + 1,
                        is_fixed: is_fixed(&v)?,
                        vector: TraceVector::Symbolic(v),
                    });
                }
                break TraceOutcome::Unbounded { step_norms };
            }
            OrbitSup::NoSupremum { reason } => break TraceOutcome::NoSupremum { reason },
            OrbitSup::NotSuperFixed => {
                return Err(Error::InternalInconsistency(
                    "supremum of fixed vectors is not super fixed".into(),
                ))
            }
        }
    };
    Ok(TransfiniteTrace {
        start: TraceVector::Symbolic(g_e),
        steps,
        outcome,
    })
}
