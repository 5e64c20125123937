use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::operator::{apply, apply_power, CoordRef, LinearFunctionalSpec, ShiftInsertOperator};
use super::vector::{ChainValue, SpaceTag, SymbolicVector};
use crate::error::{Error, Result};
use crate::exactnum::serde_repr::rational_vec;
use crate::exactnum::{fix_projection, QVector, Rational};
use crate::opcore::{power_bounded_verdict, NormTag, PositiveMatrixOperator, PowerBoundedness};

/// Outcome of `sup_n T^n g`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status")]
pub enum OrbitSup {
    Stabilized { sup: SymbolicVector },
    /// The orbit supremum exists, but repeating the supremum step from it
    /// grows without bound; `step_norms` are the norms of the first limit
    /// steps.
    Unbounded {
        steps: Vec<SymbolicVector>,
        #[serde(with = "rational_vec")]
        step_norms: Vec<Rational>,
    },
    NotSuperFixed,
    /// The pointwise supremum leaves the space (a `c0` chain with a nonzero
    /// limit), and no upper bound exists there.
    NoSupremum { reason: String },
}

/// Number of limit steps reported as divergence evidence.
const EVIDENCE_STEPS: usize = 3;

pub fn orbit_sup(op: &ShiftInsertOperator, g: &SymbolicVector) -> Result<OrbitSup> {
    orbit_sup_power(op, 1, g)
}

/// Supremum of the orbit of `g` under `op^p`.
///
/// For `p > 1` the closed form is available when `g` is already super
/// fixed for `op`: the `op`-orbit is then increasing and the `op^p`-orbit
/// is a cofinal subsequence with the same supremum.
pub fn orbit_sup_power(op: &ShiftInsertOperator, p: usize, g: &SymbolicVector) -> Result<OrbitSup> {
    if p == 0 {
        return Err(Error::InvalidInput("power must be at least 1".into()));
    }
    g.check_schema(op.schema())?;
    if !apply_power(op, g, p)?.dominates(g)? {
        return Ok(OrbitSup::NotSuperFixed);
    }
    if p > 1 && !apply(op, g)?.dominates(g)? {
        return Err(Error::Unsupported(
            "orbit of a vector that is super fixed only for a proper power".into(),
        ));
    }
    let s = match closed_form_sup(op, g)? {
        Ok(s) => s,
        Err(reason) => return Ok(OrbitSup::NoSupremum { reason }),
    };
    if let Some(gain) = op.grid_source().map(|gs| &gs.gain) {
        let frontier = s.grid_rows().last().map(|r| r.tail().clone()).unwrap_or_else(Rational::zero);
        if *gain > Rational::one() && frontier.is_positive() {
            let mut steps = vec![s];
            while steps.len() < EVIDENCE_STEPS {
                match closed_form_sup(op, steps.last().expect("nonempty"))? {
                    Ok(next) => steps.push(next),
                    Err(_) => break,
                }
            }
            let step_norms = steps.iter().map(SymbolicVector::sup_norm).collect();
            return Ok(OrbitSup::Unbounded { steps, step_norms });
        }
    }
    Ok(OrbitSup::Stabilized { sup: s })
}

fn finite_limit(op: &ShiftInsertOperator, x0: &[Rational]) -> Result<Vec<Rational>> {
    let m = op.finite_block();
    let proj = fix_projection(m)?;
    let block = PositiveMatrixOperator::new(m.clone(), NormTag::Sup)?;
    if power_bounded_verdict(&block)? != PowerBoundedness::Yes {
        return Err(Error::Unsupported(
            "finite block is not power bounded; no closed-form orbit limit".into(),
        ));
    }
    Ok(proj.mul_vec(&QVector::from(x0.to_vec())).into_entries())
}

fn limit_of(
    phi: &LinearFunctionalSpec,
    finite: &[Rational],
    sup_chains: &[ChainValue],
    g: &SymbolicVector,
) -> Rational {
    phi.terms
        .iter()
        .map(|t| {
            let x = match t.coord {
                CoordRef::Finite(i) => &finite[i],
                CoordRef::ChainAt { chain, pos } => sup_chains[chain].at(pos),
                // shifting never changes a tail, so its limit is the original one
                CoordRef::ChainTail(c) => g.chains()[c].tail(),
            };
            &t.coeff * x
        })
        .sum()
}

/// Supremum of an increasing shifted sequence: position `k` of step `n` is
/// the original value at `k - n` for `n <= k`, and an entry value otherwise.
fn sup_chain(orig: &ChainValue, entry_limit: &Rational) -> ChainValue {
    let mut running: Option<Rational> = None;
    let mut prefix = Vec::with_capacity(orig.prefix().len());
    for x in orig.prefix() {
        running = Some(match running {
            Some(r) if r >= *x => r,
            _ => x.clone(),
        });
        prefix.push(std::cmp::max(running.clone().unwrap(), entry_limit.clone()));
    }
    let tail_run = match running {
        Some(r) if r >= *orig.tail() => r,
        _ => orig.tail().clone(),
    };
    ChainValue::new(prefix, std::cmp::max(tail_run, entry_limit.clone()))
}

/// Closed-form `sup_n T^n g` for a super-fixed `g`; the inner `Err` carries
/// the reason when the supremum leaves the space.
fn closed_form_sup(
    op: &ShiftInsertOperator,
    g: &SymbolicVector,
) -> Result<std::result::Result<SymbolicVector, String>> {
    let schema = op.schema();
    let finite = finite_limit(op, g.finite_part())?;
    let mut chains: Vec<ChainValue> = Vec::with_capacity(schema.chains.len());
    for (c, phi) in op.chain_sources().iter().enumerate() {
        let lim = limit_of(phi, &finite, &chains, g);
        let s = sup_chain(&g.chains()[c], &lim);
        if schema.chains[c].space == SpaceTag::CZero && !s.tail().is_zero() {
            return Ok(Err(format!(
                "chain {} would converge to {} instead of 0",
                schema.chains[c].name,
                s.tail()
            )));
        }
        chains.push(s);
    }
    let mut grid_rows = vec![];
    if let Some(gs) = op.grid_source() {
        let in_c0 = schema.grid.as_ref().is_some_and(|s| s.space == SpaceTag::CZero);
        for r in 0..=g.grid_rows().len() {
            let lim = if r == 0 {
                limit_of(&gs.row0, &finite, &chains, g)
            } else {
                &gs.gain * g.grid_row(r - 1).tail()
            };
            let s = sup_chain(&g.grid_row(r), &lim);
            if in_c0 && !s.tail().is_zero() {
                return Ok(Err(format!("grid row {r} would converge to {} instead of 0", s.tail())));
            }
            grid_rows.push(s);
        }
    }
    Ok(Ok(SymbolicVector::new(finite, chains, grid_rows)))
}
