use num_traits::{One, Zero};

use super::operator::{apply, CoordRef, LinearFunctionalSpec, ShiftInsertOperator};
use super::vector::{ChainValue, SpaceTag, SymbolicVector};
use crate::conegeom::Subspace;
use crate::error::{Error, Result};
use crate::exactnum::{kernel_basis, QMatrix, QVector, Rational};

/// Unknowns of the reduced eigen-system.
struct Layout {
    finite: usize,
    chains: usize,
    grid_free: bool,
}

impl Layout {
    fn width(&self) -> usize {
        self.finite + self.chains + usize::from(self.grid_free)
    }
}

/// Row `phi(v) - target` written over the unknowns, where every chain is
/// constant (`lambda = 1`) or zero (`lambda = -1`).
fn functional_row(phi: &LinearFunctionalSpec, lay: &Layout, chains_constant: bool) -> Vec<Rational> {
    let mut row = vec![Rational::zero(); lay.width()];
    for t in &phi.terms {
        match t.coord {
            CoordRef::Finite(i) => row[i] += &t.coeff,
            CoordRef::ChainAt { chain, .. } | CoordRef::ChainTail(chain) => {
                if chains_constant {
                    row[lay.finite + chain] += &t.coeff;
                }
            }
        }
    }
    row
}

/// Basis of `ker(lambda - op)` inside the representable class, for
/// `lambda = ±1`.
///
/// Along a chain `lambda v(k) = v(k-1)`, so a solution is constant for
/// `lambda = 1` and alternating for `lambda = -1`; only the zero
/// alternating profile is eventually constant. Grid row `k >= 1` is then
/// `gain^k` times row 0, which has finitely many nonzero rows only when the
/// gain is zero or row 0 vanishes.
pub fn symbolic_eigenspace(op: &ShiftInsertOperator, lambda: &Rational) -> Result<Vec<SymbolicVector>> {
    let plus = if *lambda == Rational::one() {
        true
    } else if *lambda == -Rational::one() {
        false
    } else {
        return Err(Error::UnsupportedEigenvalue(lambda.to_string()));
    };
    let schema = op.schema();
    let f = schema.finite_coords.len();
    let lay = Layout {
        finite: f,
        chains: if plus { schema.chains.len() } else { 0 },
        grid_free: plus && op.grid_source().is_some_and(|g| g.gain.is_zero()),
    };
    let width = lay.width();
    let mut rows: Vec<Vec<Rational>> = vec![];

    // (M - lambda) x = 0
    let m = op.finite_block();
    for i in 0..f {
        let mut row = vec![Rational::zero(); width];
        for j in 0..f {
            row[j] = m.get(i, j).clone();
        }
        row[i] -= lambda;
        rows.push(row);
    }
    for (c, phi) in op.chain_sources().iter().enumerate() {
        let mut row = functional_row(phi, &lay, plus);
        if plus {
            // constant a_c equals its own entry value; c0 forces a_c = 0
            row[f + c] -= Rational::one();
            rows.push(row);
            if schema.chains[c].space == SpaceTag::CZero {
                let mut z = vec![Rational::zero(); width];
                z[f + c] = Rational::one();
                rows.push(z);
            }
        } else {
            rows.push(row);
        }
    }
    if let Some(g) = op.grid_source() {
        let mut row = functional_row(&g.row0, &lay, plus);
        if lay.grid_free {
            row[width - 1] -= Rational::one();
            let in_c0 = schema.grid.as_ref().is_some_and(|s| s.space == SpaceTag::CZero);
            if in_c0 {
                let mut z = vec![Rational::zero(); width];
                z[width - 1] = Rational::one();
                rows.push(z);
            }
        }
        rows.push(row);
    }

    let kernel = if rows.iter().all(|r| r.iter().all(Zero::is_zero)) {
        (0..width).map(|i| QVector::unit(width, i)).collect()
    } else {
        kernel_basis(&QMatrix::from_rows(rows)?)
    };
    let canonical = Subspace::span(width, &kernel)?;

    let mut out = Vec::with_capacity(canonical.dim());
    for u in canonical.basis() {
        let finite_part = u.entries()[..f].to_vec();
        let chains = (0..schema.chains.len())
            .map(|c| {
                if plus {
                    ChainValue::constant(u[f + c].clone())
                } else {
                    ChainValue::zero()
                }
            })
            .collect();
        let grid_rows = if lay.grid_free {
            vec![ChainValue::constant(u[width - 1].clone())]
        } else {
            vec![]
        };
        let v = SymbolicVector::new(finite_part, chains, grid_rows);
        if apply(op, &v)? != v.scale(lambda) {
            return Err(Error::InternalInconsistency(
                "symbolic eigenvector fails the eigen-equation".into(),
            ));
        }
        out.push(v);
    }
    Ok(out)
}
