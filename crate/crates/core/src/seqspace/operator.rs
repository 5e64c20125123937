use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use super::vector::{IndexSchema, SymbolicVector};
use crate::error::{Error, Result};
use crate::exactnum::serde_repr::rational;
use crate::exactnum::{QMatrix, Rational};

/// Coordinate read by a functional.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CoordRef {
    Finite(usize),
    ChainAt { chain: usize, pos: usize },
    /// Limit of a chain along a free ultrafilter; on eventually constant
    /// sequences this is the tail value.
    ChainTail(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Term {
    #[serde(rename = "ref")]
    pub coord: CoordRef,
    #[serde(with = "rational")]
    pub coeff: Rational,
}

/// Finite linear combination of coordinates and chain limits.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LinearFunctionalSpec {
    pub terms: Vec<Term>,
}

impl LinearFunctionalSpec {
    pub fn new(terms: Vec<(CoordRef, Rational)>) -> Self {
        LinearFunctionalSpec {
            terms: terms.into_iter().map(|(coord, coeff)| Term { coord, coeff }).collect(),
        }
    }

    pub fn eval(&self, v: &SymbolicVector) -> Rational {
        self.terms
            .iter()
            .map(|t| {
                let x = match t.coord {
                    CoordRef::Finite(i) => &v.finite_part[i],
                    CoordRef::ChainAt { chain, pos } => v.chains[chain].at(pos),
                    CoordRef::ChainTail(c) => v.chains[c].tail(),
                };
                &t.coeff * x
            })
            .sum()
    }

    /// Norm of the functional on the sup-normed space.
    pub fn mass(&self) -> Rational {
        self.terms.iter().map(|t| t.coeff.abs()).sum()
    }
}

/// Entry rule of the grid: row 0 is fed by `row0`, row `k >= 1` by
/// `gain` times the limit of row `k - 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GridSource {
    pub row0: LinearFunctionalSpec,
    #[serde(with = "rational")]
    pub gain: Rational,
}

/// Positive operator that acts on the finite block by a matrix and shifts
/// every chain (and every grid row) one step, feeding position 0 from a
/// functional of the input.
///
/// Chain `c` may only read finite coordinates and chains with a smaller
/// index, which keeps orbit suprema computable in closed form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "OperatorRepr", into = "OperatorRepr")]
pub struct ShiftInsertOperator {
    schema: IndexSchema,
    finite_block: QMatrix,
    chain_sources: Vec<LinearFunctionalSpec>,
    grid_source: Option<GridSource>,
}

#[derive(Serialize, Deserialize)]
struct OperatorRepr {
    schema: IndexSchema,
    finite_block: QMatrix,
    #[serde(default)]
    chain_sources: Vec<LinearFunctionalSpec>,
    #[serde(default)]
    grid_source: Option<GridSource>,
}

impl TryFrom<OperatorRepr> for ShiftInsertOperator {
    type Error = Error;
    fn try_from(r: OperatorRepr) -> Result<Self> {
        ShiftInsertOperator::new(r.schema, r.finite_block, r.chain_sources, r.grid_source)
    }
}

impl From<ShiftInsertOperator> for OperatorRepr {
    fn from(t: ShiftInsertOperator) -> Self {
        OperatorRepr {
            schema: t.schema,
            finite_block: t.finite_block,
            chain_sources: t.chain_sources,
            grid_source: t.grid_source,
        }
    }
}

impl ShiftInsertOperator {
    pub fn new(
        schema: IndexSchema,
        finite_block: QMatrix,
        chain_sources: Vec<LinearFunctionalSpec>,
        grid_source: Option<GridSource>,
    ) -> Result<Self> {
        schema.validate()?;
        let f = schema.finite_coords.len();
        if finite_block.shape() != (f, f) {
            return Err(Error::SchemaMismatch(format!(
                "finite block must be {f}x{f}, got {}x{}",
                finite_block.nrows(),
                finite_block.ncols()
            )));
        }
        if !finite_block.is_nonnegative() {
            return Err(Error::NotPositive("finite block has a negative entry".into()));
        }
        if chain_sources.len() != schema.chains.len() {
            return Err(Error::SchemaMismatch("one entry source per chain is required".into()));
        }
        let check = |phi: &LinearFunctionalSpec, upto: usize| -> Result<()> {
            for t in &phi.terms {
                if t.coeff.is_negative() {
                    return Err(Error::NotPositive("functional coefficient is negative".into()));
                }
                let ok = match t.coord {
                    CoordRef::Finite(i) => i < f,
                    CoordRef::ChainAt { chain, .. } | CoordRef::ChainTail(chain) => chain < upto,
                };
                if !ok {
                    return Err(Error::SchemaMismatch(format!(
                        "functional reference {:?} is out of range or not upstream",
                        t.coord
                    )));
                }
            }
            Ok(())
        };
        for (c, phi) in chain_sources.iter().enumerate() {
            check(phi, c)?;
        }
        match (&schema.grid, &grid_source) {
            (Some(_), Some(g)) => {
                check(&g.row0, schema.chains.len())?;
                if g.gain.is_negative() {
                    return Err(Error::NotPositive("grid gain is negative".into()));
                }
            }
            (None, None) => {}
            _ => return Err(Error::SchemaMismatch("grid and grid source must come together".into())),
        }
        Ok(ShiftInsertOperator {
            schema,
            finite_block,
            chain_sources,
            grid_source,
        })
    }

    pub fn schema(&self) -> &IndexSchema {
        &self.schema
    }

    pub fn finite_block(&self) -> &QMatrix {
        &self.finite_block
    }

    pub fn chain_sources(&self) -> &[LinearFunctionalSpec] {
        &self.chain_sources
    }

    pub fn grid_source(&self) -> Option<&GridSource> {
        self.grid_source.as_ref()
    }
}

pub fn apply(op: &ShiftInsertOperator, v: &SymbolicVector) -> Result<SymbolicVector> {
    v.check_schema(&op.schema)?;
    let finite = op
        .finite_block
        .mul_vec(&v.finite_part.clone().into())
        .into_entries();
    let chains = v
        .chains
        .iter()
        .zip(&op.chain_sources)
        .map(|(c, phi)| c.shifted(phi.eval(v)))
        .collect();
    let grid_rows = match &op.grid_source {
        None => vec![],
        Some(g) => {
            let rows = v.grid_rows.len() + 1;
            (0..rows)
                .map(|r| {
                    let entry = if r == 0 {
                        g.row0.eval(v)
                    } else {
                        &g.gain * v.grid_row(r - 1).tail()
                    };
                    v.grid_row(r).shifted(entry)
                })
                .collect()
        }
    };
    Ok(SymbolicVector::new(finite, chains, grid_rows))
}

/// `op^k v`.
pub fn apply_power(op: &ShiftInsertOperator, v: &SymbolicVector, k: usize) -> Result<SymbolicVector> {
    let mut out = v.clone();
    for _ in 0..k {
        out = apply(op, &out)?;
    }
    Ok(out)
}

/// Induced norm for the sup norm: the largest coefficient mass over all
/// output coordinates.
pub fn symbolic_operator_norm(op: &ShiftInsertOperator) -> Rational {
    let mut best = op.finite_block.max_abs_row_sum();
    let mut consider = |x: Rational| {
        if x > best {
            best = x;
        }
    };
    for phi in &op.chain_sources {
        consider(Rational::one());
        consider(phi.mass());
    }
    if let Some(g) = &op.grid_source {
        consider(Rational::one());
        consider(g.row0.mass());
        consider(g.gain.abs());
    }
    best
}
