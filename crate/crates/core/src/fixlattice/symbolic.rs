use serde::Serialize;

use crate::conegeom::{classify_subspace, least_upper_bound_in, LatticeClassification, Subspace};
use crate::error::{Error, Result};
use crate::exactnum::{qi, QVector};
use crate::seqspace::{symbolic_eigenspace, CoordinateWindow, ShiftInsertOperator, SymbolicVector};

/// Fixed space of `op^power` for `power` 1 or 2, as a basis in the
/// representable class. `ker(1 - T^2) = ker(1 - T) ⊕ ker(1 + T)`.
pub fn symbolic_fixed_space(op: &ShiftInsertOperator, power: usize) -> Result<Vec<SymbolicVector>> {
    match power {
        1 => symbolic_eigenspace(op, &qi(1)),
        2 => {
            let mut out = symbolic_eigenspace(op, &qi(1))?;
            out.extend(symbolic_eigenspace(op, &qi(-1))?);
            Ok(out)
        }
        _ => Err(Error::Unsupported(format!("fixed space of power {power}"))),
    }
}

/// Symbolic fixed space read through a coordinate window that covers it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SymbolicFixedSpace {
    pub basis: Vec<SymbolicVector>,
    pub coordinates: Vec<String>,
    pub embedded: Subspace,
    pub classification: Option<LatticeClassification>,
    #[serde(skip)]
    window: Option<CoordinateWindow>,
}

impl SymbolicFixedSpace {
    pub fn new(op: &ShiftInsertOperator, power: usize) -> Result<Self> {
        let basis = symbolic_fixed_space(op, power)?;
        let window = CoordinateWindow::covering(op.schema(), &basis);
        let embedded = window.span(&basis)?;
        let classification = if embedded.is_zero() {
            None
        } else {
            Some(classify_subspace(&embedded)?)
        };
        Ok(SymbolicFixedSpace {
            coordinates: window.labels(op.schema()),
            basis,
            embedded,
            classification,
            window: Some(window),
        })
    }

    pub fn window(&self) -> &CoordinateWindow {
        self.window.as_ref().expect("constructed with a window")
    }

    /// Supremum of `G` inside the fixed space, in window coordinates.
    pub fn sup_of(&self, g: &[SymbolicVector]) -> Result<Option<QVector>> {
        let w = self.window();
        if let Some(i) = g.iter().position(|v| !w.fits(v)) {
            return Err(Error::NotInSubspace(i));
        }
        let embedded: Vec<QVector> = g.iter().map(|v| w.embed(v)).collect();
        least_upper_bound_in(&self.embedded, &embedded)
    }
}
