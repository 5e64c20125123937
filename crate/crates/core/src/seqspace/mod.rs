//! Symbolic sequence spaces: finitely many named coordinates, chains
//! indexed by `N0` and an optional grid `N0 x N0`, restricted to the
//! representable class of eventually constant chains with finitely many
//! nonzero grid rows.
//!
//! The ultrafilter limits used by the operators are evaluated as chain
//! tails, which agrees with any free ultrafilter on eventually constant
//! sequences. Eigenspaces and orbit suprema are computed in closed form
//! within this class.

mod builtins;
mod eigen;
mod operator;
mod orbit;
mod vector;
mod window;

pub use builtins::{builtin, e41, e42, e42_start, e43, e43_f, BUILTIN_NAMES};
pub use eigen::symbolic_eigenspace;
pub use operator::{
    apply, apply_power, symbolic_operator_norm, CoordRef, GridSource, LinearFunctionalSpec,
    ShiftInsertOperator, Term,
};
pub use orbit::{orbit_sup, orbit_sup_power, OrbitSup};
pub use vector::{pointwise_sup, ChainSpec, ChainValue, IndexSchema, SpaceTag, SymbolicVector};
pub use window::CoordinateWindow;
