//! Order geometry of subspaces of `Q^n` with the coordinatewise order.
//!
//! A finite-dimensional ordered vector space whose positive cone is closed
//! and generating is a vector lattice iff the cone is simplicial, that is,
//! it has exactly `dim F` extreme rays and they are linearly independent.
//! Sketch: in ray coordinates a simplicial cone is the standard orthant, so
//! the lattice operations are coordinatewise there; conversely if the cone
//! has more rays than the dimension, some pair of elements has several
//! incomparable minimal upper bounds. A lattice subspace whose rays have pairwise disjoint
//! supports is a sublattice, because coordinatewise `max` of two nonnegative
//! combinations of disjointly supported vectors is again such a combination.
//! The sign-pattern oracle checks the last statement independently.

mod am;
mod classify;
mod cone;
mod lub;
mod oracle;
pub mod simplex;
mod subspace;

pub use am::am_property_check;
pub use classify::{classify_subspace, LatticeClassification, Verdict};
pub use cone::{positive_cone, PolyhedralCone};
pub use lub::{least_element_above, least_upper_bound_in, modulus_in};
pub use oracle::{sign_pattern_sublattice_oracle, sign_pattern_sublattice_oracle_with, ORACLE_MAX_DIM};
pub use subspace::Subspace;
