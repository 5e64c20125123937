//! Exact computation of the order structure of fixed spaces of positive
//! linear contractions.
//!
//! Everything in the certified paths runs on arbitrary-precision rationals:
//!
//! * [`exactnum`]: rational vectors, matrices and polynomials, kernels,
//!   characteristic polynomials, factorization over the rationals and exact
//!   root location relative to the unit circle.
//! * [`conegeom`]: subspaces of `Q^n`, their positive cones (double
//!   description), lattice-subspace classification and least upper bounds
//!   computed by an exact simplex method.
//! * [`opcore`]: positive matrix operators, induced norms, contractivity and
//!   power boundedness.
//! * [`seqspace`]: a symbolic model of `c0`/`l∞` vectors built from finite
//!   blocks and eventually-constant chains, with shift-insert operators.
//! * [`fixlattice`]: fixed spaces of commuting families, suprema inside the
//!   fixed space and the transfinite supremum iteration.
//! * [`cyclicity`]: root-of-unity eigenvalue multiplicities, the dimension
//!   estimate for positive contractions and the semigroup check.
//! * [`gallery`]: the canonical worked examples as reproducible reports.

pub mod conegeom;
pub mod cyclicity;
pub mod error;
pub mod exactnum;
pub mod fixlattice;
pub mod gallery;
pub mod opcore;
pub mod par;
pub mod random;
pub mod seqspace;

pub use error::{Error, Result};
pub use exactnum::{QMatrix, QPolynomial, QVector, Rational};
