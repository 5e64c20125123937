//! Exact rational linear algebra and polynomial analysis.
//!
//! No floating point is used anywhere in this module except by
//! [`rational::to_f64`], which exists for clearly labeled cross-checks.

pub mod charpoly;
pub mod cyclotomic;
pub mod factor;
pub mod matrix;
mod modp;
pub mod poly;
pub mod rational;
pub mod serde_repr;
pub mod spectral;
pub mod sturm;
pub mod unitcircle;
pub mod vector;

pub use charpoly::char_poly;
pub use factor::{factor_over_rationals, FactoredPolynomial, Factor};
pub use matrix::{kernel_basis, QMatrix};
pub use poly::QPolynomial;
pub use rational::{parse_rational, q, qi, Rational};
pub use spectral::{fix_projection, semisimple_check};
pub use unitcircle::{unit_circle_root_count, unit_disk_verdict, BoundaryRoots, DiskVerdict};
pub use vector::{sup_all, QVector};
