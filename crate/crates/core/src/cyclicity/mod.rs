//! Peripheral point spectrum of positive contractions.
//!
//! Roots of unity are detected exactly through cyclotomic polynomials: the
//! primitive `n`-th roots of unity are the roots of `Φn`, and since the
//! matrix is rational, `dim ker Φn(T)` is `φ(n)` times the geometric
//! multiplicity of each of them.
//!
//! A positive matrix contraction always has a root-of-unity peripheral
//! spectrum (its Frobenius normal form is block triangular with irreducible
//! diagonal blocks), so random matrices cannot produce a unimodular
//! eigenvalue that is not a root of unity. The probe here collects
//! consistency evidence; it is not a counterexample search.

mod probe;
mod semigroup;
mod spectrum;

pub use probe::{probe_random_contractions, ProbeHeader, ProbeRecord, ProbeSummary, PROBE_NOTE};
pub use semigroup::{semigroup_imaginary_check, SemigroupReport};
pub use spectrum::{
    root_of_unity_spectrum, verify_dimension_cyclicity, CyclicityReport, DimensionEstimate,
    OrderMultiplicity, RootOfUnitySpectrum, Verdict,
};
