//! Fixed spaces of commuting positive contractions and suprema inside them.
//!
//! For a commuting family of positive contractions the common fixed space is
//! a lattice subspace, and for strictly monotone norms even a sublattice.
//! Both are checked here as executable assertions: a violation is reported
//! as a defect, not as an ordinary result.
//!
//! Suprema inside the fixed space are computed by exact coordinate-wise
//! linear programs. The iterative construction (orbit suprema repeated at
//! limit steps) is available separately as a trace and serves as an
//! independent cross-check.

mod report;
mod sup;
mod symbolic;
mod trace;

pub use report::{
    fixed_space_of, fixed_space_of_family, fixed_space_of_matrices, fixed_space_report,
    fixed_space_report_raw, Conformance, FixedSpaceReport, NormCheck,
};
pub use sup::{least_fixed_above, sup_in_fixspace, SupInFix};
pub use symbolic::{symbolic_fixed_space, SymbolicFixedSpace};
pub use trace::{
    matrix_transfinite_trace, symbolic_transfinite_trace, TraceOutcome, TraceStep, TraceVector,
    TransfiniteTrace, DEFAULT_LIMIT_STEP_BUDGET,
};

#[cfg(test)]
mod tests;
