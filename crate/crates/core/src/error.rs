use thiserror::Error;

/// Errors raised by the exact analysis routines.
///
/// `TheoremViolation` and `InternalInconsistency` are defect signals: they are
/// only produced when a mathematical guarantee failed to materialize, which
/// points at a bug rather than at bad input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("polynomial of degree {degree} exceeds the supported bound {bound}")]
    UnsupportedDegree { degree: usize, bound: usize },
    #[error("the zero polynomial has no well-defined root locations")]
    ZeroPolynomial,
    #[error("{0} does not divide the characteristic polynomial")]
    NotADivisor(String),
    #[error("eigenvalue 1 is not semisimple; the fixed-space projection does not exist")]
    DefectiveFixedSpace,
    #[error("operator is not positive: {0}")]
    NotPositive(String),
    #[error("operators {0} and {1} do not commute")]
    NonCommuting(usize, usize),
    #[error("vector is not a super fixed vector of operator {0}")]
    NotSuperFixed(usize),
    #[error("vector {0} does not lie in the subspace")]
    NotInSubspace(usize),
    #[error("unsupported eigenvalue {0}; only 1 and -1 are handled symbolically")]
    UnsupportedEigenvalue(String),
    #[error("schema mismatch: {0}")]
    SchemaMismatch(String),
    #[error("outside the supported closed-form class: {0}")]
    Unsupported(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("limit-step budget of {0} exhausted before reaching a fixed point")]
    BudgetExhausted(usize),
    #[error("theorem violation: {0}")]
    TheoremViolation(String),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}

impl Error {
    /// True for errors that indicate a defect in the implementation rather
    /// than an unusable input.
    pub fn is_defect(&self) -> bool {
        matches!(
            self,
            Error::TheoremViolation(_) | Error::InternalInconsistency(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
