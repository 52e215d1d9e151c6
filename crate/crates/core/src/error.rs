use thiserror::Error;

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// Every failure the library can report.
///
/// Each variant maps to a stable name through [`Error::name`], which the
/// command-line front end uses in its machine-readable error output.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("group element has |s| = |t| (|s|²-|t|² = {det:e})")]
    DegenerateElement { det: f64 },
    #[error("group element is not in SL(C×C): |s|²-|t|²-1 = {excess:e}")]
    NotSpecialLinear { excess: f64 },
    #[error("real matrix is singular (ad-bc = {det:e})")]
    SingularMatrix { det: f64 },
    #[error("sign computation produced {re} + {im}i instead of ±1")]
    BranchFailure { re: f64, im: f64 },
    #[error("integrand is not finite at node {re} + {im}i")]
    NonFiniteIntegrand { re: f64, im: f64 },
    #[error("kernel parameter s must be nonzero")]
    ZeroS,
    #[error("kernel is not in F²: need |s| > |t| (|s| = {s_abs}, |t| = {t_abs})")]
    NotInFock { s_abs: f64, t_abs: f64 },
    #[error("operator requires |t| < 2|s| (|s| = {s_abs}, |t| = {t_abs})")]
    DomainViolation { s_abs: f64, t_abs: f64 },
    #[error("operator is unbounded; pass an explicit opt-in to apply it pointwise")]
    UnboundedOperator,
    #[error("operator is not Hilbert–Schmidt (|s|²-|t|²-1 = {excess:e})")]
    NotHilbertSchmidt { excess: f64 },
    #[error("operator is not unitary (|s|²-|t|²-1 = {excess:e})")]
    NotUnitary { excess: f64 },
    #[error("truncation {requested} exceeds the limit {limit}")]
    TruncationTooLarge { requested: usize, limit: usize },
    #[error("no solution of the gamma quadratic in the open unit disk (Re s = {re_s})")]
    NoDiskSolution { re_s: f64 },
    #[error("(s + conj(t) gamma)² = 1; rho is undefined")]
    DegenerateKappa,
    #[error("delta must be nonzero")]
    ZeroDelta,
    #[error("Gaussian parameter must have positive real part (got {re})")]
    NonPositiveRealPart { re: f64 },
    #[error("degree {degree} exceeds the supported limit {limit}")]
    OverflowGuard { degree: usize, limit: usize },
    #[error("integral-equation hypothesis violated: {0}")]
    HypothesisViolation(&'static str),
    #[error("matrix does not have unit determinant (ad-bc = {det})")]
    SingularDet { det: f64 },
    #[error("kernel frequency {frequency} exceeds the grid's resolvable frequency {limit}")]
    OscillationBudgetExceeded { frequency: f64, limit: f64 },
    #[error("invalid sampled function: {0}")]
    InvalidSamples(&'static str),
    #[error("invalid quadrature rule: {0}")]
    InvalidRule(&'static str),
    #[error("invalid argument: {0}")]
    InvalidArgument(&'static str),
}

impl Error {
    /// Stable identifier of the variant.
    pub fn name(&self) -> &'static str {
        match self {
            Error::DegenerateElement { .. } => "DegenerateElement",
            Error::NotSpecialLinear { .. } => "NotSpecialLinear",
            Error::SingularMatrix { .. } => "SingularMatrix",
            Error::BranchFailure { .. } => "BranchFailure",
            Error::NonFiniteIntegrand { .. } => "NonFiniteIntegrand",
            Error::ZeroS => "ZeroS",
            Error::NotInFock { .. } => "NotInFock",
            Error::DomainViolation { .. } => "DomainViolation",
            Error::UnboundedOperator => "UnboundedOperator",
            Error::NotHilbertSchmidt { .. } => "NotHilbertSchmidt",
            Error::NotUnitary { .. } => "NotUnitary",
            Error::TruncationTooLarge { .. } => "TruncationTooLarge",
            Error::NoDiskSolution { .. } => "NoDiskSolution",
            Error::DegenerateKappa => "DegenerateKappa",
            Error::ZeroDelta => "ZeroDelta",
            Error::NonPositiveRealPart { .. } => "NonPositiveRealPart",
            Error::OverflowGuard { .. } => "OverflowGuard",
            Error::HypothesisViolation(_) => "HypothesisViolation",
            Error::SingularDet { .. } => "SingularDet",
            Error::OscillationBudgetExceeded { .. } => "OscillationBudgetExceeded",
            Error::InvalidSamples(_) => "InvalidSamples",
            Error::InvalidRule(_) => "InvalidRule",
            Error::InvalidArgument(_) => "InvalidArgument",
        }
    }
}
