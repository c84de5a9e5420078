use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("basis change is singular (|det| = {det:e})")]
    SingularMatrix { det: f64 },

    #[error("a real algebra cannot be transformed by a complex basis change")]
    FieldMismatch,

    #[error("algebras are over different fields")]
    FieldsDiffer,

    #[error(
        "adjoint of the radical has a nilpotent 2-block plus a nonzero eigenvalue; no such omega-Lie algebra exists"
    )]
    ImpossibleCaseD,

    #[error("inconsistent rank: {0}")]
    InconsistentRank(String),

    #[error("ambiguous spectrum: {0}")]
    AmbiguousSpectrum(String),

    #[error("near-degenerate input: {0}")]
    NearDegenerate(String),

    #[error("operator is nonsingular; zero is not an eigenvalue")]
    ZeroNotEigenvalue,

    #[error("parameter out of domain: {0}")]
    ParameterOutOfDomain(String),

    #[error("ratio parameter must be nonzero")]
    ZeroParameter,

    #[error("omega does not satisfy the omega-Jacobi identity (discrepancy {discrepancy:e})")]
    ValidationFailed { discrepancy: f64 },

    #[error("witness for {label} has residual {residual:e} above tolerance {tol:e}")]
    UnverifiedWitness { label: String, residual: f64, tol: f64 },
}

impl Error {
    /// Stable variant name, used in machine-readable reports.
    pub fn name(&self) -> &'static str {
        match self {
            Error::SingularMatrix { .. } => "SingularMatrix",
            Error::FieldMismatch => "FieldMismatch",
            Error::FieldsDiffer => "FieldsDiffer",
            Error::ImpossibleCaseD => "ImpossibleCaseD",
            Error::InconsistentRank(_) => "InconsistentRank",
            Error::AmbiguousSpectrum(_) => "AmbiguousSpectrum",
            Error::NearDegenerate(_) => "NearDegenerate",
            Error::ZeroNotEigenvalue => "ZeroNotEigenvalue",
            Error::ParameterOutOfDomain(_) => "ParameterOutOfDomain",
            Error::ZeroParameter => "ZeroParameter",
            Error::ValidationFailed { .. } => "ValidationFailed",
            Error::UnverifiedWitness { .. } => "UnverifiedWitness",
        }
    }

    /// Errors that point at ill-conditioned numerics rather than mathematics.
    pub fn is_numerical(&self) -> bool {
        matches!(self, Error::AmbiguousSpectrum(_) | Error::NearDegenerate(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
