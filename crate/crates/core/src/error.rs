use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u32),
    #[error("the characteristic {p} must not divide t = {t}")]
    CharDividesOrder { p: u32, t: u32 },
    #[error("invalid scalar literal {0:?}")]
    BadScalar(String),
    #[error("invalid algebra parameters: {0}")]
    InvalidSpec(String),
    #[error("defining relation fails in the regular representation: {0}")]
    RelationCheckFailed(String),
    #[error("module matrices violate relation: {0}")]
    RelationViolation(String),
    #[error("subspace is not contained in the ambient subspace")]
    NotContained,
    #[error("integral space has dimension {0}, expected 1")]
    IntegralDimensionAnomaly(usize),
    #[error("verification failed: {0}")]
    VerificationFailed(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("simple modules are only constructed for lambda in {{0, 1}}")]
    UnsupportedLambda,
    #[error("lambda must be nonzero")]
    ZeroLambda,
    #[error("unsupported parameter region: {0}")]
    UnsupportedParameterRegion(String),
    #[error("the simple module census is not available for these parameters")]
    CensusIncomplete,
    #[error("argument out of range: {0}")]
    OutOfRange(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
