use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("order cap exceeded: {what} ({found} > {cap})")]
    OrderCapExceeded {
        what: &'static str,
        found: usize,
        cap: usize,
    },
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("not a subgroup of the ambient group")]
    NotSubgroup,
    #[error("class functions live on different groups")]
    GroupMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("group is not solvable")]
    NotSolvable,
    #[error("index {0} is not prime")]
    IndexNotPrime(usize),
    #[error("character is not linear")]
    NotLinear,
    #[error("coefficient is not rational: {0}")]
    NonRationalCoefficient(String),
    #[error("verification failed: {0}")]
    VerificationFailed(String),
    #[error("schema error: {0}")]
    Schema(String),
    #[error("precondition unverified: {0}")]
    PreconditionUnverified(String),
    #[error("search space too large: {found} > {cap}")]
    SearchSpaceTooLarge { found: u128, cap: u128 },
    #[error("not a partition: {0}")]
    NotPartition(String),
    #[error("subgroup theory is not compatible with the ambient theory")]
    NotCompatible,
    #[error("restriction of a supercharacter is not an integral combination")]
    NonIntegralRestriction,
    #[error("theory on the normal subgroup is not invariant under conjugation")]
    NotGInvariant,
    #[error("empty family")]
    EmptyFamily,
    #[error("index out of range: {0}")]
    OutOfRange(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// True for failures that indicate a broken invariant rather than bad input.
    pub fn is_verification_failure(&self) -> bool {
        matches!(self, Error::VerificationFailed(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
