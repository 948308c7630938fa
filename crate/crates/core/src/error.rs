use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("characteristic {0} is not prime")]
    NonPrimeCharacteristic(u32),
    #[error("extension degree must be at least 1, got {0}")]
    InvalidDegree(u32),
    #[error("field of order {p}^{n} exceeds the supported maximum of 65536 elements")]
    FieldTooLarge { p: u32, n: u32 },
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("invalid modulus: {0}")]
    InvalidModulus(String),
    #[error("modulus {0} is reducible over the prime field")]
    ReduciblePolynomial(String),
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },
    #[error("subspaces live in different ambient spaces")]
    AmbientMismatch,
    #[error("{what}: {count} exceeds the enumeration cap {cap}")]
    CapExceeded {
        what: &'static str,
        count: u128,
        cap: u128,
    },
    #[error("argument out of range: {0}")]
    DomainError(String),
    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),
    #[error("relation is not a partial order: {0}")]
    NotAPartialOrder(String),
    #[error("poset is not a bounded lattice: {0}")]
    NotALattice(String),
    #[error("vectors do not form an orthogonal basis")]
    NotOrthogonalBasis,
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("non-bound elements of the summands collide: {0}")]
    OverlapViolation(String),
    #[error("summand is trivial (needs more than two elements)")]
    TrivialSummand,
}

pub type Result<T> = std::result::Result<T, Error>;
