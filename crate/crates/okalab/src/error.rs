use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("field too large: order {0} exceeds the table-arithmetic limit {1}")]
    FieldTooLarge(u64, u64),
    #[error("modulus is not monic of degree {expected}: {got:?}")]
    BadModulus { expected: usize, got: Vec<u64> },
    #[error("modulus is reducible: divisible by a degree-{0} factor")]
    ReducibleModulus(usize),
    #[error("coefficient {0} is out of range for the base field")]
    BadCoefficient(u64),
    #[error("structure constants violate associativity at basis triple ({i},{j},{k})")]
    NotAssociative { i: usize, j: usize, k: usize },
    #[error("designated unit fails the unit law on basis element {0}")]
    BadUnit(usize),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("operands belong to different rings")]
    RingMismatch,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("element count {needed} exceeds the cap {cap}")]
    CapExceeded { needed: u64, cap: u64 },
    #[error("scan budget exceeded: {needed} candidates, budget {budget}")]
    ScanBudget { needed: u64, budget: u64 },
    #[error("ideal is not two-sided")]
    NotTwoSided,
    #[error("ideal is not proper")]
    NotProper,
    #[error("multiplicative set is invalid: {0}")]
    BadMultiplicativeSet(String),
    #[error("family `{family}` lacks verified precondition `{needs}`")]
    PreconditionUnverified { family: String, needs: String },
    #[error("ring is not right self-injective, required for lift-from families")]
    NotSelfInjective,
    #[error("embedding is invalid: {0}")]
    BadEmbedding(String),
    #[error("unknown predicate name `{0}`")]
    UnknownPredicate(String),
    #[error("predicate expression parse error: {0}")]
    BadExpression(String),
    #[error("unknown suite id `{0}`")]
    UnknownSuite(String),
    #[error("unknown catalog ring `{0}`")]
    UnknownRing(String),
    #[error("spec file error: {0}")]
    SpecFile(String),
    #[error("cache file error: {0}")]
    CacheFile(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
