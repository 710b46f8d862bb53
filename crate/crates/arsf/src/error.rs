use thiserror::Error;

/// Errors shared by every layer of the crate.
#[derive(Error, Debug, Clone, PartialEq)]
pub enum ArsfError {
    #[error("division by zero rational function")]
    RatFunDivisionByZero,
    #[error("evaluation at a pole: denominator vanishes at t = {0}")]
    RatFunPole(String),
    #[error("partition length {len} exceeds bound {bound}")]
    LengthExceeded { len: usize, bound: usize },
    #[error("size mismatch: shape has size {shape}, content has size {content}")]
    SizeMismatch { shape: u64, content: u64 },
    #[error("content is not a partition: {0}")]
    NonPartitionContent(String),
    #[error("symbolic degree cap {cap} exceeded by degree {degree}")]
    DegreeCapExceeded { degree: u32, cap: u32 },
    #[error("basis mismatch: {0}")]
    BasisMismatch(String),
    #[error("coefficient ring mismatch: {0}")]
    RingMismatch(String),
    #[error("power trace sequence of length {have} cannot evaluate degree {need}")]
    InsufficientTraces { have: usize, need: usize },
    #[error("element {0} does not normalize the given subgroup")]
    NotNormalizing(usize),
    #[error("map is not a group homomorphism: {0}")]
    NotHomomorphism(String),
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("no splitting data for prime {0}; ramified primes need a fixture entry")]
    MissingPrimeData(String),
    #[error("splitting table invalid: {0}")]
    InvalidTable(String),
    #[error("Hecke rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("domain violation: {0}")]
    DomainViolation(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, ArsfError>;
