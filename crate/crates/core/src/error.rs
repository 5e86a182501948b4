use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{what} of size {size} exceeds the cap {cap}")]
    CapExceeded { what: &'static str, size: u128, cap: u128 },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("operation undefined on the zero element")]
    ZeroElement,
    #[error("{0} is not the size of a multiplicative subgroup")]
    BadSubfieldSize(u64),
    #[error("rn = {rn} does not divide q^m - 1 = {order}")]
    IncompatibleOrder { rn: u64, order: u64 },
    #[error("no primitive element satisfies the root condition")]
    NoSolution,
    #[error("{0} is not a unit modulo {1}")]
    NotAUnit(u64, u64),
    #[error("{0} and {1} are not coprime")]
    NotCoprime(u64, u64),
    #[error("{0} is not in the unit subgroup 1 + {1}Z modulo {2}")]
    NotInUnitSubgroup(u64, u64, u64),
    #[error("element is not in the base field F_{0}")]
    NotInSubfield(u64),
    #[error("generator polynomial coefficient outside the base field")]
    SubfieldViolation,
    #[error("coset selection is empty")]
    EmptySelection,
    #[error("characteristic {0} divides n = {1}")]
    CharDividesN(u64, u64),
    #[error("Burnside average {num}/{den} is not an integer")]
    NonIntegralAverage { num: u128, den: u128 },
    #[error("inexact division in {0}")]
    NonIntegralResult(String),
    #[error("selection has {0} cosets, expected exactly one")]
    NotIrreducible(usize),
    #[error("coset sizes {0} and {1}: neither divides the other")]
    DivisibilityFailed(u64, u64),
    #[error("selection shape does not fit: {0}")]
    ShapeMismatch(String),
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

impl Error {
    pub fn is_cap(&self) -> bool {
        matches!(self, Error::CapExceeded { .. })
    }
}
