use thiserror::Error;

/// Errors raised by the toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime >= 3")]
    NotPrime(u64),
    #[error("modulus mismatch: p={0} vs p={1}")]
    ModulusMismatch(u32, u32),
    #[error("residue {value} is out of range for p={p}")]
    ResidueOutOfRange { value: i64, p: u32 },
    #[error("multiplier must be nonzero mod {0}")]
    ZeroMultiplier(u32),
    #[error("operation requires a nonempty set")]
    EmptySet,
    #[error("subset size {size} exceeds p={p}")]
    SizeTooLarge { size: usize, p: u32 },
    #[error("duplicate element {0} in set literal")]
    Duplicate(i64),
    #[error("malformed set literal `{text}`: {reason}")]
    Parse { text: String, reason: String },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("{0} is not an atom of the given set")]
    NotAnAtom(String),
    #[error("search space too large: {0}")]
    TooLarge(String),
}

pub type Result<T> = std::result::Result<T, Error>;
