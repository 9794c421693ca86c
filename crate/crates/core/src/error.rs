use thiserror::Error;

/// Errors produced by semigroup construction and invariant computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NsError {
    #[error("empty generator list")]
    Empty,
    #[error("generators must be positive integers, got 0")]
    ZeroGenerator,
    #[error("gcd is {gcd}, not a numerical semigroup")]
    GcdNotOne { gcd: u64 },
    #[error("value {value} exceeds the magnitude cap {cap}")]
    Overflow { value: u128, cap: u64 },
    #[error("{quantity} = {value} exceeds the table cap {cap}")]
    TooLarge {
        quantity: &'static str,
        value: u64,
        cap: u64,
    },
    #[error("{0} is not an admissible element of the semigroup")]
    NotAnElement(u64),
    #[error("semigroup {generators:?} is not symmetric (ring is not Gorenstein)")]
    NotGorenstein { generators: Vec<u64> },
    #[error("semigroup {generators:?} is not a complete intersection of embedding dimension 3")]
    NotCiEdim3 { generators: Vec<u64> },
    #[error("embedding dimension is {edim}, expected 3")]
    WrongEdim { edim: usize },
    #[error("invalid complete-intersection structure: {0}")]
    InvalidStructure(String),
    #[error("invalid gluing: {0}")]
    InvalidGluing(String),
    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

impl NsError {
    /// Stable machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            NsError::Empty => "Empty",
            NsError::ZeroGenerator => "ZeroGenerator",
            NsError::GcdNotOne { .. } => "GcdNotOne",
            NsError::Overflow { .. } => "Overflow",
            NsError::TooLarge { .. } => "TooLarge",
            NsError::NotAnElement(_) => "NotAnElement",
            NsError::NotGorenstein { .. } => "NotGorenstein",
            NsError::NotCiEdim3 { .. } => "NotCiEdim3",
            NsError::WrongEdim { .. } => "WrongEdim",
            NsError::InvalidStructure(_) => "InvalidStructure",
            NsError::InvalidGluing(_) => "InvalidGluing",
            NsError::InvalidFamily(_) => "InvalidFamily",
            NsError::Inconsistent(_) => "Inconsistent",
        }
    }
}

pub type Result<T, E = NsError> = std::result::Result<T, E>;
