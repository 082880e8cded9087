use thiserror::Error;

/// Errors raised by ring arithmetic, ideal operations and the cryptosystem.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring mismatch: {left} vs {right}")]
    RingMismatch { left: String, right: String },
    #[error("zero element has no finite quotient")]
    ZeroElement,
    #[error("division by zero")]
    DivisionByZero,
    #[error("gcd of two zero elements is undefined")]
    BothZero,
    #[error("not applicable to zero or unit elements")]
    NotApplicable,
    #[error("exhausted {0} attempts")]
    ExhaustedAttempts(usize),
    #[error("factoring budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("factoring failed: {0}")]
    FactoringFailed(String),
    #[error("index {index} out of range for residue system of size {size}")]
    OutOfRange { index: String, size: String },
    #[error("quotient size {size} exceeds cap {cap}")]
    CapExceeded { size: String, cap: String },
    #[error("ideals #{first} and #{second} are not comaximal")]
    NotComaximal { first: usize, second: usize },
    #[error("{0} and {1} are not coprime")]
    NotCoprime(String, String),
    #[error("generator must be a nonzero non-unit")]
    InvalidIdeal,
    #[error("{0} is not a prime element")]
    NotPrime(String),
    #[error("distinct prime ideals required")]
    DistinctPrimesRequired,
    #[error("phi = {0} is too small (need phi > 2)")]
    PhiTooSmall(String),
    #[error("residue system of size {0} cannot hold a length byte and a payload byte")]
    ModulusTooSmall(String),
    #[error("malformed block value {0}")]
    MalformedBlock(String),
    #[error("bad exponents: {0}")]
    BadExponents(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("unsupported ring: {0}")]
    UnsupportedRing(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("line {line}: {msg}")]
    Format { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Short stable name used by the command-line front end.
    pub fn name(&self) -> &'static str {
        match self {
            Error::RingMismatch { .. } => "RingMismatch",
            Error::ZeroElement => "ZeroElement",
            Error::DivisionByZero => "DivisionByZero",
            Error::BothZero => "BothZero",
            Error::NotApplicable => "NotApplicable",
            Error::ExhaustedAttempts(_) => "ExhaustedAttempts",
            Error::BudgetExceeded(_) => "BudgetExceeded",
            Error::FactoringFailed(_) => "FactoringFailed",
            Error::OutOfRange { .. } => "IndexOutOfRange",
            Error::CapExceeded { .. } => "CapExceeded",
            Error::NotComaximal { .. } => "NotComaximal",
            Error::NotCoprime(..) => "NotCoprime",
            Error::InvalidIdeal => "InvalidIdeal",
            Error::NotPrime(_) => "NotPrime",
            Error::DistinctPrimesRequired => "DistinctPrimesRequired",
            Error::PhiTooSmall(_) => "PhiTooSmall",
            Error::ModulusTooSmall(_) => "ModulusTooSmall",
            Error::MalformedBlock(_) => "MalformedBlock",
            Error::BadExponents(_) => "BadExponents",
            Error::InvalidParameter(_) => "InvalidParameter",
            Error::UnsupportedRing(_) => "UnsupportedRing",
            Error::Parse(_) => "ParseError",
            Error::Format { .. } => "FormatError",
        }
    }
}
