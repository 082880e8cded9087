use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LabError {
    #[error("ring order {order} exceeds cap {cap}")]
    CapExceeded { order: String, cap: usize },
    #[error("invalid tables: {axiom} fails ({detail})")]
    InvalidTables { axiom: &'static str, detail: String },
    #[error("line {line}: {msg}")]
    Format { line: usize, msg: String },
    #[error("ring spec: {0}")]
    Spec(String),
    #[error("ideals belong to different rings")]
    RingMismatch,
    #[error("quotient by the whole ring")]
    ImproperIdeal,
    #[error("not a CI-ring: ideals #{first} and #{second} do not commute")]
    NotCIRing { first: usize, second: usize },
    #[error("{0} maximal ideals is too many to form every product")]
    TooManyMaximal(usize),
}

pub type Result<T> = std::result::Result<T, LabError>;

impl LabError {
    pub fn name(&self) -> &'static str {
        match self {
            LabError::CapExceeded { .. } => "CapExceeded",
            LabError::InvalidTables { .. } => "InvalidTables",
            LabError::Format { .. } => "FormatError",
            LabError::Spec(_) => "ParseError",
            LabError::RingMismatch => "RingMismatch",
            LabError::ImproperIdeal => "ImproperIdeal",
            LabError::NotCIRing { .. } => "NotCIRing",
            LabError::TooManyMaximal(_) => "TooManyMaximal",
        }
    }
}
