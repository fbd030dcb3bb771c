use thiserror::Error;

/// Errors surfaced by the operator algebra, encoding, and simulation layers.
#[derive(Debug, Error)]
pub enum Error {
    #[error("qubit count mismatch: {left} vs {right}")]
    QubitCountMismatch { left: usize, right: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("operator is not hermitian (defect {defect:.3e})")]
    NotHermitian { defect: f64 },

    #[error("operator is not unitary (defect {defect:.3e})")]
    NotUnitary { defect: f64 },

    #[error("state is not normalized (norm {norm})")]
    NotNormalized { norm: f64 },

    #[error("index {index} out of range (limit {limit})")]
    IndexOutOfRange { index: usize, limit: usize },

    #[error("total dimension {dim} exceeds the desk-scale cap {cap}")]
    DimensionCap { dim: usize, cap: usize },

    #[error("decoupling group is empty")]
    EmptyGroup,

    #[error("group closure exceeded the cap of {cap} elements")]
    GroupTooLarge { cap: usize },

    #[error("stabilizer generators leave errors uncovered: {}", uncovered.join(", "))]
    UncoveredErrors { uncovered: Vec<String> },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
