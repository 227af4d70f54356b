use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("composition is not zero: column {column} of the product is nonzero")]
    CompositionNotZero { column: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("unknown example {0:?}")]
    UnknownName(String),
    #[error("characteristic clash: {0}")]
    CharacteristicClash(String),
    #[error("invalid comodule: {0}")]
    InvalidComodule(String),
    #[error("prerequisite failed: {0}")]
    PrerequisiteFailed(String),
    #[error("operator {operator} in degree {degree} leaves the equivariant subspace (basis column {column})")]
    NotEquivariant {
        operator: String,
        degree: usize,
        column: usize,
    },
    #[error("characteristic unsupported: {0}")]
    CharacteristicUnsupported(String),
    #[error("counit degenerate: {0}")]
    CounitDegenerate(String),
    #[error("ambient dimension {needed} exceeds the cap {cap}")]
    DimensionCap { needed: usize, cap: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("validation error: {0}")]
    Validation(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse(_) => 3,
            Error::Validation(_) => 4,
            Error::NotEquivariant { .. } => 10,
            Error::CharacteristicUnsupported(_) => 11,
            Error::PrerequisiteFailed(_) => 12,
            Error::DimensionCap { .. } => 13,
            _ => 14,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Error::ShapeMismatch(_) => "ShapeMismatch",
            Error::CompositionNotZero { .. } => "CompositionNotZero",
            Error::Singular => "Singular",
            Error::UnknownName(_) => "UnknownName",
            Error::CharacteristicClash(_) => "CharacteristicClash",
            Error::InvalidComodule(_) => "InvalidComodule",
            Error::PrerequisiteFailed(_) => "PrerequisiteFailed",
            Error::NotEquivariant { .. } => "NotEquivariant",
            Error::CharacteristicUnsupported(_) => "CharacteristicUnsupported",
            Error::CounitDegenerate(_) => "CounitDegenerate",
            Error::DimensionCap { .. } => "DimensionCap",
            Error::Parse(_) => "ParseError",
            Error::Validation(_) => "ValidationError",
        }
    }
}
