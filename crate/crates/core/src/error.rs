use alloc::string::String;

/// Failures raised by the algebra kernel and everything built on it.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("operands belong to different generator sets")]
    ContextMismatch,
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("variable `{0}` declared twice")]
    DuplicateVariable(String),
    #[error("variable `{0}` must have positive degree")]
    ZeroDegree(String),
    #[error("{0} is not homogeneous")]
    Inhomogeneous(String),
    #[error("image of `{generator}` has degree {found}, expected {expected}")]
    DegreeMismatch {
        generator: String,
        expected: u32,
        found: u32,
    },
    #[error("degree {degree} exceeds the truncation bound {bound}")]
    TruncationExceeded { degree: u32, bound: u32 },
    #[error("differential of `{0}` is not a cocycle")]
    NotCocycle(String),
    #[error("generator `{0}` has degree 1; its loop partner would have degree 0")]
    DegreeOneGenerator(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("morphism is invalid: {0}")]
    InvalidMorphism(String),
    #[error("model is invalid: {0}")]
    InvalidModel(String),
    #[error("source and target models do not match")]
    ModelMismatch,
}

pub type Result<T, E = AlgebraError> = core::result::Result<T, E>;
