use alloc::string::String;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("inconsistent linear system")]
    Inconsistent,
    #[error("no rational interpolant with degrees ({0}, {1})")]
    Reconstruction(usize, usize),
    #[error("series not invertible: vanishing leading coefficient")]
    NotInvertible,
    #[error("non-rational {0}, exact mode unavailable")]
    NonRational(String),
    #[error("singular evaluation: {0}")]
    Singular(String),
    #[error("coinciding points")]
    CoincidingPoints,
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("check failed: {0}")]
    Check(String),
}

pub type Result<T> = core::result::Result<T, Error>;
