use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("division by zero: {0}")]
    DivisionByZero(String),
    #[error("polynomial is reducible: {0}")]
    Reducible(String),
    #[error("invalid order basis: {0}")]
    InvalidOrder(String),
    #[error("element is not in the order: {0}")]
    NotInOrder(String),
    #[error("zero ideal: {0}")]
    ZeroIdeal(String),
    #[error("ideals belong to different orders")]
    MixedOrders,
    #[error("order is not known to be maximal: {0}")]
    NotMaximal(String),
    #[error("method does not apply: {0}")]
    Inapplicable(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse(_) | Error::InvalidInput(_) => 2,
            Error::NotMaximal(_) | Error::Unsupported(_) | Error::Inapplicable(_) => 4,
            Error::Internal(_) => 1,
            _ => 3,
        }
    }
}
