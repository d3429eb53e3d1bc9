use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("element {0} is not invertible")]
    NotInvertible(String),
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("no feasible decoding parameters: {0}")]
    Infeasible(String),
    #[error("oracle limit exceeded: {0}")]
    OracleCap(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

macro_rules! invalid {
    ($($arg:tt)*) => {
        $crate::Error::InvalidInput(format!($($arg)*))
    };
}
pub(crate) use invalid;
