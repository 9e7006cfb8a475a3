use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("D_K = {0} is not the discriminant of an imaginary quadratic field")]
    InvalidField(i64),

    #[error("all inputs are zero")]
    AllZero,

    #[error("content ideal is not principal (HNF {0:?})")]
    NonPrincipalContent([[i64; 2]; 2]),

    #[error("division by zero")]
    DivisionByZero,

    #[error("point is not positive (h = {0})")]
    NotPositive(String),

    #[error("point is not negative (h = {0})")]
    NotNegative(String),

    #[error("matrix does not preserve the Hermitian form")]
    NotUnitary,

    #[error("matrix does not have determinant 1")]
    NotSpecial,

    #[error("orbit enumeration reached the limit of {0} chains")]
    LimitExceeded(usize),

    #[error("{0} is not a norm from O_K")]
    NotANorm(String),

    #[error("no word of length <= {0} moves the point off z2 = 0")]
    CannotClearZ2(usize),

    #[error("({0}, {1}) is not an algebra with a > 0 > b")]
    InvalidAlgebra(i64, i64),

    #[error("ad - bc != 1")]
    NotUnimodular,

    #[error("quaternion does not have reduced norm 1")]
    NotNormOne,

    #[error("quaternion is not in the order O")]
    NotInOrder,

    #[error("operands live in different fields ({0} vs {1})")]
    FieldMismatch(i64, i64),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid generator set: {0}")]
    InvalidGenerators(String),
}

pub type Result<T> = std::result::Result<T, Error>;
