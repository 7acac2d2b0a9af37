use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A division that fraction-free elimination guarantees to be exact left a
    /// remainder. Always an upstream bug, never a property of the data.
    #[error("non-exact division: {dividend} / {divisor}")]
    NonExactDivision { dividend: String, divisor: String },

    #[error("division by zero")]
    DivisionByZero,

    #[error("binomial coefficient undefined for negative n = {0}")]
    NegativeBinomial(i64),

    #[error("convolution index k must be >= 1, got {0}")]
    InvalidConvolutionIndex(i64),

    #[error("determinant size must be >= 0, got {0}")]
    NegativeSize(i64),

    #[error("coefficient x^{index} requested from a series truncated at order {order}")]
    BeyondTruncation { index: i64, order: usize },

    #[error("reciprocal requires constant coefficient 1, got {0}")]
    NonUnitConstant(String),

    #[error("operands live in different coefficient rings")]
    MixedRing,

    #[error("path length {length} exceeds the enumeration cap {cap}")]
    PathCapExceeded { length: usize, cap: usize },

    #[error("need at least {needed} coefficients, got {got}")]
    InsufficientCoefficients { needed: usize, got: usize },

    #[error("invalid JSON value: {0}")]
    Json(String),
}
