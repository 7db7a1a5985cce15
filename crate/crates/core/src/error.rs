use crate::exact::Rational;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,

    #[error("exponential weight e^({0}x) survives normalization")]
    NonCancellingExpWeight(Rational),

    #[error("fractional power (x - {center})^{exponent} survives normalization")]
    NonIntegerPowerResidue { center: Rational, exponent: Rational },

    #[error("operator term of order {order} with x^{power} does not preserve even series")]
    ParityViolation { order: usize, power: i64 },

    #[error("coefficient of D^{order} is not a Laurent polynomial in x")]
    NonLaurentCoefficient { order: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("index n = {0} is outside the admissible range")]
    InvalidN(u32),

    #[error("alpha = {0} is not supported")]
    UnsupportedAlpha(i64),

    #[error("index {index} outside 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("truncation K = {k} too small, need at least {min}")]
    TruncationTooSmall { k: i64, min: i64 },

    #[error("cannot parse rational from {0:?}")]
    Parse(String),
}
