//! Error type shared by every module of the crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("precision must be at least 1")]
    ZeroPrecision,

    #[error(
        "operands use different configurations: p={lhs_p}, precision={lhs_prec} \
         vs p={rhs_p}, precision={rhs_prec}"
    )]
    ConfigMismatch {
        lhs_p: u64,
        lhs_prec: u32,
        rhs_p: u64,
        rhs_prec: u32,
    },

    #[error("division by zero")]
    DivisionByZero,

    /// The divisor is congruent to 0 modulo p^known_exp. It may be a true
    /// zero or a nonzero value of large valuation; the stored digits cannot
    /// tell the two apart.
    #[error(
        "divisor is zero at the working precision (congruent to 0 mod p^{known_exp}); \
         raise the precision or supply a provably nonzero value"
    )]
    DivisorZeroAtPrecision { known_exp: i64 },

    #[error("{what} lies outside the unit ball: valuation {valuation} < 0")]
    OutsideUnitBall { what: &'static str, valuation: i64 },

    #[error(
        "eigenvalue lies outside the realizable point spectrum: \
         need valuation >= 1, got valuation {got}"
    )]
    OutsidePointSpectrum { got: i64 },

    #[error(
        "coefficient {index} of a monic polynomial must be integral \
         (valuation >= 0), got valuation {valuation}"
    )]
    NotIntegral { index: usize, valuation: i64 },

    #[error(
        "precision budget exceeded: {what} needs valuation {needed} \
         but the working precision is {available}"
    )]
    PrecisionBudget {
        what: &'static str,
        needed: i64,
        available: u32,
    },

    #[error("dimension mismatch in {what}: expected {expected}, got {got}")]
    DimensionMismatch {
        what: &'static str,
        expected: usize,
        got: usize,
    },

    #[error("empty {0}")]
    Empty(&'static str),

    #[error("invalid {field}: {message}")]
    Parse { field: String, message: String },

    #[error("{0}")]
    Precondition(String),
}

impl Error {
    pub(crate) fn parse(field: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            field: field.into(),
            message: message.into(),
        }
    }
}
