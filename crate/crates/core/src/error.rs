use thiserror::Error;

/// Errors raised by the arithmetic and table-building routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("field mismatch: GF({left_p}^{left_e}) vs GF({right_p}^{right_e})")]
    FieldMismatch {
        left_p: u32,
        left_e: u32,
        right_p: u32,
        right_e: u32,
    },

    #[error("division by zero")]
    DivisionByZero,

    /// A quotient that must be exact left a remainder. This always means an
    /// algebraic invariant was violated upstream.
    #[error("inexact division: remainder of degree {remainder_degree} (divisibility invariant violated)")]
    InexactDivision { remainder_degree: usize },

    #[error("gcd(0, 0) is undefined")]
    GcdOfZeros,

    #[error("degree {degree} exceeds the degree cap {cap}")]
    DegreeCap { degree: String, cap: u64 },

    #[error("enumeration of {size} items exceeds the cap {cap}")]
    EnumerationCap { size: String, cap: u64 },

    #[error("index ({n}, {k}) out of range")]
    IndexOutOfRange { n: u64, k: u64 },

    #[error("constant term is not a unit")]
    NonUnit,

    #[error("coefficient {index} is beyond the truncation order {order}")]
    BeyondTruncation { index: usize, order: usize },

    #[error("e_{level} has a nonzero coefficient at z^{exponent}, which is not a power of r")]
    SparsityViolation { level: u32, exponent: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// True for errors caused by a configured size guard rather than bad input.
    pub fn is_guard(&self) -> bool {
        matches!(self, Error::DegreeCap { .. } | Error::EnumerationCap { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
