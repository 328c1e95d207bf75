use num_bigint::BigInt;
use thiserror::Error;

use crate::polyring::Polynomial;

/// Errors raised by the arithmetic kernel and the formula pipeline.
///
/// `NotDivisible` and `NonIntegerCoefficient` are the library's primary
/// self-diagnostics: every displayed formula must collapse to an exact
/// polynomial (or an integer series), so a failure here signals a
/// transcription error rather than a user mistake.
#[derive(Debug, Error)]
pub enum Error {
    #[error("polynomial division left a nonzero remainder: {remainder}")]
    NotDivisible { remainder: Polynomial },

    #[error(
        "cone truncation produced a negative cokernel dimension {coefficient} in degree {degree}"
    )]
    NegativeCokernel { degree: usize, coefficient: BigInt },

    #[error("series coefficient in degree {degree} is not an integer")]
    NonIntegerCoefficient { degree: usize },

    #[error("series has a pole at t = 0")]
    SeriesPole,

    #[error("{quantity} has negative coefficient {coefficient} in degree {degree}")]
    NegativeCoefficient {
        quantity: String,
        degree: usize,
        coefficient: BigInt,
    },

    #[error("{quantity} has degree {found} but must have degree {expected}")]
    DegreeMismatch {
        quantity: String,
        expected: usize,
        found: String,
    },

    #[error("genus must be an integer >= 2, got {value}")]
    InvalidGenus { value: i64 },

    #[error("unknown quantity `{name}`")]
    UnknownQuantity { name: String },

    #[error("{message}")]
    InvalidArgument { message: String },

    #[error("cross-check {check} failed: {detail}")]
    CheckFailed { check: String, detail: String },
}

pub type Result<T> = std::result::Result<T, Error>;
