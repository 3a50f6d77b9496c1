//! Error type shared by all kernel operations.

use thiserror::Error;

use crate::algebra::HElement;

#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Two operands live in different ambient spaces (coordinate counts differ).
    #[error("dimension mismatch: expected {expected} coordinates, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    /// Exponents live in Q^(2n); an odd coordinate count has no conjugate pairing.
    #[error("exponent has odd length {len}; coordinates come in conjugate pairs")]
    OddLength { len: usize },

    /// The ambient parameter n must be at least 1.
    #[error("ambient n must be positive")]
    ZeroAmbient,

    /// A pair index p outside 1..=n.
    #[error("index p = {p} out of range 1..={n}")]
    IndexOutOfRange { p: usize, n: usize },

    /// A tensor operation was applied at the wrong arity.
    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },

    /// An operation that is defined gradewise received a mixed-grade input.
    #[error("input is not homogeneous: grades {first} and {second} both occur")]
    NotHomogeneous { first: String, second: String },

    /// A tensor that must satisfy v + twist(v) = 0 does not.
    #[error("tensor is not skew: v + twist(v) = {defect}")]
    NotSkew { defect: String },

    /// The triangular constructor requires [a, b] = b exactly.
    #[error("bracket constraint [a, b] = b violated; defect [a, b] - b = {defect}")]
    BracketConstraint { defect: Box<HElement> },

    /// An internally verified postcondition failed.
    #[error("internal postcondition failed: {0}")]
    Postcondition(String),

    /// Malformed input text; `location` points into the offending document.
    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
