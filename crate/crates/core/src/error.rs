//! Error type shared across the crate.

use thiserror::Error;

/// Errors produced by construction, parsing, and the canonical-form algorithms.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("degree {degree} is below the minimum {min} for this operation")]
    DegreeTooSmall { degree: usize, min: usize },

    #[error("generator {symbol}{index} is out of range for degree {degree}")]
    GeneratorOutOfRange {
        symbol: char,
        index: usize,
        degree: usize,
    },

    #[error("point {point} is out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },

    #[error("point {point} appears more than once")]
    DuplicatePoint { point: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("exponent {exponent} out of bounds for subscript {subscript} (expected 0..{subscript})")]
    ExponentOutOfBounds { subscript: usize, exponent: i64 },

    #[error("invalid exchange arguments: {0}")]
    InvalidExchangeArgs(String),

    #[error("not an even permutation")]
    OddPermutation,

    #[error("rewrite budget of {budget} exceeded while normalizing a word of length {word_len}")]
    RewriteBudgetExceeded { budget: u64, word_len: usize },

    #[error("internal error: normalized form disagrees with the encoding oracle ({0})")]
    NormalizeMismatch(String),

    #[error("no candidate convention holds: {0}")]
    ConventionUnresolved(String),
}

pub type Result<T> = std::result::Result<T, Error>;
