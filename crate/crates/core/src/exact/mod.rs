//! Exact rational arithmetic and truncated graded polynomial rings.
//!
//! Every symbolic computation in the crate runs over [`GradedPoly`]: a
//! polynomial in named, weighted generators with rational coefficients,
//! where every monomial of weighted degree at least the ring's truncation
//! order is discarded on construction.

mod poly;
mod rational;
mod ring;

pub use poly::{GradedPoly, Monomial};
pub use rational::{format_rational, parse_rational, rat, ratio, serde_rational, Rational};
pub use ring::{Generator, Ring, RingSpec};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("duplicate generator name `{0}`")]
    DuplicateGenerator(String),
    #[error("generator `{name}` has non-positive degree {degree}")]
    NonPositiveDegree { name: String, degree: i64 },
    #[error("truncation order must be at least 1, got {0}")]
    InvalidTruncation(i64),
    #[error("operands belong to different rings")]
    RingMismatch,
    #[error("degree {degree} is outside 0..{truncation}")]
    DegreeOutOfRange { degree: i64, truncation: u32 },
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("cannot parse `{0}` as a rational number")]
    ParseRational(String),
    #[error("malformed polynomial JSON: {0}")]
    MalformedJson(String),
}
