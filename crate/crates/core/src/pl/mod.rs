//! Exact minimization of piecewise-linear objectives over rational
//! polytopes by vertex enumeration.
//!
//! The objective is `lin·x + const + Σ sign·max(0, c·x − r)`. Its minimum
//! over a bounded polyhedron is attained at a point where the affine hull of
//! the equalities meets enough constraint boundaries and hinge breakpoints to
//! pin down a single point, so it suffices to enumerate those intersections.

mod linalg;
mod presets;
mod program;
mod sample;
mod solve;

pub use linalg::{affine_solution, nullspace, rank, solve_fraction_free, ExactInt, Overflow};
pub use presets::{bound, preset, preset_names, BoundCase};
pub use program::{Constraint, Hinge, Objective, PLProgram};
pub use sample::sample_check;
pub use solve::{solve, PLSolution};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PlError {
    #[error("feasible region is empty")]
    Infeasible,
    #[error("feasible region is unbounded")]
    Unbounded,
    #[error("vector of length {got} where {expected} was expected")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("hinge sign must be 1 or -1, got {0}")]
    InvalidHingeSign(i64),
    #[error("unknown preset `{0}`")]
    UnknownPreset(String),
    #[error("malformed program JSON: {0}")]
    InvalidJson(String),
    #[error("no feasible sample found in {0} attempts")]
    NoFeasibleSample(u64),
    #[error("number of trials must be at least 1")]
    InvalidTrials,
    #[error("bounds exist for k = 4 and 5 only, got {0}")]
    UnsupportedDegree(i64),
    #[error("genus must be at least 2, got {0}")]
    InvalidGenus(i64),
}
