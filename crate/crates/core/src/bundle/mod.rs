//! Chern-class and Chern-character calculus on a P¹-bundle `π: P → B` and
//! on a projective bundle `γ: PV → P` over it.
//!
//! Three ambient rings are in play:
//!
//! * the base ring `A*(B)`, a truncated [`GradedPoly`](crate::exact::GradedPoly);
//! * `A*(P) = A*(B)[z]/(z² + c₂)`, elements are [`FiberClass`];
//! * `A*(PV) = A*(P)[ζ]/(ζʳ + c₁(V)ζʳ⁻¹ + … + c_r(V))`, elements are
//!   [`ZetaClass`].
//!
//! Bundles are carried by their Chern characters ([`Character`]); Chern
//! classes are computed from characters on demand.

mod ambient;
mod character;
mod fiber;
mod grr;
mod zeta;

pub use ambient::Ambient;
pub use character::{BundleChar, Character};
pub use fiber::{FiberClass, FiberRing};
pub use grr::{grr_push_pi, todd_coefficients};
pub use zeta::{ZetaClass, ZetaRing};

use thiserror::Error;

use crate::exact::ExactError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BundleError {
    #[error("operands live over different rings")]
    RingMismatch,
    #[error("Chern class input c_{index} has the wrong degree")]
    DegreeMismatch { index: usize },
    #[error("{given} Chern classes supplied for a rank {rank} bundle")]
    TooManyClasses { given: usize, rank: i64 },
    #[error("projective bundle of rank 0")]
    EmptyProjectivization,
    #[error("Adams operation index must be at least 1, got {0}")]
    InvalidAdamsIndex(i64),
    #[error(transparent)]
    Exact(#[from] ExactError),
}
