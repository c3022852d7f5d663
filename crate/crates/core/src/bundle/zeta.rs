use std::fmt;
use std::sync::Arc;

use super::{Ambient, BundleError, FiberClass, FiberRing};
use crate::exact::{rat, Rational};

/// Chow ring of the projectivization `γ: PV → P` of a rank `r` bundle `V`
/// on a P¹-bundle, presented as `A*(P)[ζ]/(ζʳ + c₁(V)ζʳ⁻¹ + … + c_r(V))`.
#[derive(Debug)]
pub struct ZetaRing {
    fiber: Arc<FiberRing>,
    /// `c₁(V), …, c_r(V)`.
    relation: Vec<FiberClass>,
}

impl PartialEq for ZetaRing {
    fn eq(&self, other: &Self) -> bool {
        self.fiber.same_as(&other.fiber) && self.relation == other.relation
    }
}

impl ZetaRing {
    /// `chern` lists `c₁(V), …, c_r(V)`; its length is the rank.
    pub fn projectivize(
        fiber: &Arc<FiberRing>,
        chern: Vec<FiberClass>,
    ) -> Result<Arc<Self>, BundleError> {
        if chern.is_empty() {
            return Err(BundleError::EmptyProjectivization);
        }
        for (i, c) in chern.iter().enumerate() {
            if !c.ring().same_as(fiber) {
                return Err(BundleError::RingMismatch);
            }
            if !c.is_homogeneous_of(i as u32 + 1) {
                return Err(BundleError::DegreeMismatch { index: i + 1 });
            }
        }
        Ok(Arc::new(ZetaRing {
            fiber: fiber.clone(),
            relation: chern,
        }))
    }

    pub fn fiber(&self) -> &Arc<FiberRing> {
        &self.fiber
    }

    pub fn rank(&self) -> usize {
        self.relation.len()
    }

    pub fn relation(&self) -> &[FiberClass] {
        &self.relation
    }

    pub fn zeta(self: &Arc<Self>) -> ZetaClass {
        let mut coeffs = vec![self.fiber.zero(); self.rank()];
        if self.rank() == 1 {
            coeffs[0] = self.relation[0].negated();
        } else {
            coeffs[1] = self.fiber.one();
        }
        ZetaClass {
            ring: self.clone(),
            coeffs,
        }
    }

    /// Pullback `γ*`.
    pub fn lift(self: &Arc<Self>, x: &FiberClass) -> Result<ZetaClass, BundleError> {
        if !x.ring().same_as(&self.fiber) {
            return Err(BundleError::RingMismatch);
        }
        let mut coeffs = vec![self.fiber.zero(); self.rank()];
        coeffs[0] = x.clone();
        Ok(ZetaClass {
            ring: self.clone(),
            coeffs,
        })
    }

    pub fn zero(self: &Arc<Self>) -> ZetaClass {
        ZetaClass {
            ring: self.clone(),
            coeffs: vec![self.fiber.zero(); self.rank()],
        }
    }

    pub fn one(self: &Arc<Self>) -> ZetaClass {
        let mut z = self.zero();
        z.coeffs[0] = self.fiber.one();
        z
    }

    pub(crate) fn same_as(self: &Arc<Self>, other: &Arc<Self>) -> bool {
        Arc::ptr_eq(self, other) || **self == **other
    }
}

/// `Σ_{j<r} x_j ζʲ` with `x_j ∈ A*(P)`, always kept in reduced form.
#[derive(Clone, Debug)]
pub struct ZetaClass {
    ring: Arc<ZetaRing>,
    coeffs: Vec<FiberClass>,
}

impl PartialEq for ZetaClass {
    fn eq(&self, other: &Self) -> bool {
        self.ring.same_as(&other.ring) && self.coeffs == other.coeffs
    }
}

impl ZetaClass {
    pub fn ring(&self) -> &Arc<ZetaRing> {
        &self.ring
    }

    /// Coefficients of `1, ζ, …, ζʳ⁻¹`.
    pub fn coefficients(&self) -> &[FiberClass] {
        &self.coeffs
    }

    /// `γ_*`: the coefficient of `ζʳ⁻¹`.
    pub fn push_gamma(&self) -> FiberClass {
        self.coeffs[self.coeffs.len() - 1].clone()
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, BundleError> {
        self.check(other)?;
        Ok(self.plus(other))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, BundleError> {
        self.check(other)?;
        Ok(self.times(other))
    }

    fn check(&self, other: &Self) -> Result<(), BundleError> {
        if self.ring.same_as(&other.ring) {
            Ok(())
        } else {
            Err(BundleError::RingMismatch)
        }
    }
}

impl Ambient for ZetaClass {
    fn zero_like(&self) -> Self {
        self.ring.zero()
    }

    fn one_like(&self) -> Self {
        self.ring.one()
    }

    fn plus(&self, other: &Self) -> Self {
        ZetaClass {
            ring: self.ring.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.plus(b))
                .collect(),
        }
    }

    fn times(&self, other: &Self) -> Self {
        let r = self.coeffs.len();
        let zero = self.ring.fiber.zero();
        let mut full = vec![zero; 2 * r - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    full[i + j] = full[i + j].plus(&a.times(b));
                }
            }
        }
        for top in (r..full.len()).rev() {
            let lead = std::mem::replace(&mut full[top], self.ring.fiber.zero());
            if lead.is_zero() {
                continue;
            }
            for (i, c) in self.ring.relation.iter().enumerate() {
                let idx = top - (i + 1);
                full[idx] = full[idx].minus(&lead.times(c));
            }
        }
        full.truncate(r);
        ZetaClass {
            ring: self.ring.clone(),
            coeffs: full,
        }
    }

    fn scaled(&self, q: &Rational) -> Self {
        ZetaClass {
            ring: self.ring.clone(),
            coeffs: self.coeffs.iter().map(|c| c.scaled(q)).collect(),
        }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(FiberClass::is_zero)
    }

    fn same_ring(&self, other: &Self) -> bool {
        self.ring.same_as(&other.ring)
    }

    fn is_homogeneous_of(&self, d: u32) -> bool {
        self.coeffs.iter().enumerate().all(|(j, c)| {
            if (j as u32) > d {
                c.is_zero()
            } else {
                c.is_homogeneous_of(d - j as u32)
            }
        })
    }

    fn as_constant(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(FiberClass::is_zero) {
            self.coeffs[0].as_constant()
        } else {
            None
        }
    }

    fn degree_budget(&self) -> u32 {
        self.ring.fiber.base().truncation() + self.coeffs.len() as u32 - 1
    }
}

impl fmt::Display for ZetaClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            match j {
                0 => parts.push(format!("{c}")),
                1 => parts.push(format!("({c})*zeta")),
                _ => parts.push(format!("({c})*zeta^{j}")),
            }
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// `ζ` to a non-negative integer power, used by twisting helpers.
pub(crate) fn zeta_multiple(ring: &Arc<ZetaRing>, n: i64) -> ZetaClass {
    ring.zeta().scaled(&rat(n))
}
