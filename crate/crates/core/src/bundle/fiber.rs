use std::fmt;
use std::sync::Arc;

use super::{Ambient, BundleError};
use crate::exact::{rat, GradedPoly, Rational, Ring};

/// The Chow ring of a P¹-bundle `P → B`: `A*(B)[z]/(z² + c₂)` where `z`
/// restricts to the hyperplane class on every fibre and `c₂` is a fixed
/// degree-2 class on the base (possibly zero).
#[derive(Debug)]
pub struct FiberRing {
    base: Ring,
    c2: GradedPoly,
}

impl PartialEq for FiberRing {
    fn eq(&self, other: &Self) -> bool {
        self.base.same_as(&other.base) && self.c2 == other.c2
    }
}

impl FiberRing {
    pub fn new(base: &Ring, c2: GradedPoly) -> Result<Arc<Self>, BundleError> {
        if !c2.ring().same_as(base) {
            return Err(BundleError::RingMismatch);
        }
        if !c2.is_homogeneous_of(2) {
            return Err(BundleError::DegreeMismatch { index: 2 });
        }
        Ok(Arc::new(FiberRing {
            base: base.clone(),
            c2,
        }))
    }

    /// Uses the base generator `name` as `c₂`.
    pub fn with_c2_generator(base: &Ring, name: &str) -> Result<Arc<Self>, BundleError> {
        let c2 = GradedPoly::generator(base, name)?;
        Self::new(base, c2)
    }

    pub fn base(&self) -> &Ring {
        &self.base
    }

    pub fn c2(&self) -> &GradedPoly {
        &self.c2
    }

    pub fn z(self: &Arc<Self>) -> FiberClass {
        FiberClass {
            ring: self.clone(),
            base: GradedPoly::zero(&self.base),
            z: GradedPoly::one(&self.base),
        }
    }

    /// Pullback `π*` of a base class.
    pub fn lift(self: &Arc<Self>, p: &GradedPoly) -> Result<FiberClass, BundleError> {
        FiberClass::new(self, p.clone(), GradedPoly::zero(&self.base))
    }

    pub fn zero(self: &Arc<Self>) -> FiberClass {
        FiberClass {
            ring: self.clone(),
            base: GradedPoly::zero(&self.base),
            z: GradedPoly::zero(&self.base),
        }
    }

    pub fn one(self: &Arc<Self>) -> FiberClass {
        FiberClass {
            ring: self.clone(),
            base: GradedPoly::one(&self.base),
            z: GradedPoly::zero(&self.base),
        }
    }

    pub fn integer(self: &Arc<Self>, n: i64) -> FiberClass {
        self.one().scaled(&rat(n))
    }

    pub(crate) fn same_as(self: &Arc<Self>, other: &Arc<Self>) -> bool {
        Arc::ptr_eq(self, other) || **self == **other
    }
}

/// `P + Q·z` with `P, Q` base classes.
#[derive(Clone, Debug)]
pub struct FiberClass {
    ring: Arc<FiberRing>,
    base: GradedPoly,
    z: GradedPoly,
}

impl PartialEq for FiberClass {
    fn eq(&self, other: &Self) -> bool {
        self.ring.same_as(&other.ring) && self.base == other.base && self.z == other.z
    }
}

impl FiberClass {
    pub fn new(
        ring: &Arc<FiberRing>,
        base: GradedPoly,
        z: GradedPoly,
    ) -> Result<Self, BundleError> {
        if !base.ring().same_as(&ring.base) || !z.ring().same_as(&ring.base) {
            return Err(BundleError::RingMismatch);
        }
        Ok(FiberClass {
            ring: ring.clone(),
            base,
            z,
        })
    }

    pub fn ring(&self) -> &Arc<FiberRing> {
        &self.ring
    }

    /// The `P` in `P + Q·z`.
    pub fn base_part(&self) -> &GradedPoly {
        &self.base
    }

    /// The `Q` in `P + Q·z`.
    pub fn z_part(&self) -> &GradedPoly {
        &self.z
    }

    /// Proper pushforward `π_*(P + Q·z) = Q`.
    pub fn push_pi(&self) -> GradedPoly {
        self.z.clone()
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

    pub fn scale_int(&self, n: i64) -> Self {
        self.scaled(&rat(n))
    }

    /// Degree-`d` component: base part of degree `d`, z part of degree `d − 1`.
    pub fn degree_part(&self, d: u32) -> Self {
        let base = self.base.filter_degree(|e| e == d);
        let z = if d == 0 {
            GradedPoly::zero(self.base.ring())
        } else {
            self.z.filter_degree(|e| e + 1 == d)
        };
        FiberClass {
            ring: self.ring.clone(),
            base,
            z,
        }
    }
}

impl Ambient for FiberClass {
    fn zero_like(&self) -> Self {
        self.ring.zero()
    }

    fn one_like(&self) -> Self {
        self.ring.one()
    }

    fn plus(&self, other: &Self) -> Self {
        FiberClass {
            ring: self.ring.clone(),
            base: &self.base + &other.base,
            z: &self.z + &other.z,
        }
    }

    fn times(&self, other: &Self) -> Self {
        let qq = &self.z * &other.z;
        let base = &(&self.base * &other.base) - &(&self.ring.c2 * &qq);
        let z = &(&self.base * &other.z) + &(&self.z * &other.base);
        FiberClass {
            ring: self.ring.clone(),
            base,
            z,
        }
    }

    fn scaled(&self, q: &Rational) -> Self {
        FiberClass {
            ring: self.ring.clone(),
            base: self.base.scale(q),
            z: self.z.scale(q),
        }
    }

    fn is_zero(&self) -> bool {
        self.base.is_zero() && self.z.is_zero()
    }

    fn same_ring(&self, other: &Self) -> bool {
        self.ring.same_as(&other.ring)
    }

    fn is_homogeneous_of(&self, d: u32) -> bool {
        let z_ok = if d == 0 {
            self.z.is_zero()
        } else {
            self.z.is_homogeneous_of(d - 1)
        };
        self.base.is_homogeneous_of(d) && z_ok
    }

    fn as_constant(&self) -> Option<Rational> {
        if self.z.is_zero() {
            self.base.as_constant()
        } else {
            None
        }
    }

    fn degree_budget(&self) -> u32 {
        self.ring.base.truncation()
    }
}

impl fmt::Display for FiberClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.base.is_zero(), self.z.is_zero()) {
            (true, true) => write!(f, "0"),
            (false, true) => write!(f, "{}", self.base),
            (true, false) => write!(f, "({})*z", self.z),
            (false, false) => write!(f, "{} + ({})*z", self.base, self.z),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::RingSpec;

    fn setup() -> Arc<FiberRing> {
        let base = RingSpec::new([("c2", 2), ("a1", 1)], 6).unwrap();
        FiberRing::with_c2_generator(&base, "c2").unwrap()
    }

    #[test]
    fn z_squared_is_minus_c2() {
        let r = setup();
        let z = r.z();
        let c2 = GradedPoly::generator(r.base(), "c2").unwrap();
        assert_eq!(z.times(&z), r.lift(&c2).unwrap().negated());
    }

    #[test]
    fn pushforward_reads_z_coefficient() {
        let r = setup();
        let a1 = r
            .lift(&GradedPoly::generator(r.base(), "a1").unwrap())
            .unwrap();
        let x = a1.times(&r.z()).plus(&a1);
        assert_eq!(x.push_pi(), GradedPoly::generator(r.base(), "a1").unwrap());
        assert!(r.one().push_pi().is_zero());
    }

    #[test]
    fn degree_parts() {
        let r = setup();
        let z = r.z();
        let x = r.one().plus(&z).plus(&z.times(&z));
        assert_eq!(x.degree_part(1), z);
        assert!(x.degree_part(2).is_homogeneous_of(2));
        assert!(!x.is_homogeneous_of(2));
    }

    #[test]
    fn mismatched_rings() {
        let r = setup();
        let other = FiberRing::new(r.base(), GradedPoly::zero(r.base())).unwrap();
        assert_eq!(r.z().try_add(&other.z()), Err(BundleError::RingMismatch));
        let wrong = GradedPoly::generator(r.base(), "a1").unwrap();
        assert!(FiberRing::new(r.base(), wrong).is_err());
    }
}
