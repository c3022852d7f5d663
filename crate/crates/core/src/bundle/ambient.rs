use std::fmt::Debug;

use crate::exact::{rat, GradedPoly, Rational};

/// A commutative graded Q-algebra in which Chern characters can live.
pub trait Ambient: Clone + PartialEq + Debug + Send + Sync {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn plus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn scaled(&self, q: &Rational) -> Self;
    fn is_zero(&self) -> bool;
    /// Whether `other` lives in the same ring as `self`.
    fn same_ring(&self, other: &Self) -> bool;
    /// True when every component has total degree `d`.
    fn is_homogeneous_of(&self, d: u32) -> bool;
    /// Value of a degree-zero constant element.
    fn as_constant(&self) -> Option<Rational>;
    /// Highest total degree still represented faithfully under truncation.
    fn degree_budget(&self) -> u32;

    fn minus(&self, other: &Self) -> Self {
        self.plus(&other.negated())
    }

    fn negated(&self) -> Self {
        self.scaled(&rat(-1))
    }

    fn constant_like(&self, q: &Rational) -> Self {
        self.one_like().scaled(q)
    }

    fn power(&self, n: u32) -> Self {
        let mut acc = self.one_like();
        for _ in 0..n {
            acc = acc.times(self);
        }
        acc
    }
}

impl Ambient for GradedPoly {
    fn zero_like(&self) -> Self {
        GradedPoly::zero(self.ring())
    }

    fn one_like(&self) -> Self {
        GradedPoly::one(self.ring())
    }

    fn plus(&self, other: &Self) -> Self {
        self + other
    }

    fn times(&self, other: &Self) -> Self {
        self * other
    }

    fn scaled(&self, q: &Rational) -> Self {
        self.scale(q)
    }

    fn is_zero(&self) -> bool {
        GradedPoly::is_zero(self)
    }

    fn same_ring(&self, other: &Self) -> bool {
        self.ring().same_as(other.ring())
    }

    fn is_homogeneous_of(&self, d: u32) -> bool {
        GradedPoly::is_homogeneous_of(self, d)
    }

    fn as_constant(&self) -> Option<Rational> {
        GradedPoly::as_constant(self)
    }

    fn degree_budget(&self) -> u32 {
        self.ring().truncation() - 1
    }
}
