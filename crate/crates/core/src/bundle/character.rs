use std::sync::Arc;

use super::zeta::zeta_multiple;
use super::{Ambient, BundleError, FiberClass, FiberRing, ZetaClass, ZetaRing};
use crate::exact::{rat, GradedPoly, Rational};

/// Chern character `ch₀ + ch₁ + … + ch_top` of a (possibly virtual) bundle,
/// `pieces[d] = ch_d`. The rank is `ch₀`, which may be a symbolic constant.
#[derive(Clone, Debug, PartialEq)]
pub struct Character<A> {
    pieces: Vec<A>,
}

/// Character of a bundle on the P¹-bundle `P`.
pub type BundleChar = Character<FiberClass>;

fn factorial(n: usize) -> Rational {
    (1..=n as i64).fold(rat(1), |acc, k| acc * rat(k))
}

impl<A: Ambient> Character<A> {
    /// Wraps explicit pieces; `pieces[d]` must be homogeneous of degree `d`.
    pub fn from_pieces(pieces: Vec<A>) -> Result<Self, BundleError> {
        for (d, p) in pieces.iter().enumerate() {
            if !p.same_ring(&pieces[0]) {
                return Err(BundleError::RingMismatch);
            }
            if !p.is_homogeneous_of(d as u32) {
                return Err(BundleError::DegreeMismatch { index: d });
            }
        }
        Ok(Character { pieces })
    }

    /// Character of a rank `rank` bundle with Chern classes `chern[i] =
    /// c_{i+1}`, computed through `ch_top` via Newton's identities.
    pub fn from_chern(
        template: &A,
        rank: &Rational,
        chern: &[A],
        top: usize,
    ) -> Result<Self, BundleError> {
        for (i, c) in chern.iter().enumerate() {
            if !c.same_ring(template) {
                return Err(BundleError::RingMismatch);
            }
            if !c.is_homogeneous_of(i as u32 + 1) {
                return Err(BundleError::DegreeMismatch { index: i + 1 });
            }
        }
        let zero = template.zero_like();
        let e = |i: usize| chern.get(i - 1).cloned().unwrap_or_else(|| zero.clone());
        // p_d = Σ_{i=1}^{d-1} (-1)^{i-1} e_i p_{d-i} + (-1)^{d-1} d e_d
        let mut p: Vec<A> = vec![template.constant_like(rank)];
        for d in 1..=top {
            let mut acc = e(d).scaled(&rat(if d % 2 == 1 { d as i64 } else { -(d as i64) }));
            for i in 1..d {
                let term = e(i).times(&p[d - i]);
                acc = if i % 2 == 1 {
                    acc.plus(&term)
                } else {
                    acc.minus(&term)
                };
            }
            p.push(acc);
        }
        let pieces = p
            .into_iter()
            .enumerate()
            .map(|(d, x)| {
                if d == 0 {
                    x
                } else {
                    x.scaled(&(rat(1) / factorial(d)))
                }
            })
            .collect();
        Ok(Character { pieces })
    }

    /// Character of the trivial bundle of the given rank.
    pub fn trivial(template: &A, rank: i64, top: usize) -> Self {
        let mut pieces = vec![template.zero_like(); top + 1];
        pieces[0] = template.constant_like(&rat(rank));
        Character { pieces }
    }

    /// `e^{c₁}` for a line bundle with first Chern class `c1`.
    pub fn line(c1: &A, top: usize) -> Self {
        let mut pieces = Vec::with_capacity(top + 1);
        let mut pow = c1.one_like();
        for d in 0..=top {
            pieces.push(pow.scaled(&(rat(1) / factorial(d))));
            pow = pow.times(c1);
        }
        Character { pieces }
    }

    pub fn top(&self) -> usize {
        self.pieces.len() - 1
    }

    pub fn pieces(&self) -> &[A] {
        &self.pieces
    }

    pub fn ch(&self, d: usize) -> A {
        self.pieces
            .get(d)
            .cloned()
            .unwrap_or_else(|| self.pieces[0].zero_like())
    }

    /// Integer rank, when `ch₀` is an integer constant.
    pub fn rank(&self) -> Option<i64> {
        let c = self.pieces[0].as_constant()?;
        if c.is_integer() {
            i64::try_from(c.to_integer()).ok()
        } else {
            None
        }
    }

    pub fn truncated(&self, top: usize) -> Self {
        let mut pieces = self.pieces.clone();
        pieces.truncate(top + 1);
        Character { pieces }
    }

    /// Chern classes `c₁, …, c_top`. For an honest bundle those above the
    /// rank vanish; virtual classes may have more.
    pub fn chern_classes(&self) -> Vec<A> {
        let top = self.top();
        let limit = top;
        let zero = self.pieces[0].zero_like();
        let p: Vec<A> = (0..=top)
            .map(|d| self.pieces[d].scaled(&factorial(d)))
            .collect();
        // e_d = (1/d) Σ_{i=1}^{d} (-1)^{i-1} e_{d-i} p_i
        let mut e: Vec<A> = vec![self.pieces[0].one_like()];
        for d in 1..=limit {
            let mut acc = zero.clone();
            for i in 1..=d {
                let term = e[d - i].times(&p[i]);
                acc = if i % 2 == 1 {
                    acc.plus(&term)
                } else {
                    acc.minus(&term)
                };
            }
            e.push(acc.scaled(&(rat(1) / rat(d as i64))));
        }
        e.remove(0);
        e
    }

    fn check(&self, other: &Self) -> Result<(), BundleError> {
        if self.pieces[0].same_ring(&other.pieces[0]) {
            Ok(())
        } else {
            Err(BundleError::RingMismatch)
        }
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self, BundleError> {
        self.check(other)?;
        let top = self.top().min(other.top());
        Ok(Character {
            pieces: (0..=top)
                .map(|d| self.pieces[d].plus(&other.pieces[d]))
                .collect(),
        })
    }

    /// Formal difference `self − other` in K-theory.
    pub fn difference(&self, other: &Self) -> Result<Self, BundleError> {
        self.direct_sum(&other.negated())
    }

    pub fn negated(&self) -> Self {
        Character {
            pieces: self.pieces.iter().map(Ambient::negated).collect(),
        }
    }

    pub fn scaled(&self, q: &Rational) -> Self {
        Character {
            pieces: self.pieces.iter().map(|p| p.scaled(q)).collect(),
        }
    }

    pub fn tensor(&self, other: &Self) -> Result<Self, BundleError> {
        self.check(other)?;
        Ok(self.product(other))
    }

    fn product(&self, other: &Self) -> Self {
        let top = self.top().min(other.top());
        let pieces = (0..=top)
            .map(|d| {
                (0..=d).fold(self.pieces[0].zero_like(), |acc, i| {
                    acc.plus(&self.pieces[i].times(&other.pieces[d - i]))
                })
            })
            .collect();
        Character { pieces }
    }

    pub fn dual(&self) -> Self {
        Character {
            pieces: self
                .pieces
                .iter()
                .enumerate()
                .map(|(d, p)| if d % 2 == 1 { p.negated() } else { p.clone() })
                .collect(),
        }
    }

    /// Determinant line bundle, `e^{ch₁}`.
    pub fn det(&self) -> Self {
        Self::line(&self.ch(1), self.top())
    }

    /// Adams operation `ψᵏ`, scaling `ch_d` by `kᵈ`.
    pub fn adams(&self, k: i64) -> Result<Self, BundleError> {
        if k < 1 {
            return Err(BundleError::InvalidAdamsIndex(k));
        }
        Ok(self.adams_unchecked(k))
    }

    fn adams_unchecked(&self, k: i64) -> Self {
        let mut factor = rat(1);
        let mut pieces = Vec::with_capacity(self.pieces.len());
        for p in &self.pieces {
            pieces.push(p.scaled(&factor));
            factor *= rat(k);
        }
        Character { pieces }
    }

    /// `Sym²`: `(ch² + ψ²)/2`.
    pub fn sym2(&self) -> Self {
        let sq = self.product(self);
        let psi2 = self.adams_unchecked(2);
        sq.direct_sum(&psi2)
            .unwrap()
            .scaled(&Rational::new(1.into(), 2.into()))
    }

    /// `Λ²`: `(ch² − ψ²)/2`.
    pub fn wedge2(&self) -> Self {
        let sq = self.product(self);
        let psi2 = self.adams_unchecked(2);
        sq.difference(&psi2)
            .unwrap()
            .scaled(&Rational::new(1.into(), 2.into()))
    }

    /// `Sym³`: `(ch³ + 3ψ²·ch + 2ψ³)/6`.
    pub fn sym3(&self) -> Self {
        let cube = self.product(self).product(self);
        let mixed = self.adams_unchecked(2).product(self).scaled(&rat(3));
        let psi3 = self.adams_unchecked(3).scaled(&rat(2));
        cube.direct_sum(&mixed)
            .unwrap()
            .direct_sum(&psi3)
            .unwrap()
            .scaled(&Rational::new(1.into(), 6.into()))
    }

    pub fn map<B, F: Fn(&A) -> B>(&self, f: F) -> Character<B> {
        Character {
            pieces: self.pieces.iter().map(f).collect(),
        }
    }
}

impl Character<GradedPoly> {
    /// `π*` to the P¹-bundle.
    pub fn pullback_pi(&self, fiber: &Arc<FiberRing>) -> Result<BundleChar, BundleError> {
        let pieces = self
            .pieces
            .iter()
            .map(|p| fiber.lift(p))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Character { pieces })
    }
}

impl Character<FiberClass> {
    /// Builds a character from Chern classes `c_i = a_i + a_i′·z`, given as
    /// pairs of base classes of degrees `i` and `i − 1`.
    pub fn from_parts(
        fiber: &Arc<FiberRing>,
        parts: &[(GradedPoly, GradedPoly)],
        rank: i64,
        top: usize,
    ) -> Result<Self, BundleError> {
        if rank >= 0 && parts.len() > rank as usize {
            return Err(BundleError::TooManyClasses {
                given: parts.len(),
                rank,
            });
        }
        let chern = parts
            .iter()
            .enumerate()
            .map(|(i, (a, b))| {
                let c = FiberClass::new(fiber, a.clone(), b.clone())?;
                if !c.is_homogeneous_of(i as u32 + 1) {
                    return Err(BundleError::DegreeMismatch { index: i + 1 });
                }
                Ok(c)
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_chern(&fiber.one(), &rat(rank), &chern, top)
    }

    /// `⊗ O(n·z)`.
    pub fn twist_z(&self, n: i64) -> Self {
        let ring = self.pieces[0].ring();
        let l = Self::line(&ring.z().scale_int(n), self.top());
        self.product(&l)
    }

    /// `γ*` to the projective bundle.
    pub fn pullback_gamma(
        &self,
        zeta: &Arc<ZetaRing>,
    ) -> Result<Character<ZetaClass>, BundleError> {
        let pieces = self
            .pieces
            .iter()
            .map(|p| zeta.lift(p))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Character { pieces })
    }
}

impl Character<ZetaClass> {
    /// `⊗ O(n·ζ)`.
    pub fn twist_zeta(&self, n: i64) -> Self {
        let ring = self.pieces[0].ring();
        let l = Self::line(&zeta_multiple(ring, n), self.top());
        self.product(&l)
    }
}
