//! Casnati–Ekedahl classes for covers of degree 3, 4 and 5: generator rings,
//! the universal curve class in `PE^∨` and κ-class expansion.

use std::sync::Arc;

use serde::Serialize;
use thiserror::Error;

use crate::bundle::{Ambient, BundleChar, BundleError, FiberClass, FiberRing, ZetaClass, ZetaRing};
use crate::exact::{rat, ExactError, GradedPoly, Ring, RingSpec};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CeError {
    #[error("unsupported cover degree {0}; expected 3, 4 or 5")]
    UnsupportedDegree(i64),
    #[error("truncation order {got} too small, need at least {needed}")]
    TruncationTooSmall { needed: i64, got: i64 },
    #[error("index {i} out of range 1..={max} for degree {k}")]
    RankIndexOutOfRange { i: i64, k: i64, max: i64 },
    #[error("genus must be at least {min}, got {got}")]
    InvalidGenus { min: i64, got: i64 },
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    Bundle(#[from] BundleError),
}

/// How the genus enters the computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Genus {
    /// `a₁′ = g + k − 1` with `g` a fixed integer.
    Numeric(i64),
    /// `a₁′ = g + k − 1` with `g` a degree-zero symbol.
    Symbolic,
    /// `a₁′` left as a degree-zero symbol of its own.
    Unspecialized,
}

/// The degree-`k` CE generators with their weighted degrees, in order.
pub fn ce_generators(k: i64) -> Result<Vec<(String, u32)>, CeError> {
    let mut gens: Vec<(String, u32)> = vec![("c2".into(), 2)];
    let (a_top, b_top) = match k {
        3 => (2, 0),
        4 => (3, 2),
        5 => (4, 5),
        _ => return Err(CeError::UnsupportedDegree(k)),
    };
    for i in 1..=a_top {
        gens.push((format!("a{i}"), i));
    }
    for i in 2..=a_top {
        gens.push((format!("a{i}'"), i - 1));
    }
    for i in 2..=b_top {
        gens.push((format!("b{i}"), i));
    }
    for i in 2..=b_top {
        gens.push((format!("b{i}'"), i - 1));
    }
    Ok(gens)
}

/// Everything needed to run the CE pipeline for one cover degree.
#[derive(Debug, Clone)]
pub struct CeSetup {
    k: i64,
    genus: Genus,
    ring: Ring,
    fiber: Arc<FiberRing>,
    zeta: Arc<ZetaRing>,
    e_chern: Vec<FiberClass>,
    f_chern: Option<Vec<FiberClass>>,
}

impl CeSetup {
    pub fn new(k: i64, genus: Genus, truncation: i64) -> Result<Self, CeError> {
        if truncation < 2 {
            return Err(CeError::TruncationTooSmall {
                needed: 2,
                got: truncation,
            });
        }
        let gens = ce_generators(k)?;
        let params: Vec<&str> = match genus {
            Genus::Numeric(_) => vec![],
            Genus::Symbolic => vec!["g"],
            Genus::Unspecialized => vec!["a1'"],
        };
        let ring = RingSpec::with_parameters(
            gens.iter().map(|(n, d)| (n.clone(), i64::from(*d))),
            params,
            truncation,
        )?;
        let gen = |name: &str| GradedPoly::generator(&ring, name);
        let a1_prime = match genus {
            Genus::Numeric(g) => GradedPoly::integer(&ring, g + k - 1),
            Genus::Symbolic => &gen("g")? + &GradedPoly::integer(&ring, k - 1),
            Genus::Unspecialized => gen("a1'")?,
        };
        let fiber = FiberRing::with_c2_generator(&ring, "c2")?;

        let mut e_chern = Vec::new();
        for i in 1..k {
            let a = gen(&format!("a{i}"))?;
            let a_prime = if i == 1 {
                a1_prime.clone()
            } else {
                gen(&format!("a{i}'"))?
            };
            e_chern.push(FiberClass::new(&fiber, a, a_prime)?);
        }
        let f_chern = match k {
            4 | 5 => {
                let (rank, mult) = if k == 4 { (2, 1) } else { (5, 2) };
                let mut classes = vec![e_chern[0].scale_int(mult)];
                for i in 2..=rank {
                    classes.push(FiberClass::new(
                        &fiber,
                        gen(&format!("b{i}"))?,
                        gen(&format!("b{i}'"))?,
                    )?);
                }
                Some(classes)
            }
            _ => None,
        };
        // PE^∨ is cut out by the Chern classes of E^∨.
        let dual: Vec<FiberClass> = e_chern
            .iter()
            .enumerate()
            .map(|(i, c)| if i % 2 == 0 { c.negated() } else { c.clone() })
            .collect();
        let zeta = ZetaRing::projectivize(&fiber, dual)?;
        Ok(CeSetup {
            k,
            genus,
            ring,
            fiber,
            zeta,
            e_chern,
            f_chern,
        })
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    pub fn genus(&self) -> &Genus {
        &self.genus
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn fiber(&self) -> &Arc<FiberRing> {
        &self.fiber
    }

    pub fn zeta_ring(&self) -> &Arc<ZetaRing> {
        &self.zeta
    }

    /// `c₁(E), …, c_{k−1}(E)`.
    pub fn e_chern(&self) -> &[FiberClass] {
        &self.e_chern
    }

    /// Chern classes of `F = F₁`; `None` for `k = 3`.
    pub fn f_chern(&self) -> Option<&[FiberClass]> {
        self.f_chern.as_deref()
    }

    pub fn e_char(&self, top: usize) -> BundleChar {
        BundleChar::from_chern(&self.fiber.one(), &rat(self.k - 1), &self.e_chern, top)
            .expect("CE classes are homogeneous")
    }

    pub fn f_char(&self, top: usize) -> Option<BundleChar> {
        let f = self.f_chern.as_ref()?;
        let rank = f.len() as i64;
        Some(
            BundleChar::from_chern(&self.fiber.one(), &rat(rank), f, top)
                .expect("CE classes are homogeneous"),
        )
    }

    /// The terms `F_i(−t)` of the resolution of `O_C` together with their
    /// sign `(−1)^i`, for `i = 1, …, k − 2`.
    fn resolution_terms(&self, top: usize) -> Vec<(i64, BundleChar, i64)> {
        let det_e = self.e_char(top).det();
        let k = self.k;
        let mut terms = Vec::new();
        if let Some(f) = self.f_char(top) {
            terms.push((-1, f.clone(), -2));
            if k == 5 {
                let f2 = f.dual().tensor(&det_e).expect("same ring");
                terms.push((1, f2, -3));
            }
        }
        let sign = if k % 2 == 0 { 1 } else { -1 };
        terms.push((sign, det_e, -k));
        terms
    }

    /// Fundamental class of the universal curve in `PE^∨`, of degree `k − 2`:
    /// `[C] = Σ_i (−1)^i ch_{k−2}(F_i(−t_i))` with `t_i = i + 1` for `i < k − 2`
    /// and `F_{k−2}(−k) = det E(−k)`.
    pub fn curve_class(&self) -> ZetaClass {
        let top = (self.k - 2) as usize;
        let mut acc = self.zeta.zero();
        for (sign, ch, twist) in self.resolution_terms(top) {
            let lifted = ch
                .pullback_gamma(&self.zeta)
                .expect("same fibre ring")
                .twist_zeta(twist);
            acc = acc.plus(&lifted.ch(top).scaled(&rat(sign)));
        }
        acc
    }

    /// `c₁(ω_f)` restricted from `PE^∨`: `ζ − 2z`.
    pub fn relative_dualizing(&self) -> ZetaClass {
        let z = self.zeta.lift(&self.fiber.z()).expect("same fibre ring");
        self.zeta.zeta().minus(&z.scaled(&rat(2)))
    }

    /// `κ_i = π_* γ_* ([C] · c₁(ω)^{i+1})`.
    pub fn kappa(&self, i: u32) -> Result<KappaResult, CeError> {
        let d = i64::from(self.ring.truncation());
        if i64::from(i) >= d {
            return Err(CeError::TruncationTooSmall {
                needed: i64::from(i) + 1,
                got: d,
            });
        }
        let integrand = self
            .curve_class()
            .times(&self.relative_dualizing().power(i + 1));
        let polynomial = integrand.push_gamma().push_pi();
        Ok(KappaResult {
            index: i,
            k: self.k,
            polynomial,
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct KappaResult {
    pub index: u32,
    pub k: i64,
    pub polynomial: GradedPoly,
}

/// Rank of `F_i` in the resolution of a degree-`k` cover, `1 ≤ i ≤ k − 2`.
pub fn ce_rank(i: i64, k: i64) -> Result<u64, CeError> {
    if !(3..=5).contains(&k) {
        return Err(CeError::UnsupportedDegree(k));
    }
    if i < 1 || i > k - 2 {
        return Err(CeError::RankIndexOutOfRange { i, k, max: k - 2 });
    }
    if i == k - 2 {
        return Ok(1);
    }
    let binom = (0..i + 1).fold(1i64, |acc, j| acc * (k - j) / (j + 1));
    Ok((i * (k - 2 - i) * binom / (k - 1)) as u64)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Presentation {
    pub generators: Vec<(String, u32)>,
    /// No relations among the generators hold below this degree.
    pub truncation_bound: i64,
}

pub fn presentation(k: i64, genus: i64) -> Result<Presentation, CeError> {
    let generators = ce_generators(k)?;
    if genus < 2 {
        return Err(CeError::InvalidGenus { min: 2, got: genus });
    }
    Ok(Presentation {
        generators,
        truncation_bound: genus + k,
    })
}
