//! Splitting types of vector bundles on P¹ and the codimension formulas for
//! strata of degree 4 and 5 covers.

use std::cmp::Reverse;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SplittingError {
    #[error("cannot parse splitting type `{0}`")]
    Parse(String),
    #[error("expected rank {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },
    #[error("expected degree {expected}, got {got}")]
    DegreeMismatch { expected: i64, got: i64 },
    #[error("genus must be at least {min}, got {got}")]
    InvalidGenus { min: i64, got: i64 },
}

/// `O(e₁) ⊕ … ⊕ O(e_r)` on P¹, stored with `e₁ ≤ … ≤ e_r`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SplittingType {
    parts: Vec<i64>,
}

impl SplittingType {
    pub fn new(mut parts: Vec<i64>) -> Self {
        parts.sort_unstable();
        SplittingType { parts }
    }

    pub fn parts(&self) -> &[i64] {
        &self.parts
    }

    pub fn rank(&self) -> usize {
        self.parts.len()
    }

    pub fn degree(&self) -> i64 {
        self.parts.iter().sum()
    }

    fn expect_shape(&self, rank: usize, degree: Option<i64>) -> Result<(), SplittingError> {
        if self.rank() != rank {
            return Err(SplittingError::RankMismatch {
                expected: rank,
                got: self.rank(),
            });
        }
        if let Some(d) = degree {
            if self.degree() != d {
                return Err(SplittingError::DegreeMismatch {
                    expected: d,
                    got: self.degree(),
                });
            }
        }
        Ok(())
    }
}

impl fmt::Display for SplittingType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(i64::to_string).collect();
        write!(f, "{}", s.join(","))
    }
}

impl FromStr for SplittingType {
    type Err = SplittingError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.trim().is_empty() {
            return Ok(SplittingType::new(vec![]));
        }
        s.split(',')
            .map(|p| p.trim().parse::<i64>())
            .collect::<Result<Vec<_>, _>>()
            .map(SplittingType::new)
            .map_err(|_| SplittingError::Parse(s.to_string()))
    }
}

impl Serialize for SplittingType {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

pub fn h0(t: &SplittingType) -> i64 {
    t.parts.iter().map(|&e| (e + 1).max(0)).sum()
}

pub fn h1(t: &SplittingType) -> i64 {
    t.parts.iter().map(|&e| (-e - 1).max(0)).sum()
}

pub fn twist_type(t: &SplittingType, n: i64) -> SplittingType {
    SplittingType::new(t.parts.iter().map(|e| e + n).collect())
}

pub fn dual_type(t: &SplittingType) -> SplittingType {
    SplittingType::new(t.parts.iter().map(|e| -e).collect())
}

pub fn det_type(t: &SplittingType) -> SplittingType {
    SplittingType::new(vec![t.degree()])
}

pub fn tensor_type(s: &SplittingType, t: &SplittingType) -> SplittingType {
    let mut out = Vec::with_capacity(s.rank() * t.rank());
    for a in &s.parts {
        for b in &t.parts {
            out.push(a + b);
        }
    }
    SplittingType::new(out)
}

pub fn hom_type(s: &SplittingType, t: &SplittingType) -> SplittingType {
    tensor_type(&dual_type(s), t)
}

pub fn end_type(t: &SplittingType) -> SplittingType {
    hom_type(t, t)
}

pub fn sym2_type(t: &SplittingType) -> SplittingType {
    let p = &t.parts;
    let mut out = Vec::new();
    for i in 0..p.len() {
        for j in i..p.len() {
            out.push(p[i] + p[j]);
        }
    }
    SplittingType::new(out)
}

pub fn wedge2_type(t: &SplittingType) -> SplittingType {
    let p = &t.parts;
    let mut out = Vec::new();
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            out.push(p[i] + p[j]);
        }
    }
    SplittingType::new(out)
}

pub fn sym3_type(t: &SplittingType) -> SplittingType {
    let p = &t.parts;
    let mut out = Vec::new();
    for i in 0..p.len() {
        for j in i..p.len() {
            for k in j..p.len() {
                out.push(p[i] + p[j] + p[k]);
            }
        }
    }
    SplittingType::new(out)
}

/// Codimension of the simultaneous splitting locus of `(e, f)`:
/// `h¹(End e) + h¹(End f)`.
pub fn codim_simultaneous(e: &SplittingType, f: &SplittingType) -> i64 {
    h1(&end_type(e)) + h1(&end_type(f))
}

/// The bundle whose `h¹` cuts down degree 4 strata: `f^∨ ⊗ Sym² e`.
pub fn quadric_bundle4(e: &SplittingType, f: &SplittingType) -> SplittingType {
    tensor_type(&dual_type(f), &sym2_type(e))
}

/// The bundle whose `h¹` cuts down degree 5 strata:
/// `e ⊗ ∧² f ⊗ O(−g − 4)`.
pub fn pfaffian_bundle5(e: &SplittingType, f: &SplittingType, g: i64) -> SplittingType {
    twist_type(&tensor_type(e, &wedge2_type(f)), -g - 4)
}

/// `h¹(End e) + h¹(End f) − h¹(f^∨ ⊗ Sym² e)`, unclamped.
pub fn codim_hurwitz4(e: &SplittingType, f: &SplittingType) -> Result<i64, SplittingError> {
    e.expect_shape(3, None)?;
    f.expect_shape(2, None)?;
    Ok(codim_simultaneous(e, f) - h1(&quadric_bundle4(e, f)))
}

/// `h¹(End e) + h¹(End f) − h¹(e ⊗ ∧² f ⊗ O(−g − 4))`, unclamped.
pub fn codim_hurwitz5(e: &SplittingType, f: &SplittingType, g: i64) -> Result<i64, SplittingError> {
    e.expect_shape(4, Some(g + 4))?;
    f.expect_shape(5, Some(2 * g + 8))?;
    Ok(codim_simultaneous(e, f) - h1(&pfaffian_bundle5(e, f, g)))
}

/// Codimension of the locus of degree 4 covers factoring through a double
/// cover of a genus `g′` curve.
pub fn factoring_codim(g_prime: i64) -> i64 {
    2 * (g_prime + 1)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Flags4 {
    /// `deg e = deg f`.
    pub degrees_match: bool,
    /// `e₁ ≥ 1`.
    pub e1_positive: bool,
    /// `2e₁ ≥ f₁` and `2e₂ ≥ f₂`.
    pub quadric_bounds: bool,
    /// `e₁ + e₃ ≥ f₂`.
    pub non_factoring: bool,
    /// When `e₁ + e₃ < f₂`, the intermediate double cover has genus
    /// `f₁ − e₁ − 1 ≥ 0`; otherwise the cover is forced to be reducible.
    pub double_cover_connected: bool,
    pub irreducible_ok: bool,
    pub non_factoring_ok: bool,
    /// All summands of `f^∨ ⊗ Sym² e` have degree at least −1.
    pub in_h_prime: bool,
    /// All summands of `f^∨ ⊗ Sym² e` have degree at least 1.
    pub in_h_circ: bool,
}

pub fn constraints_4(e: &SplittingType, f: &SplittingType) -> Result<Flags4, SplittingError> {
    e.expect_shape(3, None)?;
    f.expect_shape(2, None)?;
    let (e1, e2, e3) = (e.parts[0], e.parts[1], e.parts[2]);
    let (f1, f2) = (f.parts[0], f.parts[1]);
    let degrees_match = e.degree() == f.degree();
    let e1_positive = e1 >= 1;
    let quadric_bounds = 2 * e1 >= f1 && 2 * e2 >= f2;
    let non_factoring = e1 + e3 >= f2;
    let double_cover_connected = f1 > e1;
    let irreducible_ok =
        degrees_match && e1_positive && quadric_bounds && (non_factoring || double_cover_connected);
    let q = quadric_bundle4(e, f);
    let lowest = q.parts.first().copied().unwrap_or(i64::MAX);
    Ok(Flags4 {
        degrees_match,
        e1_positive,
        quadric_bounds,
        non_factoring,
        double_cover_connected,
        irreducible_ok,
        non_factoring_ok: irreducible_ok && non_factoring,
        in_h_prime: lowest >= -1,
        in_h_circ: lowest >= 1,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Flags5 {
    /// `f₁ + f₃ + e₄ ≥ g + 4`.
    pub lower: bool,
    /// `f₁ + f₄ + e₃ ≥ g + 4`.
    pub imp2: bool,
    /// `f₂ + f₃ + e₃ ≥ g + 4`.
    pub imp3: bool,
    /// `f₁ ≥ 0`.
    pub f_globally_generated: bool,
    /// All three Pfaffian inequalities hold.
    pub pfaffian_ok: bool,
    /// `f` globally generated and every summand of `e ⊗ ∧² f ⊗ O(−g − 4)`
    /// has degree at least −1.
    pub in_h_prime: bool,
    /// As `in_h_prime` with every summand of degree at least 1.
    pub in_h_circ: bool,
}

pub fn constraints_5(
    e: &SplittingType,
    f: &SplittingType,
    g: i64,
) -> Result<Flags5, SplittingError> {
    e.expect_shape(4, Some(g + 4))?;
    f.expect_shape(5, Some(2 * g + 8))?;
    let e = &e.parts;
    let f_ = &f.parts;
    let d = g + 4;
    let lower = f_[0] + f_[2] + e[3] >= d;
    let imp2 = f_[0] + f_[3] + e[2] >= d;
    let imp3 = f_[1] + f_[2] + e[2] >= d;
    let gg = f_[0] >= 0;
    let p = pfaffian_bundle5(&SplittingType::new(e.clone()), f, g);
    let lowest = p.parts.first().copied().unwrap_or(i64::MAX);
    Ok(Flags5 {
        lower,
        imp2,
        imp3,
        f_globally_generated: gg,
        pfaffian_ok: lower && imp2 && imp3,
        in_h_prime: gg && lowest >= -1,
        in_h_circ: gg && lowest >= 1,
    })
}

/// Number of the 40 summands `e_i + f_j + f_k − (g + 4)`, `j < k`, that are
/// negative.
pub fn negative_summand_count5(
    e: &SplittingType,
    f: &SplittingType,
    g: i64,
) -> Result<usize, SplittingError> {
    e.expect_shape(4, Some(g + 4))?;
    f.expect_shape(5, Some(2 * g + 8))?;
    Ok(pfaffian_bundle5(e, f, g)
        .parts
        .iter()
        .filter(|&&d| d < 0)
        .count())
}

/// Non-decreasing integer vectors of length `rank`, sum `total`, first
/// entry at least `min_first`.
pub fn sorted_vectors(rank: usize, total: i64, min_first: i64) -> Vec<SplittingType> {
    fn go(rank: usize, total: i64, min: i64, prefix: &mut Vec<i64>, out: &mut Vec<SplittingType>) {
        if rank == 1 {
            if total >= min {
                prefix.push(total);
                out.push(SplittingType {
                    parts: prefix.clone(),
                });
                prefix.pop();
            }
            return;
        }
        // Remaining entries are all ≥ x, so x ≤ total / rank.
        let mut x = min;
        while x * rank as i64 <= total {
            prefix.push(x);
            go(rank - 1, total - x, x, prefix, out);
            prefix.pop();
            x += 1;
        }
    }
    let mut out = Vec::new();
    if rank > 0 {
        go(rank, total, min_first, &mut Vec::new(), &mut out);
    }
    out
}

/// Candidate degree 5 pairs at genus `g`: `e₁ ≥ 1` and `f₁ ≥ 0`.
pub fn candidate_pairs5(g: i64) -> impl Iterator<Item = (SplittingType, SplittingType)> {
    let fs = sorted_vectors(5, 2 * g + 8, 0);
    sorted_vectors(4, g + 4, 1)
        .into_iter()
        .flat_map(move |e| fs.clone().into_iter().map(move |f| (e.clone(), f)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StrataFilter {
    All,
    Irreducible,
    NonFactoring,
}

impl FromStr for StrataFilter {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "all" => Ok(StrataFilter::All),
            "irreducible" => Ok(StrataFilter::Irreducible),
            "non_factoring" | "non-factoring" => Ok(StrataFilter::NonFactoring),
            _ => Err(format!("unknown filter `{s}`")),
        }
    }
}

/// A candidate stratum of degree 4 covers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StratumRecord {
    pub e: SplittingType,
    pub f: SplittingType,
    pub codim: i64,
    pub flags: Flags4,
}

/// All `(e, f)` with `deg e = deg f = g + 3`, `e₁ ∈ [1, ⌊(g+3)/3⌋]`,
/// `f₁ ∈ [1, ⌊(g+3)/2⌋]` that pass `filter` and have non-negative codimension,
/// sorted by codimension and then by decreasing `e`, `f`.
pub fn enumerate_strata4(
    g: i64,
    filter: StrataFilter,
) -> Result<Vec<StratumRecord>, SplittingError> {
    if g < 2 {
        return Err(SplittingError::InvalidGenus { min: 2, got: g });
    }
    let d = g + 3;
    let mut out = Vec::new();
    for e in sorted_vectors(3, d, 1) {
        for f in sorted_vectors(2, d, 1) {
            let flags = constraints_4(&e, &f)?;
            let keep = match filter {
                StrataFilter::All => true,
                StrataFilter::Irreducible => flags.irreducible_ok,
                StrataFilter::NonFactoring => flags.non_factoring_ok,
            };
            let codim = codim_hurwitz4(&e, &f)?;
            if keep && codim >= 0 {
                out.push(StratumRecord {
                    e: e.clone(),
                    f,
                    codim,
                    flags,
                });
            }
        }
    }
    out.sort_by_key(|r| (r.codim, Reverse(r.e.clone()), Reverse(r.f.clone())));
    Ok(out)
}
