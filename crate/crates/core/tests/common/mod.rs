//! Independent re-derivations used as oracles by several test targets.
#![allow(dead_code)]

use std::sync::Arc;

use hurwitz_ce::bundle::{Ambient, BundleChar, FiberRing};
use hurwitz_ce::exact::{rat, Rational, RingSpec};
use hurwitz_ce::pl::{Constraint, Hinge, PLProgram};
use hurwitz_ce::splitting::SplittingType;
use rand::Rng;

/// `h¹(End e)` counted pair by pair.
pub fn h1_end(e: &[i64]) -> i64 {
    let mut total = 0;
    for a in e {
        for b in e {
            total += (a - b - 1).max(0);
        }
    }
    total
}

/// `h¹` of `f^∨ ⊗ Sym² e` counted summand by summand.
pub fn h1_quadrics(e: &[i64], f: &[i64]) -> i64 {
    let mut total = 0;
    for i in 0..e.len() {
        for j in i..e.len() {
            for fk in f {
                total += (fk - e[i] - e[j] - 1).max(0);
            }
        }
    }
    total
}

/// `h¹` of `e ⊗ ∧² f ⊗ O(−g−4)` counted summand by summand.
pub fn h1_pfaffians(e: &[i64], f: &[i64], g: i64) -> i64 {
    let mut total = 0;
    for ei in e {
        for j in 0..f.len() {
            for k in j + 1..f.len() {
                total += (g + 4 - ei - f[j] - f[k] - 1).max(0);
            }
        }
    }
    total
}

pub fn recount_codim4(e: &[i64], f: &[i64]) -> i64 {
    h1_end(e) + h1_end(f) - h1_quadrics(e, f)
}

pub fn recount_codim5(e: &[i64], f: &[i64], g: i64) -> i64 {
    h1_end(e) + h1_end(f) - h1_pfaffians(e, f, g)
}

/// Random sorted integer vector of length `rank` with sum `total`,
/// entries at least `min`.
pub fn random_type<R: Rng>(
    rng: &mut R,
    rank: usize,
    total: i64,
    min: i64,
) -> Option<SplittingType> {
    let spare = total - min * rank as i64;
    if spare < 0 {
        return None;
    }
    let mut cuts: Vec<i64> = (0..rank - 1).map(|_| rng.random_range(0..=spare)).collect();
    cuts.sort_unstable();
    let mut parts = Vec::with_capacity(rank);
    let mut prev = 0;
    for c in cuts {
        parts.push(min + c - prev);
        prev = c;
    }
    parts.push(min + spare - prev);
    Some(SplittingType::new(parts))
}

/// P¹-bundle over a base with only `c₂`, truncated at `d`.
pub fn bare_fiber(d: i64) -> Arc<FiberRing> {
    let base = RingSpec::new([("c2", 2)], d).unwrap();
    FiberRing::with_c2_generator(&base, "c2").unwrap()
}

/// `Σ exp(tᵢ z)`: the character of `O(t₁) ⊕ … ⊕ O(t_r)` pulled back along
/// the twist by `z`.
pub fn split_char(fiber: &Arc<FiberRing>, t: &SplittingType, top: usize) -> BundleChar {
    let mut acc = BundleChar::trivial(&fiber.one(), 0, top);
    for &d in t.parts() {
        let line = BundleChar::line(&fiber.z().scaled(&rat(d)), top);
        acc = acc.direct_sum(&line).unwrap();
    }
    acc
}

/// A bounded program with the origin feasible: a box, extra cuts through
/// non-negative right-hand sides, and random hinges.
pub fn random_program<R: Rng>(rng: &mut R) -> PLProgram {
    let n = rng.random_range(1..=3usize);
    let small = |rng: &mut R| rat(rng.random_range(-3..=3));
    let linear = (0..n).map(|_| small(rng)).collect();
    let mut p = PLProgram::new(n, linear);
    for i in 0..n {
        let mut lo = vec![rat(0); n];
        lo[i] = rat(-1);
        p.inequalities.push(Constraint::new(lo, rat(0)));
        let mut hi = vec![rat(0); n];
        hi[i] = rat(1);
        p.inequalities
            .push(Constraint::new(hi, rat(rng.random_range(1..=4))));
    }
    for _ in 0..rng.random_range(0..=2) {
        let coeffs = (0..n).map(|_| small(rng)).collect();
        p.inequalities
            .push(Constraint::new(coeffs, rat(rng.random_range(0..=4))));
    }
    for _ in 0..rng.random_range(0..=3) {
        let coeffs = (0..n).map(|_| small(rng)).collect();
        p.objective.hinges.push(Hinge {
            sign: if rng.random_bool(0.5) { 1 } else { -1 },
            coeffs,
            rhs: small(rng),
        });
    }
    p
}

/// A constraint implied by the program's inequalities: a non-negative
/// combination of two of them with a slackened right-hand side.
pub fn implied_constraint<R: Rng>(rng: &mut R, p: &PLProgram) -> Constraint {
    let k = p.inequalities.len();
    let a = &p.inequalities[rng.random_range(0..k)];
    let b = &p.inequalities[rng.random_range(0..k)];
    let la = rat(rng.random_range(0..=3));
    let lb = rat(rng.random_range(1..=3));
    let coeffs = a
        .coeffs
        .iter()
        .zip(&b.coeffs)
        .map(|(x, y)| x * &la + y * &lb)
        .collect();
    let rhs: Rational = &a.rhs * &la + &b.rhs * &lb + rat(rng.random_range(0..=2));
    Constraint::new(coeffs, rhs)
}

/// Whether `e_i + f_j + f_k − (g+4)` (0-based indices, `j < k`) is one of
/// the eleven summands tracked by the degree 5 hinge terms.
pub fn tracked_pfaffian_summand(i: usize, j: usize, k: usize) -> bool {
    match (j, k) {
        (0, 1) => true,
        (0, 2) => i < 3,
        (0, 3) | (1, 2) => i < 2,
        _ => false,
    }
}

pub fn negatives_all_tracked(e: &[i64], f: &[i64], g: i64) -> bool {
    (0..4).all(|i| {
        (0..5).all(|j| {
            (j + 1..5).all(|k| e[i] + f[j] + f[k] >= g + 4 || tracked_pfaffian_summand(i, j, k))
        })
    })
}
