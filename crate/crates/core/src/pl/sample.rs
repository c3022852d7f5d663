use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::linalg::to_i128_rows;
use super::solve::{recession_cone_trivial, reduce, vertices};
use super::{PLProgram, PlError};
use crate::exact::Rational;

/// Grid points per unit of the common denominator along each axis.
const GRID: i64 = 1 << 12;
/// Attempts allowed per requested feasible sample.
const ATTEMPTS_PER_TRIAL: u64 = 20_000;

/// Smallest objective value over `trials` feasible points drawn uniformly
/// from a rational grid on a bounding box of the feasible region, keeping
/// only points that satisfy every constraint.
///
/// Stops early when the attempt budget runs out; fails only if no feasible
/// point was found at all.
pub fn sample_check(p: &PLProgram, trials: u64, seed: u64) -> Result<Rational, PlError> {
    if trials == 0 {
        return Err(PlError::InvalidTrials);
    }
    let r = reduce(p)?;
    if !recession_cone_trivial(&r) {
        return Err(PlError::Unbounded);
    }
    let m = r.dim();
    if m == 0 {
        let x = r.lift(&[]);
        return if p.is_feasible(&x) {
            Ok(p.evaluate(&x))
        } else {
            Err(PlError::NoFeasibleSample(1))
        };
    }
    let (corners, _) = vertices(&r, false);
    if corners.is_empty() {
        return Err(PlError::Infeasible);
    }
    // Box [lo, hi] in reduced coordinates, written over a common
    // denominator M so that t = (L + w) / M with integer w in [0, W].
    let denom = corners
        .iter()
        .flatten()
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()))
        * BigInt::from(GRID);
    let mut low = Vec::with_capacity(m);
    let mut width = Vec::with_capacity(m);
    for j in 0..m {
        let lo = corners.iter().map(|c| &c[j]).min().unwrap();
        let hi = corners.iter().map(|c| &c[j]).max().unwrap();
        let l = (lo * Rational::from_integer(denom.clone())).to_integer();
        let w = ((hi - lo) * Rational::from_integer(denom.clone())).to_integer();
        low.push(l);
        width.push(w.to_u64().ok_or(PlError::NoFeasibleSample(0))?);
    }
    let small_rows = to_i128_rows(&r.inequalities);
    let small_denom = denom.to_i128();
    let small_low: Option<Vec<i128>> = low.iter().map(ToPrimitive::to_i128).collect();
    let feasible = |point: &[BigInt]| {
        r.inequalities.iter().all(|row| {
            let lhs: BigInt = row[..m].iter().zip(point).map(|(a, x)| a * x).sum();
            lhs <= &row[m] * &denom
        })
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let budget = trials.saturating_mul(ATTEMPTS_PER_TRIAL);
    let mut best: Option<Rational> = None;
    let mut found = 0u64;
    let mut attempts = 0u64;
    let mut offsets = vec![0u64; m];
    while found < trials && attempts < budget {
        attempts += 1;
        for j in 0..m {
            offsets[j] = rng.random_range(0..=width[j]);
        }
        let fast = match (&small_rows, small_denom, &small_low) {
            (Some(rows), Some(d), Some(lo)) => feasible_small(rows, d, lo, &offsets),
            _ => None,
        };
        let point: Vec<BigInt> = match fast {
            Some(false) => continue,
            Some(true) => low
                .iter()
                .zip(&offsets)
                .map(|(l, w)| l + BigInt::from(*w))
                .collect(),
            None => {
                let point: Vec<BigInt> = low
                    .iter()
                    .zip(&offsets)
                    .map(|(l, w)| l + BigInt::from(*w))
                    .collect();
                if !feasible(&point) {
                    continue;
                }
                point
            }
        };
        found += 1;
        let t: Vec<Rational> = point
            .into_iter()
            .map(|v| Rational::new(v, denom.clone()))
            .collect();
        let x = r.lift(&t);
        debug_assert!(p.is_feasible(&x));
        let v = p.evaluate(&x);
        if best.as_ref().is_none_or(|b| v < *b) {
            best = Some(v);
        }
    }
    best.ok_or(PlError::NoFeasibleSample(attempts))
}

/// `None` when the machine-integer check overflows.
fn feasible_small(rows: &[Vec<i128>], denom: i128, low: &[i128], offsets: &[u64]) -> Option<bool> {
    let m = low.len();
    for row in rows {
        let mut lhs: i128 = 0;
        for j in 0..m {
            let x = low[j].checked_add(i128::from(offsets[j]))?;
            lhs = lhs.checked_add(row[j].checked_mul(x)?)?;
        }
        if lhs > row[m].checked_mul(denom)? {
            return Some(false);
        }
    }
    Some(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::pl::{solve, Constraint};

    #[test]
    fn interval_samples() {
        let mut p = PLProgram::new(1, vec![rat(1)]);
        p.inequalities.push(Constraint::ints(&[-1], 0));
        p.inequalities.push(Constraint::ints(&[1], 1));
        let v = sample_check(&p, 100, 7).unwrap();
        assert!(v >= rat(0));
        assert_eq!(sample_check(&p, 0, 7), Err(PlError::InvalidTrials));
    }

    #[test]
    fn deterministic_per_seed() {
        let p = crate::pl::preset("lemma_b4").unwrap();
        let a = sample_check(&p, 200, 3).unwrap();
        assert_eq!(a, sample_check(&p, 200, 3).unwrap());
        assert!(a >= solve(&p).unwrap().min_value);
    }
}
