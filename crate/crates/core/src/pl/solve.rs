use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use super::linalg::{self, affine_solution, dot, primitive_row, solve_fraction_free, to_i128_rows};
use super::{PLProgram, PlError};
use crate::exact::{serde_rational, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PLSolution {
    #[serde(with = "serde_rational")]
    pub min_value: Rational,
    /// Every candidate point attaining the minimum, sorted lexicographically.
    #[serde(serialize_with = "serialize_points")]
    pub argmin_points: Vec<Vec<Rational>>,
    /// Number of hyperplane subsets solved.
    pub candidates_examined: u64,
}

fn serialize_points<S: serde::Serializer>(
    points: &[Vec<Rational>],
    s: S,
) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(points.len()))?;
    for p in points {
        let v: Vec<String> = p.iter().map(crate::exact::format_rational).collect();
        seq.serialize_element(&v)?;
    }
    seq.end()
}

/// The program restricted to the affine hull of its equalities,
/// `x = x₀ + N t`, with every hyperplane as a primitive integer row
/// `[a…, b]` meaning `a·t (≤ or =) b`.
pub(crate) struct Reduced {
    pub x0: Vec<Rational>,
    pub basis: Vec<Vec<Rational>>,
    pub inequalities: Vec<Vec<BigInt>>,
    pub breakpoints: Vec<Vec<BigInt>>,
}

impl Reduced {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn lift(&self, t: &[Rational]) -> Vec<Rational> {
        let mut x = self.x0.clone();
        for (tj, v) in t.iter().zip(&self.basis) {
            for (xi, vi) in x.iter_mut().zip(v) {
                *xi += tj * vi;
            }
        }
        x
    }
}

fn project(
    coeffs: &[Rational],
    rhs: &Rational,
    x0: &[Rational],
    basis: &[Vec<Rational>],
) -> Vec<Rational> {
    let mut row: Vec<Rational> = basis.iter().map(|v| dot(coeffs, v)).collect();
    row.push(rhs - dot(coeffs, x0));
    row
}

pub(crate) fn reduce(p: &PLProgram) -> Result<Reduced, PlError> {
    p.validate()?;
    let n = p.num_vars;
    let eq_rows: Vec<Vec<Rational>> = p
        .equalities
        .iter()
        .map(|c| {
            let mut r = c.coeffs.clone();
            r.push(c.rhs.clone());
            r
        })
        .collect();
    let (x0, basis) = affine_solution(&eq_rows, n).ok_or(PlError::Infeasible)?;
    let mut inequalities = BTreeSet::new();
    for c in &p.inequalities {
        let row = project(&c.coeffs, &c.rhs, &x0, &basis);
        let (lhs, rhs) = row.split_at(basis.len());
        if lhs.iter().all(Zero::is_zero) {
            if rhs[0].is_negative() {
                return Err(PlError::Infeasible);
            }
            continue;
        }
        inequalities.insert(primitive_row(&row));
    }
    let mut breakpoints = BTreeSet::new();
    for h in &p.objective.hinges {
        let row = project(&h.coeffs, &h.rhs, &x0, &basis);
        if row[..basis.len()].iter().all(Zero::is_zero) {
            continue;
        }
        let mut prim = primitive_row(&row);
        // A hyperplane has two primitive normals; keep one.
        if let Some(first) = prim.iter().find(|x| !x.is_zero()) {
            if first.is_negative() {
                prim = prim.into_iter().map(|x| -x).collect();
            }
        }
        breakpoints.insert(prim);
    }
    Ok(Reduced {
        x0,
        basis,
        inequalities: inequalities.into_iter().collect(),
        breakpoints: breakpoints.into_iter().collect(),
    })
}

/// Whether `{t : A t ≤ 0}` is `{0}`, where `A` holds the inequality
/// normals. If not, a non-empty region is unbounded.
pub(crate) fn recession_cone_trivial(r: &Reduced) -> bool {
    let m = r.dim();
    if m == 0 {
        return true;
    }
    let normals: Vec<Vec<Rational>> = r
        .inequalities
        .iter()
        .map(|row| {
            row[..m]
                .iter()
                .map(|x| Rational::from_integer(x.clone()))
                .collect()
        })
        .collect();
    if linalg::rank(&normals) < m {
        return false;
    }
    // A pointed cone other than {0} has an extreme ray, cut out by m − 1
    // independent tight constraints.
    let mut found_ray = false;
    for_each_subset(normals.len(), m - 1, |idx| {
        if found_ray {
            return;
        }
        let rows: Vec<Vec<Rational>> = idx.iter().map(|&i| normals[i].clone()).collect();
        let ns = linalg::nullspace(&rows, m);
        if ns.len() != 1 {
            return;
        }
        let d = &ns[0];
        let signs: Vec<Rational> = normals.iter().map(|a| dot(a, d)).collect();
        if signs.iter().all(|s| !s.is_positive()) || signs.iter().all(|s| !s.is_negative()) {
            found_ray = true;
        }
    });
    !found_ray
}

fn for_each_subset(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(&idx);
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 {
                return;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

fn canonical(num: Vec<BigInt>, det: BigInt) -> Vec<BigInt> {
    let g = num.iter().fold(det.clone(), |acc, x| acc.gcd(x));
    let mut key: Vec<BigInt> = num.into_iter().map(|x| x / &g).collect();
    key.push(det / g);
    key
}

fn feasible_big(ineq: &[Vec<BigInt>], num: &[BigInt], det: &BigInt) -> bool {
    let m = num.len();
    ineq.iter().all(|row| {
        let lhs: BigInt = row[..m].iter().zip(num).map(|(a, x)| a * x).sum();
        lhs <= &row[m] * det
    })
}

fn feasible_i128(ineq: &[Vec<i128>], num: &[i128], det: i128) -> Option<bool> {
    let m = num.len();
    for row in ineq {
        let mut lhs: i128 = 0;
        for (a, x) in row[..m].iter().zip(num) {
            lhs = lhs.checked_add(a.checked_mul(*x)?)?;
        }
        if lhs > row[m].checked_mul(det)? {
            return Some(false);
        }
    }
    Some(true)
}

/// Solves one subset of hyperplanes; returns the canonical key of the
/// intersection point when it is unique and feasible.
fn vertex(
    hyper: &[Vec<BigInt>],
    hyper_small: Option<&[Vec<i128>]>,
    ineq: &[Vec<BigInt>],
    ineq_small: Option<&[Vec<i128>]>,
    idx: &[usize],
) -> Option<Vec<BigInt>> {
    if let (Some(hs), Some(is)) = (hyper_small, ineq_small) {
        let system: Vec<Vec<i128>> = idx.iter().map(|&i| hs[i].clone()).collect();
        if let Ok(res) = solve_fraction_free(system) {
            let (num, det) = res?;
            if let Some(ok) = feasible_i128(is, &num, det) {
                if !ok {
                    return None;
                }
                return Some(canonical(
                    num.into_iter().map(BigInt::from).collect(),
                    BigInt::from(det),
                ));
            }
        }
    }
    let system: Vec<Vec<BigInt>> = idx.iter().map(|&i| hyper[i].clone()).collect();
    let (num, det) = solve_fraction_free(system).expect("big integers do not overflow")?;
    feasible_big(ineq, &num, &det).then(|| canonical(num, det))
}

/// Feasible vertices of the arrangement in reduced coordinates, plus the
/// number of subsets examined.
pub(crate) fn vertices(r: &Reduced, include_breakpoints: bool) -> (Vec<Vec<Rational>>, u64) {
    let m = r.dim();
    let mut hyper = r.inequalities.clone();
    if include_breakpoints {
        for b in &r.breakpoints {
            if !hyper.contains(b) && !hyper.contains(&b.iter().map(|x| -x).collect()) {
                hyper.push(b.clone());
            }
        }
    }
    if m == 0 {
        let ok = r.inequalities.iter().all(|row| !row[0].is_negative());
        return (if ok { vec![vec![]] } else { vec![] }, 1);
    }
    let hyper_small = to_i128_rows(&hyper);
    let ineq_small = to_i128_rows(&r.inequalities);
    let h = hyper.len();
    if h < m {
        return (vec![], 0);
    }
    let (keys, count) = (0..=h - m)
        .into_par_iter()
        .map(|first| {
            let mut local = BTreeSet::new();
            let mut count = 0u64;
            let rest = h - first - 1;
            let mut idx = vec![first];
            for_each_subset(rest, m - 1, |tail| {
                idx.truncate(1);
                idx.extend(tail.iter().map(|&j| j + first + 1));
                count += 1;
                if let Some(key) = vertex(
                    &hyper,
                    hyper_small.as_deref(),
                    &r.inequalities,
                    ineq_small.as_deref(),
                    &idx,
                ) {
                    local.insert(key);
                }
            });
            (local, count)
        })
        .reduce(
            || (BTreeSet::new(), 0),
            |(mut a, ca), (b, cb)| {
                a.extend(b);
                (a, ca + cb)
            },
        );
    let points = keys
        .into_iter()
        .map(|key| {
            let det = &key[m];
            key[..m]
                .iter()
                .map(|x| Rational::new(x.clone(), det.clone()))
                .collect()
        })
        .collect();
    (points, count)
}

/// Exact global minimum of the program's objective over its feasible region.
pub fn solve(p: &PLProgram) -> Result<PLSolution, PlError> {
    let r = reduce(p)?;
    if !recession_cone_trivial(&r) {
        return Err(PlError::Unbounded);
    }
    let (points, examined) = vertices(&r, true);
    if points.is_empty() {
        return Err(PlError::Infeasible);
    }
    let mut best: Option<Rational> = None;
    let mut argmin: Vec<Vec<Rational>> = Vec::new();
    for t in &points {
        let x = r.lift(t);
        let v = p.evaluate(&x);
        match &best {
            Some(b) if v > *b => {}
            Some(b) if v == *b => argmin.push(x),
            _ => {
                best = Some(v);
                argmin = vec![x];
            }
        }
    }
    argmin.sort();
    argmin.dedup();
    Ok(PLSolution {
        min_value: best.expect("at least one point"),
        argmin_points: argmin,
        candidates_examined: examined,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, ratio};
    use crate::pl::{Constraint, Hinge};

    fn interval() -> PLProgram {
        let mut p = PLProgram::new(1, vec![rat(1)]);
        p.inequalities.push(Constraint::ints(&[-1], 0));
        p.inequalities.push(Constraint::ints(&[1], 1));
        p
    }

    #[test]
    fn minimize_on_interval() {
        let s = solve(&interval()).unwrap();
        assert_eq!(s.min_value, rat(0));
        assert_eq!(s.argmin_points, vec![vec![rat(0)]]);
    }

    #[test]
    fn hinge_breakpoint_is_a_candidate() {
        // −|x − 1/3| on [0, 1], written with two hinges.
        let mut p = interval();
        p.objective.linear = vec![rat(0)];
        p.objective.hinges.push(Hinge {
            sign: -1,
            coeffs: vec![rat(1)],
            rhs: ratio(1, 3),
        });
        p.objective.hinges.push(Hinge {
            sign: -1,
            coeffs: vec![rat(-1)],
            rhs: ratio(-1, 3),
        });
        let s = solve(&p).unwrap();
        assert_eq!(s.min_value, ratio(-2, 3));
        // Maximizing instead must find the kink.
        let q = p.scale_objective(&rat(-1));
        let s = solve(&q).unwrap();
        assert_eq!(s.min_value, rat(0));
        assert_eq!(s.argmin_points, vec![vec![ratio(1, 3)]]);
    }

    #[test]
    fn detects_infeasible_and_unbounded() {
        let mut p = interval();
        p.inequalities.push(Constraint::ints(&[1], -1));
        assert_eq!(solve(&p), Err(PlError::Infeasible));
        let mut q = PLProgram::new(2, vec![rat(1), rat(0)]);
        q.inequalities.push(Constraint::ints(&[-1, 0], 0));
        q.inequalities.push(Constraint::ints(&[1, 0], 1));
        assert_eq!(solve(&q), Err(PlError::Unbounded));
        let mut e = PLProgram::new(1, vec![rat(1)]);
        e.equalities.push(Constraint::ints(&[0], 1));
        assert_eq!(solve(&e), Err(PlError::Infeasible));
    }

    #[test]
    fn pointed_unbounded_cone() {
        let mut q = PLProgram::new(2, vec![rat(1), rat(1)]);
        q.inequalities.push(Constraint::ints(&[-1, 0], 0));
        q.inequalities.push(Constraint::ints(&[0, -1], 0));
        assert_eq!(solve(&q), Err(PlError::Unbounded));
    }

    #[test]
    fn equality_pins_point() {
        let mut p = PLProgram::new(2, vec![rat(1), rat(2)]);
        p.equalities.push(Constraint::ints(&[1, 0], 1));
        p.equalities.push(Constraint::ints(&[0, 1], 2));
        p.inequalities.push(Constraint::ints(&[-1, -1], 0));
        let s = solve(&p).unwrap();
        assert_eq!(s.min_value, rat(5));
    }

    #[test]
    fn subsets_enumerated() {
        let mut seen = Vec::new();
        for_each_subset(5, 3, |s| seen.push(s.to_vec()));
        assert_eq!(seen.len(), 10);
        assert_eq!(seen[0], vec![0, 1, 2]);
        assert_eq!(seen[9], vec![2, 3, 4]);
        let mut empty = 0;
        for_each_subset(3, 0, |_| empty += 1);
        assert_eq!(empty, 1);
    }
}
