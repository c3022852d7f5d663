//! Exact linear algebra over Q and fraction-free elimination over Z.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::exact::Rational;

/// Reduced row echelon form in place; returns pivot columns.
pub fn rref(rows: &mut [Vec<Rational>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                let (src, dst) = if i < r {
                    let (a, b) = rows.split_at_mut(r);
                    (&b[0], &mut a[i])
                } else {
                    let (a, b) = rows.split_at_mut(i);
                    (&a[r], &mut b[0])
                };
                for (d, s) in dst.iter_mut().zip(src.iter()) {
                    *d -= &f * s;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut m = rows.to_vec();
    rref(&mut m, cols).len()
}

/// Basis of `{x : A x = 0}` for `A` with `n` columns.
pub fn nullspace(rows: &[Vec<Rational>], n: usize) -> Vec<Vec<Rational>> {
    let mut m = rows.to_vec();
    let pivots = rref(&mut m, n);
    let mut basis = Vec::new();
    for free in (0..n).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Rational::zero(); n];
        v[free] = Rational::one();
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = -m[r][free].clone();
        }
        basis.push(v);
    }
    basis
}

/// Parametrizes `{x : A x = b}` as `x₀ + N t`. Rows are `[a…, b]`.
/// Returns `None` when the system is inconsistent.
pub fn affine_solution(
    rows: &[Vec<Rational>],
    n: usize,
) -> Option<(Vec<Rational>, Vec<Vec<Rational>>)> {
    let mut m = rows.to_vec();
    let pivots = rref(&mut m, n + 1);
    if pivots.last() == Some(&n) {
        return None;
    }
    let mut x0 = vec![Rational::zero(); n];
    for (r, &pc) in pivots.iter().enumerate() {
        x0[pc] = m[r][n].clone();
    }
    let coeffs: Vec<Vec<Rational>> = rows.iter().map(|r| r[..n].to_vec()).collect();
    Some((x0, nullspace(&coeffs, n)))
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Multiplies a rational row by the lcm of its denominators and divides by
/// the gcd of the numerators, giving a primitive integer row.
pub fn primitive_row(row: &[Rational]) -> Vec<BigInt> {
    let l = row
        .iter()
        .fold(<BigInt as One>::one(), |acc, q| acc.lcm(q.denom()));
    let ints: Vec<BigInt> = row.iter().map(|q| q.numer() * (&l / q.denom())).collect();
    let g = ints
        .iter()
        .fold(<BigInt as Zero>::zero(), |acc, x| acc.gcd(x));
    if Zero::is_zero(&g) || g.is_one() {
        ints
    } else {
        ints.into_iter().map(|x| x / &g).collect()
    }
}

/// Integer arithmetic usable by fraction-free elimination. Operations on
/// machine integers report overflow with `None`.
pub trait ExactInt: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn is_negative(&self) -> bool;
    fn neg(&self) -> Option<Self>;
    fn mul(&self, other: &Self) -> Option<Self>;
    fn sub(&self, other: &Self) -> Option<Self>;
    /// Division known to be exact.
    fn div_exact(&self, other: &Self) -> Self;
}

impl ExactInt for i128 {
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn is_negative(&self) -> bool {
        *self < 0
    }
    fn neg(&self) -> Option<Self> {
        self.checked_neg()
    }
    fn mul(&self, other: &Self) -> Option<Self> {
        self.checked_mul(*other)
    }
    fn sub(&self, other: &Self) -> Option<Self> {
        self.checked_sub(*other)
    }
    fn div_exact(&self, other: &Self) -> Self {
        self / other
    }
}

impl ExactInt for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn neg(&self) -> Option<Self> {
        Some(-self)
    }
    fn mul(&self, other: &Self) -> Option<Self> {
        Some(self * other)
    }
    fn sub(&self, other: &Self) -> Option<Self> {
        Some(self - other)
    }
    fn div_exact(&self, other: &Self) -> Self {
        self / other
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Overflow;

/// Solves the square system given as an `m × (m+1)` augmented matrix by
/// fraction-free Gauss–Jordan elimination. Returns `(num, det)` with
/// `det > 0` and solution `num / det`, or `None` when singular.
pub fn solve_fraction_free<T: ExactInt>(
    mut a: Vec<Vec<T>>,
) -> Result<Option<(Vec<T>, T)>, Overflow> {
    let m = a.len();
    let mut prev = T::one();
    for k in 0..m {
        let Some(p) = (k..m).find(|&i| !a[i][k].is_zero()) else {
            return Ok(None);
        };
        a.swap(k, p);
        let pivot = a[k][k].clone();
        for i in 0..m {
            if i == k {
                continue;
            }
            let factor = a[i][k].clone();
            // Rows `i` and `k` are both read, so index rather than iterate.
            #[allow(clippy::needless_range_loop)]
            for j in 0..=m {
                if j == k {
                    continue;
                }
                let lhs = pivot.mul(&a[i][j]).ok_or(Overflow)?;
                let rhs = factor.mul(&a[k][j]).ok_or(Overflow)?;
                a[i][j] = lhs.sub(&rhs).ok_or(Overflow)?.div_exact(&prev);
            }
            a[i][k] = T::zero();
        }
        prev = pivot;
    }
    // Every diagonal entry now equals the determinant (up to the sign of
    // the row swaps, which is already absorbed).
    let det = a[m - 1][m - 1].clone();
    let mut num: Vec<T> = a.into_iter().map(|row| row[m].clone()).collect();
    if det.is_negative() {
        let det = det.neg().ok_or(Overflow)?;
        for x in num.iter_mut() {
            *x = x.neg().ok_or(Overflow)?;
        }
        return Ok(Some((num, det)));
    }
    Ok(Some((num, det)))
}

pub fn to_i128_rows(rows: &[Vec<BigInt>]) -> Option<Vec<Vec<i128>>> {
    rows.iter()
        .map(|r| {
            r.iter()
                .map(ToPrimitive::to_i128)
                .collect::<Option<Vec<_>>>()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, ratio};
    use proptest::prelude::*;

    fn rational_solve(a: &[Vec<i64>]) -> Option<Vec<Rational>> {
        let m = a.len();
        let mut rows: Vec<Vec<Rational>> = a
            .iter()
            .map(|r| r.iter().map(|&x| rat(x)).collect())
            .collect();
        let piv = rref(&mut rows, m + 1);
        if piv.len() < m || piv.contains(&m) {
            return None;
        }
        Some(rows.iter().map(|r| r[m].clone()).collect())
    }

    #[test]
    fn affine_parametrization() {
        let rows = vec![vec![rat(1), rat(1), rat(1), rat(1)]];
        let (x0, basis) = affine_solution(&rows, 3).unwrap();
        assert_eq!(x0, vec![rat(1), rat(0), rat(0)]);
        assert_eq!(basis.len(), 2);
        for v in &basis {
            assert_eq!(dot(&rows[0][..3], v), rat(0));
        }
        let bad = vec![vec![rat(1), rat(1), rat(1)], vec![rat(1), rat(1), rat(2)]];
        assert!(affine_solution(&bad, 2).is_none());
    }

    #[test]
    fn primitive_rows() {
        let r = primitive_row(&[ratio(1, 2), ratio(-3, 4), rat(0)]);
        assert_eq!(r, vec![BigInt::from(2), BigInt::from(-3), BigInt::from(0)]);
    }

    #[test]
    fn singular_system() {
        let a = vec![vec![1i128, 2, 3], vec![2, 4, 6]];
        assert_eq!(solve_fraction_free(a), Ok(None));
    }

    proptest! {
        #[test]
        fn fraction_free_matches_rational(
            m in 1usize..5,
            entries in proptest::collection::vec(-9i64..10, 30),
        ) {
            let a: Vec<Vec<i64>> = (0..m)
                .map(|i| entries[i * (m + 1)..(i + 1) * (m + 1)].to_vec())
                .collect();
            let expect = rational_solve(&a);
            let ints: Vec<Vec<i128>> = a.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
            let got = solve_fraction_free(ints).unwrap();
            match (expect, got) {
                (None, None) => {}
                (Some(x), Some((num, det))) => {
                    prop_assert!(det > 0);
                    let got: Vec<Rational> = num.iter().map(|&v| ratio(v as i64, det as i64)).collect();
                    prop_assert_eq!(x, got);
                }
                (e, g) => prop_assert!(false, "mismatch {:?} vs {:?}", e, g),
            }
        }
    }
}
