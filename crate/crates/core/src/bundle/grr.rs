use super::{Ambient, BundleChar, Character};
use crate::exact::{rat, GradedPoly, Rational};

/// Coefficients `t₀, …, t_n` of the Todd series `x/(1 − e^{−x})`.
pub fn todd_coefficients(n: usize) -> Vec<Rational> {
    // (1 − e^{−x})/x = Σ a_j x^j with a_j = (−1)^j/(j+1)!; invert the series.
    let mut fact = rat(1);
    let mut a = Vec::with_capacity(n + 1);
    for j in 0..=n {
        fact *= rat(j as i64 + 1);
        let sign = if j % 2 == 0 { rat(1) } else { rat(-1) };
        a.push(sign / fact.clone());
    }
    let mut t = vec![rat(1)];
    for m in 1..=n {
        let mut acc = rat(0);
        for j in 1..=m {
            acc -= &a[j] * &t[m - j];
        }
        t.push(acc);
    }
    t
}

/// Grothendieck–Riemann–Roch for `π: P → B`:
/// `ch(π_! b) = π_*(ch(b)·td(T_π))` with `c₁(T_π) = 2z`.
///
/// The result has top degree `b.top() − 1`, the last degree of `ch(b)`
/// that still contributes in full.
pub fn grr_push_pi(b: &BundleChar) -> Character<GradedPoly> {
    let top = b.top();
    let ring = b.pieces()[0].ring().clone();
    let two_z = ring.z().scale_int(2);
    let t = todd_coefficients(top);
    let mut td_pieces = Vec::with_capacity(top + 1);
    let mut pow = ring.one();
    for coeff in &t {
        td_pieces.push(pow.scaled(coeff));
        pow = pow.times(&two_z);
    }
    let mut out = Vec::with_capacity(top);
    for d in 0..top {
        let n = d + 1;
        let mut acc = ring.zero();
        for j in 0..=n {
            acc = acc.plus(&b.ch(j).times(&td_pieces[n - j]));
        }
        out.push(acc.push_pi());
    }
    Character::from_pieces(out).expect("pushforward of homogeneous pieces is homogeneous")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bundle::FiberRing;
    use crate::exact::{ratio, RingSpec};

    #[test]
    fn todd_series() {
        let t = todd_coefficients(4);
        assert_eq!(
            t,
            vec![rat(1), ratio(1, 2), ratio(1, 12), rat(0), ratio(-1, 720)]
        );
    }

    #[test]
    fn sections_of_twists_on_a_fibre() {
        // With c₂ = 0 the bundle is trivial: π_* O(n) has rank n + 1.
        let base = RingSpec::new([("a1", 1)], 4).unwrap();
        let fiber = FiberRing::new(&base, GradedPoly::zero(&base)).unwrap();
        for n in -3..5 {
            let o = BundleChar::trivial(&fiber.one(), 1, 3).twist_z(n);
            let pushed = grr_push_pi(&o);
            assert_eq!(pushed.rank(), Some(n + 1));
            assert!(pushed.ch(1).is_zero());
        }
    }

    #[test]
    fn pushforward_of_hyperplane_bundle() {
        // π_* O(1) is the rank-2 bundle with c₁ = 0 and c₂ = c₂.
        let base = RingSpec::new([("c2", 2)], 4).unwrap();
        let fiber = FiberRing::with_c2_generator(&base, "c2").unwrap();
        let o1 = BundleChar::trivial(&fiber.one(), 1, 4).twist_z(1);
        let pushed = grr_push_pi(&o1);
        let c = pushed.chern_classes();
        assert_eq!(pushed.rank(), Some(2));
        assert!(c[0].is_zero());
        assert_eq!(c[1], GradedPoly::generator(&base, "c2").unwrap());
    }
}
