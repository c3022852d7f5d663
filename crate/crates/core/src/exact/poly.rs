use std::cmp::Reverse;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde_json::{json, Value};

use super::rational::{format_rational, parse_rational, rat};
use super::{ExactError, Rational, Ring};

/// Dense exponent vector indexed by generator position.
pub type Monomial = Vec<u32>;

/// Polynomial with rational coefficients over the generators of a
/// [`RingSpec`](super::RingSpec), truncated at the ring's order.
///
/// Invariants: no stored coefficient is zero and every stored monomial has
/// weighted degree below the truncation order.
#[derive(Clone, Debug)]
pub struct GradedPoly {
    ring: Ring,
    terms: BTreeMap<Monomial, Rational>,
}

impl PartialEq for GradedPoly {
    fn eq(&self, other: &Self) -> bool {
        self.ring.same_as(&other.ring) && self.terms == other.terms
    }
}

impl Eq for GradedPoly {}

impl GradedPoly {
    pub fn zero(ring: &Ring) -> Self {
        GradedPoly {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ring: &Ring) -> Self {
        Self::constant(ring, Rational::one())
    }

    pub fn constant(ring: &Ring, c: Rational) -> Self {
        Self::from_term(ring, vec![0; ring.len()], c)
    }

    pub fn integer(ring: &Ring, n: i64) -> Self {
        Self::constant(ring, rat(n))
    }

    /// The generator called `name`.
    pub fn generator(ring: &Ring, name: &str) -> Result<Self, ExactError> {
        let idx = ring
            .index_of(name)
            .ok_or_else(|| ExactError::UnknownGenerator(name.to_string()))?;
        Ok(Self::var(ring, idx))
    }

    /// The generator at position `idx`. Panics if out of range.
    pub fn var(ring: &Ring, idx: usize) -> Self {
        let mut m = vec![0; ring.len()];
        m[idx] = 1;
        Self::from_term(ring, m, Rational::one())
    }

    /// Single term `coeff * monomial`, dropped if it is truncated or zero.
    pub fn from_term(ring: &Ring, monomial: Monomial, coeff: Rational) -> Self {
        assert_eq!(monomial.len(), ring.len(), "exponent vector length");
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() && ring.weighted_degree(&monomial) < ring.truncation() {
            terms.insert(monomial, coeff);
        }
        GradedPoly {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, monomial: &[u32]) -> Rational {
        self.terms
            .get(monomial)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// The value if this polynomial is a constant (including zero).
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.iter().all(|&e| e == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    fn check_ring(&self, other: &Self) -> Result<(), ExactError> {
        if self.ring.same_as(&other.ring) {
            Ok(())
        } else {
            Err(ExactError::RingMismatch)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, ExactError> {
        self.check_ring(other)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            accumulate(&mut terms, m.clone(), c.clone());
        }
        Ok(GradedPoly {
            ring: self.ring.clone(),
            terms,
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, ExactError> {
        self.try_add(&-other)
    }

    /// Truncated product: monomials of weighted degree `>= D` are dropped.
    pub fn try_mul(&self, other: &Self) -> Result<Self, ExactError> {
        self.check_ring(other)?;
        let d = self.ring.truncation();
        let left: Vec<_> = self
            .terms
            .iter()
            .map(|(m, c)| (m, c, self.ring.weighted_degree(m)))
            .collect();
        let right: Vec<_> = other
            .terms
            .iter()
            .map(|(m, c)| (m, c, self.ring.weighted_degree(m)))
            .collect();
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for (m1, c1, d1) in &left {
            for (m2, c2, d2) in &right {
                if d1 + d2 >= d {
                    continue;
                }
                let m: Monomial = m1.iter().zip(m2.iter()).map(|(a, b)| a + b).collect();
                let c = *c1 * *c2;
                match acc.get_mut(&m) {
                    Some(v) => *v += c,
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        let terms = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Ok(GradedPoly {
            ring: self.ring.clone(),
            terms,
        })
    }

    pub fn scale(&self, q: &Rational) -> Self {
        if q.is_zero() {
            return Self::zero(&self.ring);
        }
        GradedPoly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * q)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(&self.ring);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Sum of the terms of weighted degree exactly `d`, for `0 <= d < D`.
    pub fn degree_part(&self, d: i64) -> Result<Self, ExactError> {
        let trunc = self.ring.truncation();
        if d < 0 || d >= trunc as i64 {
            return Err(ExactError::DegreeOutOfRange {
                degree: d,
                truncation: trunc,
            });
        }
        Ok(self.filter_degree(|deg| deg as i64 == d))
    }

    pub(crate) fn filter_degree(&self, keep: impl Fn(u32) -> bool) -> Self {
        GradedPoly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(self.ring.weighted_degree(m)))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Highest weighted degree among the terms, `None` for zero.
    pub fn max_degree(&self) -> Option<u32> {
        self.terms
            .keys()
            .map(|m| self.ring.weighted_degree(m))
            .max()
    }

    /// True when every term has weighted degree `d` (vacuously for zero).
    pub fn is_homogeneous_of(&self, d: u32) -> bool {
        self.terms.keys().all(|m| self.ring.weighted_degree(m) == d)
    }

    /// Replaces the named generators by constants and re-collects.
    pub fn substitute(&self, bindings: &BTreeMap<String, Rational>) -> Result<Self, ExactError> {
        let polys = bindings
            .iter()
            .map(|(k, v)| (k.clone(), Self::constant(&self.ring, v.clone())))
            .collect();
        self.substitute_polys(&polys)
    }

    /// Replaces the named generators by polynomials in the same ring.
    pub fn substitute_polys(
        &self,
        bindings: &BTreeMap<String, GradedPoly>,
    ) -> Result<Self, ExactError> {
        let mut by_index: Vec<Option<&GradedPoly>> = vec![None; self.ring.len()];
        for (name, value) in bindings {
            let idx = self
                .ring
                .index_of(name)
                .ok_or_else(|| ExactError::UnknownGenerator(name.clone()))?;
            value.check_ring(self)?;
            by_index[idx] = Some(value);
        }
        let mut out = Self::zero(&self.ring);
        for (m, c) in &self.terms {
            let mut kept = m.clone();
            let mut term = Self::one(&self.ring);
            for (idx, value) in by_index.iter().enumerate() {
                if let Some(v) = value {
                    term = &term * &v.pow(m[idx]);
                    kept[idx] = 0;
                }
            }
            term = &term * &Self::from_term(&self.ring, kept, c.clone());
            out = &out + &term;
        }
        Ok(out)
    }

    /// Re-expresses this polynomial in `ring`, which must carry the same
    /// generator list (typically a different truncation order).
    pub fn retruncate(&self, ring: &Ring) -> Result<Self, ExactError> {
        if ring.generators() != self.ring.generators() {
            return Err(ExactError::RingMismatch);
        }
        Ok(GradedPoly {
            ring: ring.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| ring.weighted_degree(m) < ring.truncation())
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        })
    }

    /// Terms in serialization order: graded lexicographic, highest degree
    /// first, ties broken by the generator list order.
    fn sorted_terms(&self) -> Vec<(&Monomial, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by_key(|(m, _)| Reverse((self.ring.weighted_degree(m), (*m).clone())));
        v
    }

    /// `[{"coeff": "p/q", "exponents": [..]}, ..]` in serialization order.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.sorted_terms()
                .into_iter()
                .map(|(m, c)| json!({ "coeff": format_rational(c), "exponents": m }))
                .collect(),
        )
    }

    pub fn from_json(ring: &Ring, value: &Value) -> Result<Self, ExactError> {
        let bad = |msg: &str| ExactError::MalformedJson(msg.to_string());
        let items = value.as_array().ok_or_else(|| bad("expected an array"))?;
        let mut out = Self::zero(ring);
        for item in items {
            let coeff = match item.get("coeff") {
                Some(Value::String(s)) => parse_rational(s)?,
                Some(Value::Number(n)) => rat(n.as_i64().ok_or_else(|| bad("coefficient"))?),
                _ => return Err(bad("missing coeff")),
            };
            let exps = item
                .get("exponents")
                .and_then(Value::as_array)
                .ok_or_else(|| bad("missing exponents"))?;
            if exps.len() != ring.len() {
                return Err(bad("exponent vector length"));
            }
            let m = exps
                .iter()
                .map(|e| e.as_u64().and_then(|e| u32::try_from(e).ok()))
                .collect::<Option<Monomial>>()
                .ok_or_else(|| bad("exponents must be non-negative integers"))?;
            out = &out + &Self::from_term(ring, m, coeff);
        }
        Ok(out)
    }
}

fn accumulate(terms: &mut BTreeMap<Monomial, Rational>, m: Monomial, c: Rational) {
    use std::collections::btree_map::Entry;
    match terms.entry(m) {
        Entry::Vacant(v) => {
            if !c.is_zero() {
                v.insert(c);
            }
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

impl fmt::Display for GradedPoly {
    /// `coef * gen^k * ...` terms joined by ` + `.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let gens = self.ring.generators();
        let mut first = true;
        for (m, c) in self.sorted_terms() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let factors: Vec<String> = m
                .iter()
                .zip(gens)
                .filter(|(e, _)| **e > 0)
                .map(|(e, g)| {
                    if *e == 1 {
                        g.name.clone()
                    } else {
                        format!("{}^{}", g.name, e)
                    }
                })
                .collect();
            if factors.is_empty() {
                f.write_str(&format_rational(c))?;
            } else if c.is_one() {
                f.write_str(&factors.join(" * "))?;
            } else {
                write!(f, "{} * {}", format_rational(c), factors.join(" * "))?;
            }
        }
        Ok(())
    }
}

// Operator forms panic on ring mismatch; the `try_*` methods report it.

impl Add for &GradedPoly {
    type Output = GradedPoly;
    fn add(self, rhs: &GradedPoly) -> GradedPoly {
        self.try_add(rhs)
            .expect("ring mismatch in GradedPoly addition")
    }
}

impl Sub for &GradedPoly {
    type Output = GradedPoly;
    fn sub(self, rhs: &GradedPoly) -> GradedPoly {
        self.try_sub(rhs)
            .expect("ring mismatch in GradedPoly subtraction")
    }
}

impl Mul for &GradedPoly {
    type Output = GradedPoly;
    fn mul(self, rhs: &GradedPoly) -> GradedPoly {
        self.try_mul(rhs)
            .expect("ring mismatch in GradedPoly product")
    }
}

impl Neg for &GradedPoly {
    type Output = GradedPoly;
    fn neg(self) -> GradedPoly {
        GradedPoly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Add for GradedPoly {
    type Output = GradedPoly;
    fn add(self, rhs: GradedPoly) -> GradedPoly {
        &self + &rhs
    }
}

impl Sub for GradedPoly {
    type Output = GradedPoly;
    fn sub(self, rhs: GradedPoly) -> GradedPoly {
        &self - &rhs
    }
}

impl Mul for GradedPoly {
    type Output = GradedPoly;
    fn mul(self, rhs: GradedPoly) -> GradedPoly {
        &self * &rhs
    }
}

impl Neg for GradedPoly {
    type Output = GradedPoly;
    fn neg(self) -> GradedPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{ratio, RingSpec};

    fn ring(d: i64) -> Ring {
        RingSpec::new([("c2", 2), ("a1", 1), ("b1", 1)], d).unwrap()
    }

    fn g(r: &Ring, n: &str) -> GradedPoly {
        GradedPoly::generator(r, n).unwrap()
    }

    #[test]
    fn addition_examples() {
        let r = ring(5);
        let a1 = g(&r, "a1");
        let c2 = g(&r, "c2");
        assert!((&a1 + &-&a1).is_zero());
        let sum = &(&a1 + &c2) + &c2;
        assert_eq!(sum, &a1 + &c2.scale(&rat(2)));
        // A degree-D monomial never survives construction.
        let top = GradedPoly::from_term(&r, vec![0, 5, 0], rat(1));
        assert!(top.is_zero());
        assert_eq!(&top + &a1, a1);
    }

    #[test]
    fn product_truncates() {
        let r = ring(3);
        let a1 = g(&r, "a1");
        let c2 = g(&r, "c2");
        assert_eq!((&a1 * &a1).to_string(), "a1^2");
        assert!((&a1 * &c2).is_zero());
    }

    #[test]
    fn telescoping_product() {
        let r = ring(4);
        let a1 = g(&r, "a1");
        let one = GradedPoly::one(&r);
        let lhs = &(&one + &a1) * &(&(&one - &a1) + &(&a1 * &a1));
        assert_eq!(lhs, &one + &a1.pow(3));
    }

    #[test]
    fn ring_mismatch() {
        let a = g(&ring(3), "a1");
        let b = g(&RingSpec::new([("a1", 1)], 3).unwrap(), "a1");
        assert_eq!(a.try_add(&b).unwrap_err(), ExactError::RingMismatch);
        assert_eq!(a.try_mul(&b).unwrap_err(), ExactError::RingMismatch);
        // Structurally identical rings are interchangeable.
        let c = g(&ring(3), "a1");
        assert_eq!(a.try_add(&c).unwrap(), a.scale(&rat(2)));
    }

    #[test]
    fn degree_parts() {
        let r = ring(4);
        let a1 = g(&r, "a1");
        let c2 = g(&r, "c2");
        let one = GradedPoly::one(&r);
        let p = &(&one + &a1) + &c2;
        assert_eq!(p.degree_part(2).unwrap(), c2);
        assert!(a1.degree_part(0).unwrap().is_zero());
        let q = &(&(&a1 * &a1) + &c2) + &a1;
        assert_eq!(q.degree_part(2).unwrap(), &(&a1 * &a1) + &c2);
        assert!(q.degree_part(4).is_err());
        assert!(q.degree_part(-1).is_err());
    }

    #[test]
    fn substitution() {
        let r = RingSpec::with_parameters([("a1", 1), ("b1", 1)], ["a1'"], 4).unwrap();
        let ap = g(&r, "a1'");
        let p = &ap.scale(&rat(2)) - &GradedPoly::integer(&r, 6);
        let mut b = BTreeMap::new();
        b.insert("a1'".to_string(), rat(7 + 2));
        assert_eq!(p.substitute(&b).unwrap().as_constant(), Some(rat(12)));

        let a1 = g(&r, "a1");
        assert_eq!(a1.substitute(&BTreeMap::new()).unwrap(), a1);
        let mut z = BTreeMap::new();
        z.insert("a1".to_string(), rat(0));
        assert!((&a1 * &g(&r, "b1")).substitute(&z).unwrap().is_zero());

        let mut unknown = BTreeMap::new();
        unknown.insert("nope".to_string(), rat(0));
        assert!(matches!(
            a1.substitute(&unknown),
            Err(ExactError::UnknownGenerator(_))
        ));
    }

    #[test]
    fn text_and_json_forms() {
        let r = ring(4);
        let a1 = g(&r, "a1");
        let c2 = g(&r, "c2");
        let p = &(&(&a1 * &a1).scale(&ratio(-3, 2)) + &c2) + &GradedPoly::integer(&r, 5);
        assert_eq!(p.to_string(), "c2 + -3/2 * a1^2 + 5");
        let back = GradedPoly::from_json(&r, &p.to_json()).unwrap();
        assert_eq!(back, p);
        assert_eq!(GradedPoly::zero(&r).to_string(), "0");
        assert_eq!(
            p.to_json()[1],
            json!({"coeff": "-3/2", "exponents": [0, 2, 0]})
        );
    }
}
