use serde_json::{json, Value};

use super::PlError;
use crate::exact::{format_rational, parse_rational, rat, Rational};

/// `coeffs·x = rhs` or `coeffs·x ≤ rhs`, depending on the list it sits in.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constraint {
    pub coeffs: Vec<Rational>,
    pub rhs: Rational,
}

impl Constraint {
    pub fn new(coeffs: Vec<Rational>, rhs: Rational) -> Self {
        Constraint { coeffs, rhs }
    }

    pub fn ints(coeffs: &[i64], rhs: i64) -> Self {
        Constraint {
            coeffs: coeffs.iter().map(|&c| rat(c)).collect(),
            rhs: rat(rhs),
        }
    }
}

/// `sign · max(0, coeffs·x − rhs)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hinge {
    pub sign: i64,
    pub coeffs: Vec<Rational>,
    pub rhs: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Objective {
    pub linear: Vec<Rational>,
    pub constant: Rational,
    pub hinges: Vec<Hinge>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PLProgram {
    pub num_vars: usize,
    pub equalities: Vec<Constraint>,
    pub inequalities: Vec<Constraint>,
    pub objective: Objective,
}

fn dot(a: &[Rational], x: &[Rational]) -> Rational {
    a.iter().zip(x).map(|(p, q)| p * q).sum()
}

impl PLProgram {
    pub fn new(num_vars: usize, linear: Vec<Rational>) -> Self {
        PLProgram {
            num_vars,
            equalities: Vec::new(),
            inequalities: Vec::new(),
            objective: Objective {
                linear,
                constant: rat(0),
                hinges: Vec::new(),
            },
        }
    }

    pub fn validate(&self) -> Result<(), PlError> {
        let n = self.num_vars;
        let check = |len: usize| {
            if len == n {
                Ok(())
            } else {
                Err(PlError::DimensionMismatch {
                    expected: n,
                    got: len,
                })
            }
        };
        check(self.objective.linear.len())?;
        for c in self.equalities.iter().chain(&self.inequalities) {
            check(c.coeffs.len())?;
        }
        for h in &self.objective.hinges {
            check(h.coeffs.len())?;
            if h.sign != 1 && h.sign != -1 {
                return Err(PlError::InvalidHingeSign(h.sign));
            }
        }
        Ok(())
    }

    pub fn evaluate(&self, x: &[Rational]) -> Rational {
        let obj = &self.objective;
        let mut v = dot(&obj.linear, x) + &obj.constant;
        for h in &obj.hinges {
            let t = dot(&h.coeffs, x) - &h.rhs;
            if t > rat(0) {
                v += t * rat(h.sign);
            }
        }
        v
    }

    pub fn is_feasible(&self, x: &[Rational]) -> bool {
        self.equalities.iter().all(|c| dot(&c.coeffs, x) == c.rhs)
            && self.inequalities.iter().all(|c| dot(&c.coeffs, x) <= c.rhs)
    }

    /// Multiplies the whole objective by `q`.
    pub fn scale_objective(&self, q: &Rational) -> Self {
        let mut out = self.clone();
        for c in out.objective.linear.iter_mut() {
            *c *= q;
        }
        out.objective.constant *= q;
        if *q < rat(0) {
            for h in out.objective.hinges.iter_mut() {
                h.sign = -h.sign;
            }
        }
        let abs = if *q < rat(0) { -q.clone() } else { q.clone() };
        for h in out.objective.hinges.iter_mut() {
            for c in h.coeffs.iter_mut() {
                *c *= &abs;
            }
            h.rhs *= &abs;
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let row = |c: &[Rational], rhs: &Rational| -> Value {
            let mut v: Vec<Value> = c
                .iter()
                .map(|q| Value::String(format_rational(q)))
                .collect();
            v.push(Value::String(format_rational(rhs)));
            Value::Array(v)
        };
        let vec = |c: &[Rational]| -> Value {
            Value::Array(
                c.iter()
                    .map(|q| Value::String(format_rational(q)))
                    .collect(),
            )
        };
        json!({
            "vars": self.num_vars,
            "eq": self.equalities.iter().map(|c| row(&c.coeffs, &c.rhs)).collect::<Vec<_>>(),
            "le": self.inequalities.iter().map(|c| row(&c.coeffs, &c.rhs)).collect::<Vec<_>>(),
            "obj": {
                "lin": vec(&self.objective.linear),
                "const": format_rational(&self.objective.constant),
                "hinges": self.objective.hinges.iter().map(|h| json!({
                    "sign": h.sign,
                    "coeffs": vec(&h.coeffs),
                    "rhs": format_rational(&h.rhs),
                })).collect::<Vec<_>>(),
            }
        })
    }

    pub fn from_json(value: &Value) -> Result<Self, PlError> {
        let bad = |m: &str| PlError::InvalidJson(m.to_string());
        let num = |v: &Value| -> Result<Rational, PlError> {
            match v {
                Value::Number(n) => n
                    .as_i64()
                    .map(rat)
                    .ok_or_else(|| bad("numbers must be integers or \"p/q\" strings")),
                Value::String(s) => {
                    parse_rational(s).map_err(|e| PlError::InvalidJson(e.to_string()))
                }
                _ => Err(bad("expected a number")),
            }
        };
        let nums = |v: &Value| -> Result<Vec<Rational>, PlError> {
            v.as_array()
                .ok_or_else(|| bad("expected an array"))?
                .iter()
                .map(num)
                .collect()
        };
        let n = value
            .get("vars")
            .and_then(Value::as_u64)
            .ok_or_else(|| bad("missing `vars`"))? as usize;
        let rows = |key: &str| -> Result<Vec<Constraint>, PlError> {
            let Some(list) = value.get(key) else {
                return Ok(Vec::new());
            };
            list.as_array()
                .ok_or_else(|| bad("constraint lists must be arrays"))?
                .iter()
                .map(|r| {
                    let mut v = nums(r)?;
                    let rhs = v.pop().ok_or_else(|| bad("empty constraint row"))?;
                    Ok(Constraint::new(v, rhs))
                })
                .collect()
        };
        let obj = value.get("obj").ok_or_else(|| bad("missing `obj`"))?;
        let linear = nums(obj.get("lin").ok_or_else(|| bad("missing `obj.lin`"))?)?;
        let constant = match obj.get("const") {
            Some(c) => num(c)?,
            None => rat(0),
        };
        let hinges = match obj.get("hinges") {
            None => Vec::new(),
            Some(h) => h
                .as_array()
                .ok_or_else(|| bad("`hinges` must be an array"))?
                .iter()
                .map(|h| {
                    let sign = h
                        .get("sign")
                        .and_then(Value::as_i64)
                        .ok_or_else(|| bad("hinge needs an integer `sign`"))?;
                    let coeffs = nums(h.get("coeffs").ok_or_else(|| bad("hinge needs `coeffs`"))?)?;
                    let rhs = match h.get("rhs") {
                        Some(r) => num(r)?,
                        None => rat(0),
                    };
                    Ok(Hinge { sign, coeffs, rhs })
                })
                .collect::<Result<Vec<_>, PlError>>()?,
        };
        let p = PLProgram {
            num_vars: n,
            equalities: rows("eq")?,
            inequalities: rows("le")?,
            objective: Objective {
                linear,
                constant,
                hinges,
            },
        };
        p.validate()?;
        Ok(p)
    }
}
