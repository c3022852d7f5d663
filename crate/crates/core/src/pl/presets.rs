use std::str::FromStr;
use std::sync::OnceLock;

use serde::Serialize;

use super::{solve, Constraint, Hinge, PLProgram, PlError};
use crate::exact::{rat, Rational};

pub fn preset_names() -> &'static [&'static str] {
    &["lemma_b4", "lemma_coh4", "lemma_b5circ", "lemma_coh5"]
}

fn unit(n: usize, entries: &[(usize, i64)]) -> Vec<i64> {
    let mut v = vec![0; n];
    for &(i, c) in entries {
        v[i] += c;
    }
    v
}

fn le(n: usize, entries: &[(usize, i64)], rhs: i64) -> Constraint {
    Constraint::ints(&unit(n, entries), rhs)
}

fn hinge(n: usize, entries: &[(usize, i64)], rhs: i64) -> Hinge {
    Hinge {
        sign: -1,
        coeffs: unit(n, entries).into_iter().map(rat).collect(),
        rhs: rat(rhs),
    }
}

/// Variables `(x₁, x₂, x₃, y₁, y₂)`: normalized `e` and `f` of a degree 4
/// cover with `2e₁ ≤ f₂`.
fn lemma_b4() -> PLProgram {
    let n = 5;
    let (x1, x2, x3, y1, y2) = (0, 1, 2, 3, 4);
    let mut p = PLProgram::new(n, [-2, 0, 2, -1, 1].into_iter().map(rat).collect());
    p.equalities.push(le(n, &[(x1, 1), (x2, 1), (x3, 1)], 1));
    p.equalities.push(le(n, &[(y1, 1), (y2, 1)], 1));
    p.inequalities.extend([
        le(n, &[(x1, -1)], 0),
        le(n, &[(x1, 1), (x2, -1)], 0),
        le(n, &[(x2, 1), (x3, -1)], 0),
        le(n, &[(y1, 1), (y2, -1)], 0),
        le(n, &[(x1, 2), (y2, -1)], 0),
        // Splitting degrees of F are non-negative; without this the region
        // is unbounded in the y₁ direction.
        le(n, &[(y1, -1)], 0),
    ]);
    p
}

fn lemma_coh4() -> PLProgram {
    let n = 5;
    let (x1, x2, x3, y1, y2) = (0, 1, 2, 3, 4);
    let mut p = PLProgram::new(n, [-2, 0, 2, -1, 1].into_iter().map(rat).collect());
    p.equalities.push(le(n, &[(x1, 1), (x2, 1), (x3, 1)], 1));
    p.equalities.push(le(n, &[(y1, 1), (y2, 1)], 1));
    p.inequalities.extend([
        le(n, &[(x1, -1)], 0),
        le(n, &[(x1, 1), (x2, -1)], 0),
        le(n, &[(x2, 1), (x3, -1)], 0),
        le(n, &[(y1, -1)], 0),
        le(n, &[(y1, 1), (x1, -2)], 0),
        le(n, &[(x1, 2), (y2, -1)], 0),
        le(n, &[(y2, 1), (x2, -2)], 0),
        le(n, &[(y2, 1), (x1, -1), (x3, -1)], 0),
    ]);
    p.objective.hinges = vec![
        hinge(n, &[(y2, 1), (x1, -2)], 0),
        hinge(n, &[(y2, 1), (x1, -1), (x2, -1)], 0),
    ];
    p
}

/// Variables `(x₁, …, x₄, y₁, …, y₅)`: normalized `e` and `f` of a degree 5
/// cover.
fn b5_region() -> PLProgram {
    let n = 9;
    let x = |i: usize| i - 1;
    let y = |i: usize| 3 + i;
    let mut p = PLProgram::new(
        n,
        [-3, -1, 1, 3, -4, -2, 0, 2, 4]
            .into_iter()
            .map(rat)
            .collect(),
    );
    p.equalities
        .push(le(n, &[(x(1), 1), (x(2), 1), (x(3), 1), (x(4), 1)], 1));
    p.equalities.push(le(
        n,
        &[(y(1), 1), (y(2), 1), (y(3), 1), (y(4), 1), (y(5), 1)],
        2,
    ));
    p.inequalities.push(le(n, &[(x(1), -1)], 0));
    for i in 1..4 {
        p.inequalities.push(le(n, &[(x(i), 1), (x(i + 1), -1)], 0));
    }
    p.inequalities.push(le(n, &[(y(1), -1)], 0));
    for i in 1..5 {
        p.inequalities.push(le(n, &[(y(i), 1), (y(i + 1), -1)], 0));
    }
    p.inequalities
        .push(le(n, &[(x(1), 1), (y(1), 1), (y(2), 1)], 1));
    p
}

fn lemma_b5circ() -> PLProgram {
    b5_region()
}

fn lemma_coh5() -> PLProgram {
    let mut p = b5_region();
    let n = 9;
    let x = |i: usize| i - 1;
    let y = |i: usize| 3 + i;
    p.inequalities.extend([
        le(n, &[(y(1), -1), (y(3), -1), (x(4), -1)], -1),
        le(n, &[(y(1), -1), (y(4), -1), (x(3), -1)], -1),
        le(n, &[(y(2), -1), (y(3), -1), (x(3), -1)], -1),
    ]);
    // −max(0, 1 − y_a − y_b − x_i) for the pairs (a, b) that can give a
    // negative summand, and the admissible range of i for each.
    for (a, b, top) in [(1, 2, 4), (1, 3, 3), (1, 4, 2), (2, 3, 2)] {
        for i in 1..=top {
            p.objective
                .hinges
                .push(hinge(n, &[(y(a), -1), (y(b), -1), (x(i), -1)], -1));
        }
    }
    p
}

pub fn preset(name: &str) -> Result<PLProgram, PlError> {
    match name {
        "lemma_b4" => Ok(lemma_b4()),
        "lemma_coh4" => Ok(lemma_coh4()),
        "lemma_b5circ" => Ok(lemma_b5circ()),
        "lemma_coh5" => Ok(lemma_coh5()),
        _ => Err(PlError::UnknownPreset(name.to_string())),
    }
}

/// Which locus the codimension bound is for: the complement of `B°` in the
/// space of bundle data, or of `H°` in the Hurwitz space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum BoundCase {
    #[serde(rename = "B_circ")]
    BCirc,
    #[serde(rename = "H_circ")]
    HCirc,
}

impl FromStr for BoundCase {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "B_circ" => Ok(BoundCase::BCirc),
            "H_circ" => Ok(BoundCase::HCirc),
            _ => Err(format!("unknown case `{s}`; expected B_circ or H_circ")),
        }
    }
}

fn cached_min(name: &'static str, cell: &'static OnceLock<Rational>) -> Rational {
    cell.get_or_init(|| {
        solve(&preset(name).expect("built-in preset"))
            .expect("built-in presets are bounded and feasible")
            .min_value
    })
    .clone()
}

/// Lower bound on the codimension: `(g+3)·min − 4` for `k = 4`,
/// `(g+4)·min − 16` for `k = 5`, with `min` from the matching preset.
pub fn bound(k: i64, g: i64, case: BoundCase) -> Result<Rational, PlError> {
    static B4: OnceLock<Rational> = OnceLock::new();
    static COH4: OnceLock<Rational> = OnceLock::new();
    static B5: OnceLock<Rational> = OnceLock::new();
    static COH5: OnceLock<Rational> = OnceLock::new();
    if g < 2 {
        return Err(PlError::InvalidGenus(g));
    }
    let (scale, offset, min) = match (k, case) {
        (4, BoundCase::BCirc) => (g + 3, 4, cached_min("lemma_b4", &B4)),
        (4, BoundCase::HCirc) => (g + 3, 4, cached_min("lemma_coh4", &COH4)),
        (5, BoundCase::BCirc) => (g + 4, 16, cached_min("lemma_b5circ", &B5)),
        (5, BoundCase::HCirc) => (g + 4, 16, cached_min("lemma_coh5", &COH5)),
        _ => return Err(PlError::UnsupportedDegree(k)),
    };
    Ok(rat(scale) * min - rat(offset))
}
