//! End-to-end acceptance checks, one PASS/FAIL line per criterion.
//!
//! Runs without the libtest harness so each line reports its own timing.
//! Exits non-zero if any criterion fails.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use common::*;
use hurwitz_ce::ce::{CeSetup, Genus};
use hurwitz_ce::exact::{rat, Rational};
use hurwitz_ce::pl::{bound, preset, sample_check, solve, BoundCase, PLProgram};
use hurwitz_ce::splitting::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

fn point(v: &[(i64, i64)]) -> Vec<Rational> {
    v.iter().map(|&(n, d)| q(n, d)).collect()
}

fn fmt_point(p: &[Rational]) -> String {
    let parts: Vec<String> = p.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(", "))
}

fn check_minimum(name: &str, min: Rational, at: &[Rational], limit: Duration) -> Check {
    let p = preset(name).map_err(|e| e.to_string())?;
    let start = Instant::now();
    let s = solve(&p).map_err(|e| e.to_string())?;
    let took = start.elapsed();
    if s.min_value != min {
        return Err(format!("{name}: min {} != {min}", s.min_value));
    }
    if !s.argmin_points.iter().any(|x| x.as_slice() == at) {
        return Err(format!(
            "{name}: {} not among {} argmins",
            fmt_point(at),
            s.argmin_points.len()
        ));
    }
    if took >= limit {
        return Err(format!("{name}: took {took:.2?}, limit {limit:?}"));
    }
    Ok(format!(
        "{name}: min {min}, {} argmin(s), {took:.2?}",
        s.argmin_points.len()
    ))
}

fn criterion_1() -> Check {
    let at = point(&[(1, 4), (3, 8), (3, 8), (1, 2), (1, 2)]);
    check_minimum("lemma_b4", q(1, 4), &at, Duration::from_secs(5))
}

fn criterion_2() -> Check {
    let at = point(&[(1, 4), (3, 8), (3, 8), (1, 2), (1, 2)]);
    check_minimum("lemma_coh4", q(1, 4), &at, Duration::from_secs(30))
}

fn criterion_3() -> Check {
    let at = point(&[
        (1, 5),
        (4, 15),
        (4, 15),
        (4, 15),
        (2, 5),
        (2, 5),
        (2, 5),
        (2, 5),
        (2, 5),
    ]);
    let limit = Duration::from_secs(600);
    let a = check_minimum("lemma_b5circ", q(1, 5), &at, limit)?;
    let b = check_minimum("lemma_coh5", q(1, 5), &at, limit)?;
    Ok(format!("{a}; {b}"))
}

fn criterion_4() -> Check {
    let genera = [2i64, 5, 10, 19, 30, 47, 61, 100, 104, 250];
    for g in genera {
        let four = q(g + 3, 4) - rat(4);
        let five = q(g + 4, 5) - rat(16);
        for case in [BoundCase::BCirc, BoundCase::HCirc] {
            let b4 = bound(4, g, case).map_err(|e| e.to_string())?;
            let b5 = bound(5, g, case).map_err(|e| e.to_string())?;
            if b4 != four {
                return Err(format!("k = 4, g = {g}, {case:?}: {b4} != {four}"));
            }
            if b5 != five {
                return Err(format!("k = 5, g = {g}, {case:?}: {b5} != {five}"));
            }
        }
    }
    Ok(format!(
        "both cases, k = 4 and 5, at {} genera",
        genera.len()
    ))
}

fn criterion_5() -> Check {
    let expected = [
        (0, "3,3,3", "4,5"),
        (1, "2,3,4", "4,5"),
        (2, "3,3,3", "3,6"),
        (2, "2,3,4", "3,6"),
        (2, "1,4,4", "2,7"),
    ];
    let rows = enumerate_strata4(6, StrataFilter::Irreducible).map_err(|e| e.to_string())?;
    let got: Vec<(i64, String, String)> = rows
        .iter()
        .map(|r| (r.codim, r.e.to_string(), r.f.to_string()))
        .collect();
    let want: Vec<(i64, String, String)> = expected
        .iter()
        .map(|&(c, e, f)| (c, e.to_string(), f.to_string()))
        .collect();
    if got != want {
        return Err(format!("got {got:?}"));
    }
    Ok("5 strata, codims [0, 1, 2, 2, 2]".into())
}

fn criterion_6() -> Check {
    let mut count = 0;
    for k in 3..=5 {
        for g in 2..=30i64 {
            let s = CeSetup::new(k, Genus::Numeric(g), 2).map_err(|e| e.to_string())?;
            let k0 = s.kappa(0).map_err(|e| e.to_string())?.polynomial;
            if k0.as_constant() != Some(rat(2 * g - 2)) {
                return Err(format!("k = {k}, g = {g}: kappa_0 = {k0}"));
            }
            count += 1;
        }
    }
    Ok(format!("{count} (k, g) pairs"))
}

fn criterion_7() -> Check {
    for k in 3..=5 {
        let s = CeSetup::new(k, Genus::Unspecialized, 4).map_err(|e| e.to_string())?;
        let pushed = s.curve_class().push_gamma();
        if pushed != s.fiber().integer(k) {
            return Err(format!("k = {k}: pushforward {pushed}"));
        }
    }
    Ok("k = 3, 4, 5".into())
}

fn criterion_8() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..10_000 {
        let g = rng.random_range(2..60);
        let e = random_type(&mut rng, 3, g + 3, -4).unwrap();
        let f = random_type(&mut rng, 2, g + 3, -4).unwrap();
        let c = codim_hurwitz4(&e, &f).map_err(|x| x.to_string())?;
        if c != recount_codim4(e.parts(), f.parts()) {
            return Err(format!("k = 4: {e} {f}"));
        }
        let e = random_type(&mut rng, 4, g + 4, -4).unwrap();
        let f = random_type(&mut rng, 5, 2 * g + 8, -4).unwrap();
        let c = codim_hurwitz5(&e, &f, g).map_err(|x| x.to_string())?;
        if c != recount_codim5(e.parts(), f.parts(), g) {
            return Err(format!("k = 5: {e} {f} at g = {g}"));
        }
    }
    let fiber = bare_fiber(4);
    let top = 3;
    for _ in 0..1_000 {
        let (rs, ds) = (rng.random_range(1..=4), rng.random_range(-6..=6));
        let (rt, dt) = (rng.random_range(1..=3), rng.random_range(-6..=6));
        let s = random_type(&mut rng, rs, ds, -6).unwrap();
        let t = random_type(&mut rng, rt, dt, -6).unwrap();
        let cs = split_char(&fiber, &s, top);
        let ct = split_char(&fiber, &t, top);
        if cs.sym2() != split_char(&fiber, &sym2_type(&s), top) {
            return Err(format!("sym2 of {s}"));
        }
        if cs.wedge2() != split_char(&fiber, &wedge2_type(&s), top) {
            return Err(format!("wedge2 of {s}"));
        }
        if cs.tensor(&ct).map_err(|x| x.to_string())?
            != split_char(&fiber, &tensor_type(&s, &t), top)
        {
            return Err(format!("{s} tensor {t}"));
        }
    }
    Ok("10^4 codimension pairs per degree, 10^3 character cases".into())
}

fn invariances(rng: &mut ChaCha8Rng, p: &PLProgram) -> Result<(), String> {
    let s = solve(p).map_err(|e| e.to_string())?;
    let mut q = p.clone();
    q.inequalities.push(implied_constraint(rng, p));
    let redundant = solve(&q).map_err(|e| e.to_string())?;
    if redundant.min_value != s.min_value {
        return Err(format!(
            "redundant constraint moved min {} -> {}",
            s.min_value, redundant.min_value
        ));
    }
    let factor = Rational::new(rng.random_range(1..9).into(), rng.random_range(1..5).into());
    let scaled = solve(&p.scale_objective(&factor)).map_err(|e| e.to_string())?;
    if scaled.min_value != &s.min_value * &factor || scaled.argmin_points != s.argmin_points {
        return Err(format!("scaling by {factor} changed the solution"));
    }
    Ok(())
}

fn criterion_9() -> Check {
    let mut report = Vec::new();
    for name in ["lemma_b4", "lemma_coh4", "lemma_b5circ", "lemma_coh5"] {
        let p = preset(name).map_err(|e| e.to_string())?;
        let min = solve(&p).map_err(|e| e.to_string())?.min_value;
        let sampled = sample_check(&p, 10_000, 7).map_err(|e| e.to_string())?;
        if sampled < min {
            return Err(format!("{name}: sample {sampled} < min {min}"));
        }
        report.push(format!("{name} {sampled} >= {min}"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for _ in 0..100 {
        let p = random_program(&mut rng);
        invariances(&mut rng, &p)?;
    }
    Ok(format!(
        "{}; 100 random programs invariant",
        report.join(", ")
    ))
}

fn criterion_10() -> Check {
    let mut worst = Vec::new();
    for g in [10i64, 11] {
        let mut passing = 0;
        let mut max = (0, String::new());
        for (e, f) in candidate_pairs5(g) {
            if !constraints_5(&e, &f, g)
                .map_err(|x| x.to_string())?
                .pfaffian_ok
            {
                continue;
            }
            passing += 1;
            let n = negative_summand_count5(&e, &f, g).map_err(|x| x.to_string())?;
            if n > max.0 {
                max = (n, format!("e = ({e}), f = ({f})"));
            }
        }
        worst.push((g, passing, max));
    }
    let summary: Vec<String> = worst
        .iter()
        .map(|(g, n, (m, at))| format!("g = {g}: {n} pairs, max {m} at {at}"))
        .collect();
    if worst.iter().any(|(_, _, (m, _))| *m > 11) {
        Err(summary.join("; "))
    } else {
        Ok(summary.join("; "))
    }
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("degree 4 base minimum", criterion_1),
        ("degree 4 cohomological minimum", criterion_2),
        ("degree 5 minima", criterion_3),
        ("assembled bounds", criterion_4),
        ("genus 6 strata table", criterion_5),
        ("kappa_0 = 2g - 2", criterion_6),
        ("curve class has degree k", criterion_7),
        ("oracle equivalence", criterion_8),
        ("sampling and invariances", criterion_9),
        ("negative Pfaffian summands <= 11", criterion_10),
    ];
    let mut failed = 0;
    for (i, (label, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome =
            catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        let took = start.elapsed();
        match outcome {
            Ok(detail) => println!("PASS {:>2} {label} [{took:.2?}]: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {label} [{took:.2?}]: {detail}", i + 1);
            }
        }
    }
    println!("{} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
