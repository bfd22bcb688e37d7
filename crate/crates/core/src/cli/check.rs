//! Seeded differential run: every coefficient construction on every index,
//! plus the root oracle when `F0` is built from distinct roots.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::Result;
use crate::index::enumerate_deltas;
use crate::ring::{Rational, Ring};
use crate::subres::{subresultant, subresultant_root_oracle, Method, PolyTuple};
use crate::upoly::UPoly;

#[derive(Clone, Debug)]
pub struct CheckConfig {
    pub seed: u64,
    pub cases: usize,
    pub max_degree: usize,
    pub max_t: usize,
    /// Bound on numerators and denominators of random coefficients.
    pub height: i64,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig {
            seed: 1,
            cases: 100,
            max_degree: 6,
            max_t: 3,
            height: 20,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub cases: usize,
    pub agree: usize,
    pub comparisons: usize,
    pub oracle_cases: usize,
    pub failures: Vec<String>,
}

impl CheckReport {
    pub fn summary(&self) -> String {
        format!("{}/{} agree", self.agree, self.cases)
    }
}

/// A random tuple; `F0` comes with its roots when `with_roots` holds.
#[derive(Clone, Debug)]
pub struct RandomCase {
    pub tuple: PolyTuple<Rational>,
    pub roots: Option<(Rational, Vec<Rational>)>,
}

pub fn random_rational(rng: &mut impl Rng, height: i64) -> Rational {
    let num = rng.gen_range(-height..=height);
    let den = rng.gen_range(1..=height);
    Rational::new(num, den).expect("positive denominator")
}

pub fn random_nonzero(rng: &mut impl Rng, height: i64) -> Rational {
    loop {
        let r = random_rational(rng, height);
        if !r.is_zero() {
            return r;
        }
    }
}

/// Random polynomial of exact degree `deg`.
pub fn random_poly(rng: &mut impl Rng, deg: usize, height: i64) -> UPoly<Rational> {
    let mut coeffs: Vec<Rational> = (0..deg).map(|_| random_rational(rng, height)).collect();
    coeffs.push(random_nonzero(rng, height));
    UPoly::new(coeffs)
}

/// `count` pairwise distinct small rationals.
pub fn distinct_rationals(rng: &mut impl Rng, count: usize, height: i64) -> Vec<Rational> {
    let mut out: Vec<Rational> = Vec::with_capacity(count);
    while out.len() < count {
        let r = random_rational(rng, height);
        if !out.contains(&r) {
            out.push(r);
        }
    }
    out
}

pub fn random_case(
    rng: &mut impl Rng,
    t: usize,
    d0: usize,
    with_roots: bool,
    height: i64,
) -> Result<RandomCase> {
    let (f0, roots) = if with_roots {
        let lc = random_nonzero(rng, height);
        let roots = distinct_rationals(rng, d0, height.min(6));
        (UPoly::from_roots(&lc, &roots)?, Some((lc, roots)))
    } else {
        (random_poly(rng, d0, height), None)
    };
    let mut polys = vec![f0];
    for _ in 0..t {
        let deg = rng.gen_range(0..=d0);
        polys.push(random_poly(rng, deg, height));
    }
    Ok(RandomCase {
        tuple: PolyTuple::new(polys)?,
        roots,
    })
}

/// Runs one case; returns the number of comparisons or a description of
/// the first disagreement.
pub fn check_case(case: &RandomCase) -> std::result::Result<usize, String> {
    let f = &case.tuple;
    let mut comparisons = 0;
    for delta in enumerate_deltas(f.t(), f.d0()) {
        let describe = |what: &str| format!("F = {:?}, delta = {delta}: {what}", f.polys());
        let mut results = Vec::new();
        for m in Method::COEFFICIENT_METHODS {
            results.push(
                subresultant(f, &delta, m).map_err(|e| describe(&format!("{m} failed: {e}")))?,
            );
        }
        if let Some((lc, roots)) = &case.roots {
            results.push(
                subresultant_root_oracle(lc, roots, f.rest(), &delta)
                    .map_err(|e| describe(&format!("oracle failed: {e}")))?,
            );
        }
        let first = &results[0];
        for r in &results[1..] {
            comparisons += 1;
            if r.s_poly != first.s_poly || r.s_principal != first.s_principal {
                return Err(describe(&format!(
                    "{} gives {} but {} gives {}",
                    first.method, first.s_poly, r.method, r.s_poly
                )));
            }
        }
    }
    Ok(comparisons)
}

pub fn run_check(cfg: &CheckConfig) -> Result<CheckReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut report = CheckReport {
        cases: cfg.cases,
        agree: 0,
        comparisons: 0,
        oracle_cases: 0,
        failures: Vec::new(),
    };
    for i in 0..cfg.cases {
        let t = rng.gen_range(1..=cfg.max_t.max(1));
        let d0 = rng.gen_range(1..=cfg.max_degree.max(1));
        let case = random_case(&mut rng, t, d0, i % 2 == 0, cfg.height)?;
        report.oracle_cases += usize::from(case.roots.is_some());
        match check_case(&case) {
            Ok(n) => {
                report.agree += 1;
                report.comparisons += n;
            }
            Err(msg) => report.failures.push(msg),
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_run_agrees() {
        let cfg = CheckConfig {
            cases: 12,
            max_degree: 4,
            ..CheckConfig::default()
        };
        let report = run_check(&cfg).unwrap();
        assert_eq!(report.summary(), "12/12 agree");
        assert_eq!(report.oracle_cases, 6);
    }

    #[test]
    fn seeded_runs_repeat() {
        let cfg = CheckConfig {
            cases: 4,
            max_degree: 3,
            ..CheckConfig::default()
        };
        let a = run_check(&cfg).unwrap();
        let b = run_check(&cfg).unwrap();
        assert_eq!(a.comparisons, b.comparisons);
    }
}
