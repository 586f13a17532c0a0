//! Differential testing of the polygon engine against Dedekind's criterion.

use num_bigint::BigInt;
use rand::Rng;
use rayon::prelude::*;

use super::congruences::{in_class, representative, SPECIAL_PRIMES};
use super::theorems::Family;
use crate::arith::{factorize, Effort};
use crate::dedekind::dedekind_p_divides_index;
use crate::error::Result;
use crate::poly::{discriminant, is_irreducible_over_q, IntPolynomial};
use crate::polygon::ore_p_divides_index;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Disagreement {
    pub polynomial: IntPolynomial,
    pub p: BigInt,
    pub ore: bool,
    pub dedekind: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CrossCheckReport {
    pub polynomials: usize,
    pub prime_tests: usize,
    /// Discriminants that could not be fully factored; only the primes found were tested.
    pub incomplete: usize,
    pub disagreements: Vec<Disagreement>,
}

/// A monic irreducible polynomial of degree in `degrees` with the other
/// coefficients drawn uniformly from `[-coeff_max, coeff_max]`.
pub fn random_monic_irreducible<R: Rng>(
    rng: &mut R,
    degrees: std::ops::RangeInclusive<usize>,
    coeff_max: i64,
) -> Result<IntPolynomial> {
    loop {
        let n = rng.gen_range(degrees.clone());
        let mut c: Vec<i64> = (0..n).map(|_| rng.gen_range(-coeff_max..=coeff_max)).collect();
        c.push(1);
        let f = IntPolynomial::from_i64s(&c);
        if is_irreducible_over_q(&f)? {
            return Ok(f);
        }
    }
}

/// Compare both engines at every prime whose square divides `disc(f)`.
/// Returns the number of primes tested, whether the factorization was
/// complete, and any disagreements.
pub fn compare_engines(f: &IntPolynomial, effort: &Effort) -> Result<(usize, bool, Vec<Disagreement>)> {
    let fac = factorize(&discriminant(f)?, effort)?;
    let mut tested = 0;
    let mut out = Vec::new();
    for (p, e) in &fac.factors {
        if *e < 2 {
            continue;
        }
        tested += 1;
        let ore = ore_p_divides_index(f, p)?;
        let dedekind = dedekind_p_divides_index(f, p)?;
        if ore != dedekind {
            out.push(Disagreement {
                polynomial: f.clone(),
                p: p.clone(),
                ore,
                dedekind,
            });
        }
    }
    Ok((tested, fac.complete, out))
}

pub fn cross_check(polys: &[IntPolynomial], effort: &Effort) -> Result<CrossCheckReport> {
    let parts = polys
        .par_iter()
        .map(|f| compare_engines(f, effort))
        .collect::<Result<Vec<_>>>()?;
    let mut report = CrossCheckReport {
        polynomials: polys.len(),
        ..CrossCheckReport::default()
    };
    for (tested, complete, bad) in parts {
        report.prime_tests += tested;
        report.incomplete += (!complete) as usize;
        report.disagreements.extend(bad);
    }
    Ok(report)
}

/// One irreducible member for every residue case treated in the proofs of
/// the four family criteria, plus a few fixed polynomials.
pub fn worked_corpus() -> Result<Vec<IntPolynomial>> {
    let mut out: Vec<IntPolynomial> = [
        "x^5 + 2x + 2",
        "x^5 + 5x + 31",
        "x^2 + 3",
        "x^6 + 3x + 3",
        "x^5 + 4x^4 + 4",
        "x^6 + 2x^5 + 6",
    ]
    .iter()
    .map(|s| crate::poly::parse_polynomial(s))
    .collect::<Result<_>>()?;
    out.retain(|f| is_irreducible_over_q(f).unwrap_or(false));
    for family in Family::ALL {
        for p in SPECIAL_PRIMES {
            let m = p * p;
            for x in 0..m {
                for y in 0..m {
                    if in_class(family, p, x, y) {
                        out.push(representative(family, m, x, y)?);
                    }
                }
            }
        }
    }
    Ok(out)
}
