//! Density constants built from `6/π²` and finite Euler factors.
//!
//! A [`DensityValue`] is a sum of terms `r · (6/π²)^e · Π factors` kept in
//! exact form; the floating value is obtained by evaluating with π known to
//! 100 digits.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::{factorize, Effort};
use crate::error::{Error, Result};

const PI_DIGITS: &str = "3.1415926535897932384626433832795028841971693993751058209749445923078164062862089986280348253421170679";

/// π as a rational with 100 correct decimals.
pub fn pi_rational() -> BigRational {
    let digits = PI_DIGITS.replace('.', "");
    let num: BigInt = digits.parse().unwrap();
    let den = num_traits::pow(BigInt::from(10), digits.len() - 1);
    BigRational::new(num, den)
}

/// `6/π²` at 100-digit precision.
pub fn six_over_pi_squared() -> BigRational {
    let pi = pi_rational();
    BigRational::from_integer(BigInt::from(6)) / (&pi * &pi)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EulerFactor {
    /// `(1 - 1/p²)^(-1) = p²/(p² - 1)`
    InverseOneMinusPSquared(u64),
    /// `p/(p + 1)`
    POverPPlusOne(u64),
}

impl EulerFactor {
    pub fn value(self) -> BigRational {
        let r = |n: u64, d: u64| BigRational::new(BigInt::from(n), BigInt::from(d));
        match self {
            EulerFactor::InverseOneMinusPSquared(p) => r(p * p, p * p - 1),
            EulerFactor::POverPPlusOne(p) => r(p, p + 1),
        }
    }
}

/// `coefficient · (6/π²)^zeta_power · Π factors`
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DensityTerm {
    pub coefficient: BigRational,
    pub zeta_power: u32,
    pub factors: Vec<EulerFactor>,
}

impl DensityTerm {
    fn new(coefficient: BigRational, zeta_power: u32, factors: Vec<EulerFactor>) -> Self {
        DensityTerm {
            coefficient,
            zeta_power,
            factors,
        }
    }

    fn constant(c: i64) -> Self {
        Self::new(BigRational::from_integer(BigInt::from(c)), 0, Vec::new())
    }

    /// The rational part: coefficient times the Euler factors.
    pub fn rational_part(&self) -> BigRational {
        self.factors
            .iter()
            .fold(self.coefficient.clone(), |acc, f| acc * f.value())
    }

    fn evaluate_with(&self, zeta: &BigRational) -> BigRational {
        self.rational_part() * num_traits::pow(zeta.clone(), self.zeta_power as usize)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DensityValue {
    pub terms: Vec<DensityTerm>,
    pub approx: f64,
}

impl DensityValue {
    fn from_terms(terms: Vec<DensityTerm>) -> Self {
        let mut v = DensityValue { terms, approx: 0.0 };
        v.approx = v.evaluate().to_f64().unwrap();
        v
    }

    /// Exact sum with `6/π²` at 100-digit precision.
    pub fn evaluate(&self) -> BigRational {
        let zeta = six_over_pi_squared();
        self.terms
            .iter()
            .fold(BigRational::zero(), |acc, t| acc + t.evaluate_with(&zeta))
    }

    /// Sum of the rational coefficients of `(6/π²)^e`, indexed by `e`.
    pub fn rational_coefficients(&self) -> Vec<BigRational> {
        let top = self.terms.iter().map(|t| t.zeta_power).max().unwrap_or(0) as usize;
        let mut out = vec![BigRational::zero(); top + 1];
        for t in &self.terms {
            out[t.zeta_power as usize] += t.rational_part();
        }
        out
    }
}

impl fmt::Display for DensityValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.terms.iter().enumerate() {
            let negative = t.coefficient.is_negative();
            let c = t.coefficient.abs();
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { "-" } else { "+" })?;
            }
            let mut parts: Vec<String> = Vec::new();
            if !c.is_one() || (t.zeta_power == 0 && t.factors.is_empty()) {
                parts.push(c.to_string());
            }
            match t.zeta_power {
                0 => {}
                1 => parts.push("(6/π²)".into()),
                e => parts.push(format!("(6/π²)^{e}")),
            }
            for factor in &t.factors {
                let v = factor.value();
                parts.push(format!("({}/{})", v.numer(), v.denom()));
            }
            write!(f, "{}", parts.join("·"))?;
        }
        Ok(())
    }
}

fn prime_divisors(n: &BigInt) -> Result<Vec<u64>> {
    let fac = factorize(n, &Effort::default())?;
    if !fac.complete {
        return Err(Error::Hypothesis(format!("could not factor {n}")));
    }
    fac.primes()
        .map(|p| {
            p.to_u64()
                .ok_or_else(|| Error::Hypothesis(format!("prime {p} too large for an Euler factor")))
        })
        .collect()
}

/// Coefficient of `x` in the count of square-free `n <= x` with `n = m (mod k)`.
pub fn prachar_density(m: &BigInt, k: &BigInt) -> Result<DensityValue> {
    if k < &BigInt::one() {
        return Err(Error::Hypothesis("k must be positive".into()));
    }
    if !m.gcd(k).is_one() {
        return Err(Error::Hypothesis(format!("gcd({m}, {k}) != 1")));
    }
    let factors = prime_divisors(k)?
        .into_iter()
        .map(EulerFactor::InverseOneMinusPSquared)
        .collect();
    Ok(DensityValue::from_terms(vec![DensityTerm::new(
        BigRational::new(BigInt::one(), k.clone()),
        1,
        factors,
    )]))
}

/// Density of square-free integers coprime to `k`.
pub fn coprime_squarefree_density(k: &BigInt) -> Result<DensityValue> {
    if k < &BigInt::one() {
        return Err(Error::Hypothesis("k must be positive".into()));
    }
    let factors = prime_divisors(k)?
        .into_iter()
        .map(EulerFactor::POverPPlusOne)
        .collect();
    Ok(DensityValue::from_terms(vec![DensityTerm::new(
        BigRational::one(),
        1,
        factors,
    )]))
}

fn check_degree(n: u64) -> Result<()> {
    if n <= 2 {
        return Err(Error::Hypothesis(format!("n = {n} must exceed 2")));
    }
    Ok(())
}

fn check_c(c: &BigInt) -> Result<()> {
    if c.abs() <= BigInt::one() {
        return Err(Error::Hypothesis(format!("c = {c} must not be 0 or ±1")));
    }
    let fac = factorize(c, &Effort::default())?;
    if !fac.complete || fac.factors.iter().any(|(_, e)| *e >= 2) {
        return Err(Error::Hypothesis(format!("c = {c} must be square-free")));
    }
    Ok(())
}

/// Lower bound for the density of `b` making a root of `x^n + bx + b` a generator.
pub fn bound_linear_family(n: u64) -> Result<DensityValue> {
    check_degree(n)?;
    let factors = prime_divisors(&BigInt::from(n - 1))?
        .into_iter()
        .map(EulerFactor::InverseOneMinusPSquared)
        .collect();
    Ok(DensityValue::from_terms(vec![
        DensityTerm::new(BigRational::one(), 1, Vec::new()),
        DensityTerm::new(BigRational::one(), 1, factors),
        DensityTerm::constant(-1),
    ]))
}

/// Lower bound `B` for the density of `d` in `x^n + cx^(n-1) + cd`.
pub fn bound_nminus1_family(n: u64, c: &BigInt) -> Result<DensityValue> {
    check_degree(n)?;
    check_c(c)?;
    let over_c = prime_divisors(c)?
        .into_iter()
        .map(EulerFactor::POverPPlusOne)
        .collect();
    let over_n = prime_divisors(&BigInt::from(n))?
        .into_iter()
        .map(EulerFactor::InverseOneMinusPSquared)
        .collect();
    Ok(DensityValue::from_terms(vec![
        DensityTerm::new(BigRational::one(), 1, over_c),
        DensityTerm::new(BigRational::one(), 1, over_n),
        DensityTerm::constant(-1),
    ]))
}

/// `(B₁, B₂)`: the two bounds obtained by treating the square-free
/// conditions as independent events. `B₂` needs `c`.
pub fn heuristic_independence_bounds(n: u64, c: Option<&BigInt>) -> Result<(DensityValue, DensityValue)> {
    check_degree(n)?;
    let c = c.ok_or_else(|| Error::Hypothesis("B₂ needs c".into()))?;
    check_c(c)?;
    let b1 = DensityValue::from_terms(vec![DensityTerm::new(
        BigRational::one(),
        2,
        prime_divisors(&BigInt::from(n - 1))?
            .into_iter()
            .map(EulerFactor::InverseOneMinusPSquared)
            .collect(),
    )]);
    let mut factors: Vec<EulerFactor> = prime_divisors(c)?
        .into_iter()
        .map(EulerFactor::POverPPlusOne)
        .collect();
    factors.extend(
        prime_divisors(&BigInt::from(n))?
            .into_iter()
            .map(EulerFactor::InverseOneMinusPSquared),
    );
    let b2 = DensityValue::from_terms(vec![DensityTerm::new(BigRational::one(), 2, factors)]);
    Ok((b1, b2))
}

/// `B₁` alone, which does not depend on `c`.
pub fn heuristic_linear_bound(n: u64) -> Result<DensityValue> {
    check_degree(n)?;
    Ok(DensityValue::from_terms(vec![DensityTerm::new(
        BigRational::one(),
        2,
        prime_divisors(&BigInt::from(n - 1))?
            .into_iter()
            .map(EulerFactor::InverseOneMinusPSquared)
            .collect(),
    )]))
}
