//! Does a root θ of `f` generate the ring of integers?
//!
//! Only primes whose square divides `disc(f)` can divide the index, so the
//! discriminant is factored and each such prime is tested by both the
//! polygon engine and Dedekind's criterion.

pub mod congruences;
pub mod crosscheck;
pub mod theorems;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::arith::factor::perfect_power;
use crate::arith::primes::TRIAL_BOUND;
use crate::arith::{factorize, is_prime, Effort};
use crate::dedekind::dedekind_p_divides_index;
use crate::error::{Error, Result};
use crate::poly::{discriminant, irreducibility, IntPolynomial};
use crate::polygon::ore_p_divides_index;

pub use theorems::{
    hypothesis_quantity, theorem_check, theorem_quintic_linear, theorem_quintic_nm1,
    theorem_sextic_linear, theorem_sextic_nm1, Family, TheoremCheck,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Method {
    Ore,
    Dedekind,
    Both,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeTestResult {
    pub p: BigInt,
    pub divides_index: bool,
    pub method: Method,
    pub agreement: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Outcome {
    Generator,
    NotGenerator,
    Unknown,
}

impl Outcome {
    pub fn exit_code(self) -> i32 {
        match self {
            Outcome::Generator => 0,
            Outcome::NotGenerator => 1,
            Outcome::Unknown => 2,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonogenicityVerdict {
    pub polynomial: IntPolynomial,
    pub irreducible: bool,
    pub discriminant: BigInt,
    pub tested_primes: Vec<PrimeTestResult>,
    pub outcome: Outcome,
    /// Part of the discriminant left unfactored that may hide a square; 1 otherwise.
    pub unknown_cofactor: BigInt,
}

impl MonogenicityVerdict {
    /// First prime found to divide the index.
    pub fn witness(&self) -> Option<&BigInt> {
        self.tested_primes
            .iter()
            .find(|t| t.divides_index)
            .map(|t| &t.p)
    }

    pub fn engines_agree(&self) -> bool {
        self.tested_primes.iter().all(|t| t.agreement)
    }

    pub fn to_record(&self) -> VerdictRecord {
        VerdictRecord {
            poly: self.polynomial.render(),
            irreducible: self.irreducible,
            disc: self.discriminant.to_string(),
            primes: self
                .tested_primes
                .iter()
                .map(|t| PrimeRecord {
                    p: t.p.to_string(),
                    divides_index: t.divides_index,
                    methods_agree: t.agreement,
                })
                .collect(),
            outcome: self.outcome,
            unknown_cofactor: self.unknown_cofactor.to_string(),
        }
    }

    /// The verdict record as one line of JSON.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_record()).expect("verdict records serialize")
    }
}

/// JSON shape of a verdict; integers are decimal strings.
#[derive(Debug, Clone, Serialize)]
pub struct VerdictRecord {
    pub poly: String,
    pub irreducible: bool,
    pub disc: String,
    pub primes: Vec<PrimeRecord>,
    pub outcome: Outcome,
    pub unknown_cofactor: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct PrimeRecord {
    pub p: String,
    pub divides_index: bool,
    pub methods_agree: bool,
}

/// Run both engines at `p`.
pub fn test_prime(f: &IntPolynomial, p: &BigInt) -> Result<PrimeTestResult> {
    let ore = ore_p_divides_index(f, p)?;
    let dedekind = dedekind_p_divides_index(f, p)?;
    Ok(PrimeTestResult {
        p: p.clone(),
        divides_index: ore || dedekind,
        method: Method::Both,
        agreement: ore == dedekind,
    })
}

pub fn certify_generator(f: &IntPolynomial, effort: &Effort) -> Result<MonogenicityVerdict> {
    let disc = discriminant(f)?;
    if disc.is_zero() {
        return Err(Error::ZeroDiscriminant);
    }
    if !irreducibility(f)?.is_irreducible() {
        return Ok(MonogenicityVerdict {
            polynomial: f.clone(),
            irreducible: false,
            discriminant: disc,
            tested_primes: Vec::new(),
            outcome: Outcome::Unknown,
            unknown_cofactor: BigInt::one(),
        });
    }
    let fac = factorize(&disc, effort)?;
    let mut candidates: Vec<BigInt> = fac
        .factors
        .iter()
        .filter(|(_, e)| *e >= 2)
        .map(|(p, _)| p.clone())
        .collect();
    let mut unknown_cofactor = BigInt::one();
    if !fac.complete {
        match hidden_square(fac.cofactor.magnitude()) {
            Hidden::None => {}
            Hidden::Prime(p) => candidates.push(p),
            Hidden::Possible => unknown_cofactor = fac.cofactor.abs(),
        }
    }
    let mut tested_primes = Vec::with_capacity(candidates.len());
    for p in &candidates {
        tested_primes.push(test_prime(f, p)?);
    }
    let outcome = if tested_primes.iter().any(|t| t.divides_index) {
        Outcome::NotGenerator
    } else if !unknown_cofactor.is_one() {
        Outcome::Unknown
    } else {
        Outcome::Generator
    };
    Ok(MonogenicityVerdict {
        polynomial: f.clone(),
        irreducible: true,
        discriminant: disc,
        tested_primes,
        outcome,
        unknown_cofactor,
    })
}

enum Hidden {
    None,
    Prime(BigInt),
    Possible,
}

// The cofactor has only prime factors above the trial bound.
fn hidden_square(c: &BigUint) -> Hidden {
    if let Some((root, _)) = perfect_power(c) {
        let root = BigInt::from(root);
        if is_prime(&root) {
            return Hidden::Prime(root);
        }
        return Hidden::Possible;
    }
    let t = BigUint::from(TRIAL_BOUND);
    if c < &(&t * &t * &t) {
        Hidden::None
    } else {
        Hidden::Possible
    }
}
