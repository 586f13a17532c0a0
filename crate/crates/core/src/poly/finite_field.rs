//! Factorization over prime fields: square-free decomposition, distinct-degree
//! splitting, then Cantor–Zassenhaus equal-degree splitting.

use num_bigint::BigUint;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::ModPolynomial;
use crate::error::{Error, Result};

/// Seed used by [`factor_mod_p`].
pub const DEFAULT_SEED: u64 = 0xc0ffee;

/// `f = unit * prod(factor^exponent)` over F_p with distinct monic irreducible factors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorListModP {
    pub unit: u64,
    pub factors: Vec<(ModPolynomial, u32)>,
}

impl FactorListModP {
    pub fn product(&self, p: u64) -> ModPolynomial {
        self.factors
            .iter()
            .fold(ModPolynomial::new(p, vec![self.unit]), |acc, (g, e)| {
                acc.mul(&g.pow(*e))
            })
    }

    /// Degrees of the irreducible factors, with multiplicity.
    pub fn degree_multiset(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for (g, e) in &self.factors {
            for _ in 0..*e {
                out.push(g.degree().unwrap_or(0));
            }
        }
        out.sort_unstable();
        out
    }
}

/// Factor `f` over F_p into monic irreducibles, deterministic given the seed.
pub fn factor_mod_p(f: &ModPolynomial, p: u64) -> Result<FactorListModP> {
    factor_mod_p_seeded(f, p, DEFAULT_SEED)
}

pub fn factor_mod_p_seeded(f: &ModPolynomial, p: u64, seed: u64) -> Result<FactorListModP> {
    if f.modulus() != p {
        return Err(Error::InvalidModulus(p.to_string()));
    }
    if f.is_zero() {
        return Err(Error::VanishesModP(p));
    }
    let unit = f.leading();
    let monic = f.monic()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut factors = Vec::new();
    for (sqf, e) in squarefree_decomposition(&monic) {
        for (block, d) in distinct_degree(&sqf)? {
            for g in equal_degree(&block, d, &mut rng)? {
                factors.push((g, e));
            }
        }
    }
    let mut factors = merge(factors);
    factors.sort_by(|(a, _), (b, _)| (a.degree(), a.coeffs()).cmp(&(b.degree(), b.coeffs())));
    Ok(FactorListModP { unit, factors })
}

/// Yun-style decomposition over F_p: pairs `(g_i, i)` with `f = prod g_i^i`,
/// each `g_i` square-free, monic and nonconstant.
pub fn squarefree_decomposition(f: &ModPolynomial) -> Vec<(ModPolynomial, u32)> {
    let p = f.modulus();
    let mut out: Vec<(ModPolynomial, u32)> = Vec::new();
    if f.degree().unwrap_or(0) == 0 {
        return out;
    }
    let df = f.derivative();
    let mut c = f.gcd(&df);
    let mut w = f.divrem(&c).expect("nonzero").0;
    let mut i = 1u32;
    while !w.is_one() {
        let y = w.gcd(&c);
        let z = w.divrem(&y).expect("nonzero").0;
        if !z.is_one() {
            out.push((z, i));
        }
        w = y;
        c = c.divrem(&w).expect("nonzero").0;
        i += 1;
    }
    if !c.is_one() {
        // c is a polynomial in x^p
        let root = ModPolynomial::new(p, c.coeffs().iter().step_by(p as usize).copied().collect());
        for (g, e) in squarefree_decomposition(&root) {
            out.push((g, e * p as u32));
        }
    }
    merge(out)
}

fn merge(mut items: Vec<(ModPolynomial, u32)>) -> Vec<(ModPolynomial, u32)> {
    items.sort();
    let mut out: Vec<(ModPolynomial, u32)> = Vec::new();
    for (g, e) in items {
        match out.last_mut() {
            Some((h, k)) if *h == g => *k += e,
            _ => out.push((g, e)),
        }
    }
    out
}

/// Splits a square-free monic polynomial into products of same-degree irreducibles.
pub fn distinct_degree(f: &ModPolynomial) -> Result<Vec<(ModPolynomial, usize)>> {
    let p = f.modulus();
    let mut out = Vec::new();
    let mut g = f.clone();
    let x = ModPolynomial::x(p);
    let mut h = x.rem(&g)?;
    let mut d = 1usize;
    while g.degree().unwrap_or(0) >= 2 * d {
        h = h.powmod_u64(p, &g)?;
        let common = g.gcd(&h.sub(&x));
        if !common.is_one() {
            g = g.divrem(&common)?.0;
            h = h.rem(&g)?;
            out.push((common, d));
        }
        d += 1;
    }
    if g.degree().unwrap_or(0) > 0 {
        let deg = g.degree().unwrap();
        out.push((g, deg));
    }
    Ok(out)
}

/// Cantor–Zassenhaus: split a product of distinct degree-`d` irreducibles.
pub fn equal_degree(f: &ModPolynomial, d: usize, rng: &mut ChaCha8Rng) -> Result<Vec<ModPolynomial>> {
    let n = f.degree().unwrap_or(0);
    if n == d {
        return Ok(vec![f.clone()]);
    }
    let p = f.modulus();
    let exponent = if p == 2 {
        BigUint::default()
    } else {
        (num_traits::pow(BigUint::from(p), d) - BigUint::one()) >> 1
    };
    loop {
        let a = ModPolynomial::new(p, (0..n).map(|_| rng.gen_range(0..p)).collect());
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        let candidate = f.gcd(&a);
        let splitter = if !candidate.is_one() {
            candidate
        } else {
            let b = if p == 2 {
                // absolute trace of a into F_2
                let mut t = a.rem(f)?;
                let mut acc = t.clone();
                for _ in 1..d {
                    t = t.mul(&t).rem(f)?;
                    acc = acc.add(&t);
                }
                acc
            } else {
                a.powmod(&exponent, f)?.sub(&ModPolynomial::one(p))
            };
            f.gcd(&b)
        };
        let k = splitter.degree().unwrap_or(0);
        if k > 0 && k < n {
            let other = f.divrem(&splitter)?.0;
            let mut out = equal_degree(&splitter, d, rng)?;
            out.extend(equal_degree(&other, d, rng)?);
            return Ok(out);
        }
    }
}

/// Rabin's irreducibility test over F_p for a nonconstant polynomial.
pub fn is_irreducible_mod_p(f: &ModPolynomial) -> Result<bool> {
    let p = f.modulus();
    let f = f.monic()?;
    let n = f.degree().unwrap_or(0);
    if n == 0 {
        return Ok(false);
    }
    let x = ModPolynomial::x(p);
    // frob[i] = x^(p^i) mod f
    let mut frob = vec![x.rem(&f)?];
    for i in 1..=n {
        let next = frob[i - 1].powmod_u64(p, &f)?;
        frob.push(next);
    }
    if frob[n] != x.rem(&f)? {
        return Ok(false);
    }
    let mut m = n;
    let mut q = 2;
    let mut prime_divisors = Vec::new();
    while m > 1 {
        if m % q == 0 {
            prime_divisors.push(q);
            while m % q == 0 {
                m /= q;
            }
        }
        q += 1;
    }
    for q in prime_divisors {
        if !f.gcd(&frob[n / q].sub(&x)).is_one() {
            return Ok(false);
        }
    }
    Ok(true)
}
