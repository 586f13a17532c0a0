//! Integer factorization: trial division below [`TRIAL_BOUND`], then
//! Brent's variant of Pollard rho under an explicit iteration budget.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint, RandBigInt, Sign};
use num_integer::Integer as _;
use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::primes::{is_prime_biguint, mulmod_u64, small_primes, TRIAL_BOUND};
use super::TriState;
use crate::error::{Error, Result};

/// Work budget for the factorization routines.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Effort {
    /// Total Pollard rho iterations shared across every composite split.
    pub rho_iterations: u64,
    /// Seed for rho parameters and probabilistic primality rounds.
    pub seed: u64,
}

impl Default for Effort {
    fn default() -> Self {
        Effort {
            rho_iterations: 2_000_000,
            seed: 0x5eed,
        }
    }
}

impl Effort {
    pub fn new(rho_iterations: u64, seed: u64) -> Self {
        Effort {
            rho_iterations,
            seed,
        }
    }
}

/// Result of [`factorize`]: `unit * cofactor * prod(p^e)` reproduces the input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub unit: i8,
    pub factors: Vec<(BigInt, u32)>,
    /// 1 when the factorization is complete, otherwise the unsplit composite part.
    pub cofactor: BigInt,
    pub complete: bool,
}

impl Factorization {
    /// Multiplies everything back together.
    pub fn reassemble(&self) -> BigInt {
        let mut acc = BigInt::from(self.unit) * &self.cofactor;
        for (p, e) in &self.factors {
            acc *= num_traits::pow(p.clone(), *e as usize);
        }
        acc
    }

    pub fn exponent_of(&self, p: &BigInt) -> u32 {
        self.factors
            .iter()
            .find(|(q, _)| q == p)
            .map_or(0, |(_, e)| *e)
    }

    pub fn primes(&self) -> impl Iterator<Item = &BigInt> {
        self.factors.iter().map(|(p, _)| p)
    }
}

/// Factor a nonzero integer within the given effort.
pub fn factorize(n: &BigInt, effort: &Effort) -> Result<Factorization> {
    if n.is_zero() {
        return Err(Error::FactorZero);
    }
    let unit: i8 = if n.sign() == Sign::Minus { -1 } else { 1 };
    let mut found: BTreeMap<BigUint, u32> = BTreeMap::new();
    let rest = trial_divide(n.magnitude().clone(), &mut found);

    let mut unresolved: Vec<BigUint> = Vec::new();
    if !rest.is_one() {
        let bound_sq = BigUint::from(TRIAL_BOUND as u64 * TRIAL_BOUND as u64);
        if rest < bound_sq {
            *found.entry(rest).or_insert(0) += 1;
        } else {
            let mut budget = effort.rho_iterations;
            let mut rng = ChaCha8Rng::seed_from_u64(effort.seed);
            let mut stack = vec![(rest, 1u32)];
            while let Some((m, mult)) = stack.pop() {
                if m.is_one() {
                    continue;
                }
                if is_prime_biguint(&m, effort.seed) {
                    *found.entry(m).or_insert(0) += mult;
                    continue;
                }
                if let Some((root, k)) = perfect_power(&m) {
                    stack.push((root, mult * k));
                    continue;
                }
                match split(&m, &mut budget, &mut rng) {
                    Some(d) => {
                        let other = &m / &d;
                        stack.push((d, mult));
                        stack.push((other, mult));
                    }
                    None => {
                        for _ in 0..mult {
                            unresolved.push(m.clone());
                        }
                    }
                }
            }
        }
    }

    // Strip any listed prime out of the unresolved pieces.
    let mut cofactor = BigUint::one();
    for mut m in unresolved {
        for (p, e) in found.iter_mut() {
            while (&m % p).is_zero() {
                m /= p;
                *e += 1;
            }
        }
        cofactor *= m;
    }
    let complete = cofactor.is_one();
    let factors = found
        .into_iter()
        .map(|(p, e)| (BigInt::from(p), e))
        .collect();
    Ok(Factorization {
        unit,
        factors,
        cofactor: BigInt::from(cofactor),
        complete,
    })
}

/// Square-freeness of `|n|`; `Unknown` only when an unsplit cofactor could hide a square.
pub fn is_squarefree(n: &BigInt, effort: &Effort) -> Result<TriState> {
    if n.is_zero() {
        return Err(Error::FactorZero);
    }
    let f = factorize(n, effort)?;
    if f.factors.iter().any(|(_, e)| *e >= 2) {
        return Ok(TriState::False);
    }
    if f.complete {
        return Ok(TriState::True);
    }
    let c = f.cofactor.magnitude();
    if perfect_power(c).is_some() {
        return Ok(TriState::False);
    }
    // Every prime factor of the cofactor exceeds the trial bound, so below
    // its cube the cofactor has at most two prime factors; not being a
    // square then means they are distinct.
    let t = BigUint::from(TRIAL_BOUND);
    if c < &(&t * &t * &t) {
        return Ok(TriState::True);
    }
    Ok(TriState::Unknown)
}

fn trial_divide(mut m: BigUint, found: &mut BTreeMap<BigUint, u32>) -> BigUint {
    let primes = small_primes();
    let mut idx = 0;
    while idx < primes.len() {
        if let Some(w) = m.to_u128() {
            let mut w = w;
            while idx < primes.len() {
                let p = primes[idx] as u128;
                if p * p > w {
                    break;
                }
                if w % p == 0 {
                    let mut e = 0;
                    while w % p == 0 {
                        w /= p;
                        e += 1;
                    }
                    *found.entry(BigUint::from(p)).or_insert(0) += e;
                }
                idx += 1;
            }
            if w > 1 && idx < primes.len() {
                // loop exited on p^2 > w: w is prime
                *found.entry(BigUint::from(w)).or_insert(0) += 1;
                w = 1;
            }
            return BigUint::from(w);
        }
        let p = primes[idx];
        if (&m % p).is_zero() {
            let mut e = 0;
            while (&m % p).is_zero() {
                m /= p;
                e += 1;
            }
            found.insert(BigUint::from(p), e);
        }
        idx += 1;
    }
    m
}

/// Returns `(r, k)` with `r^k = m`, `k >= 2` maximal-first, if `m` is a perfect power.
pub fn perfect_power(m: &BigUint) -> Option<(BigUint, u32)> {
    if m <= &BigUint::one() {
        return None;
    }
    let bits = m.bits() as u32;
    for k in (2..=bits).rev() {
        let r = m.nth_root(k);
        if r > BigUint::one() && num_traits::pow(r.clone(), k as usize) == *m {
            return Some((r, k));
        }
    }
    None
}

fn split(m: &BigUint, budget: &mut u64, rng: &mut ChaCha8Rng) -> Option<BigUint> {
    if m.is_even() {
        return Some(BigUint::from(2u32));
    }
    while *budget > 0 {
        let d = if let Some(w) = m.to_u64() {
            let c = rng.gen_range(1..w);
            let x0 = rng.gen_range(0..w);
            brent_u64(w, c, x0, budget).map(BigUint::from)
        } else {
            let c = rng.gen_biguint_range(&BigUint::one(), m);
            let x0 = rng.gen_biguint_below(m);
            brent_big(m, &c, &x0, budget)
        };
        if let Some(d) = d {
            if !d.is_one() && &d != m {
                return Some(d);
            }
        }
    }
    None
}

const BATCH: u64 = 128;

fn brent_u64(n: u64, c: u64, x0: u64, budget: &mut u64) -> Option<u64> {
    let f = |x: u64| ((mulmod_u64(x, x, n) as u128 + c as u128) % n as u128) as u64;
    let mut y = x0;
    let mut r = 1u64;
    let mut q = 1u64;
    let mut g = 1u64;
    let mut x = y;
    let mut ys = y;
    while g == 1 {
        x = y;
        for _ in 0..r {
            y = f(y);
        }
        *budget = budget.saturating_sub(r);
        let mut k = 0;
        while k < r && g == 1 {
            ys = y;
            let steps = BATCH.min(r - k);
            for _ in 0..steps {
                y = f(y);
                q = mulmod_u64(q, x.abs_diff(y), n);
            }
            *budget = budget.saturating_sub(steps);
            g = q.gcd(&n);
            k += steps;
            if *budget == 0 && g == 1 {
                return None;
            }
        }
        r *= 2;
    }
    if g == n {
        loop {
            ys = f(ys);
            g = x.abs_diff(ys).gcd(&n);
            if g > 1 {
                break;
            }
        }
    }
    (g != n).then_some(g)
}

fn brent_big(n: &BigUint, c: &BigUint, x0: &BigUint, budget: &mut u64) -> Option<BigUint> {
    let f = |x: &BigUint| (x * x + c) % n;
    let diff = |a: &BigUint, b: &BigUint| if a > b { a - b } else { b - a };
    let one = BigUint::one();
    let mut y = x0.clone();
    let mut r = 1u64;
    let mut q = one.clone();
    let mut g = one.clone();
    let mut x = y.clone();
    let mut ys = y.clone();
    while g.is_one() {
        x = y.clone();
        for _ in 0..r {
            y = f(&y);
        }
        *budget = budget.saturating_sub(r);
        let mut k = 0;
        while k < r && g.is_one() {
            ys = y.clone();
            let steps = BATCH.min(r - k);
            for _ in 0..steps {
                y = f(&y);
                q = (q * diff(&x, &y)) % n;
            }
            *budget = budget.saturating_sub(steps);
            g = q.gcd(n);
            k += steps;
            if *budget == 0 && g.is_one() {
                return None;
            }
        }
        r *= 2;
    }
    if &g == n {
        loop {
            ys = f(&ys);
            g = diff(&x, &ys).gcd(n);
            if !g.is_one() {
                break;
            }
        }
    }
    (&g != n).then_some(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn squarefree_brute(n: i64) -> bool {
        let n = n.unsigned_abs();
        let mut d = 2u64;
        while d * d <= n {
            if n % (d * d) == 0 {
                return false;
            }
            d += 1;
        }
        true
    }

    #[test]
    fn spec_examples() {
        let e = Effort::default();
        let f = factorize(&big(46656), &e).unwrap();
        assert_eq!(f.factors, vec![(big(2), 6), (big(3), 6)]);
        assert!(f.complete);

        let f = factorize(&big(-12), &e).unwrap();
        assert_eq!(f.unit, -1);
        assert_eq!(f.factors, vec![(big(2), 2), (big(3), 1)]);

        let f = factorize(&big(1), &e).unwrap();
        assert!(f.factors.is_empty());
        assert_eq!(f.cofactor, big(1));

        assert_eq!(factorize(&big(0), &e), Err(Error::FactorZero));
    }

    #[test]
    fn squarefree_examples() {
        let e = Effort::default();
        assert_eq!(is_squarefree(&big(10), &e).unwrap(), TriState::True);
        assert_eq!(is_squarefree(&big(12), &e).unwrap(), TriState::False);
        assert_eq!(is_squarefree(&big(3637), &e).unwrap(), TriState::True);
        assert!(is_squarefree(&big(0), &e).is_err());
    }

    #[test]
    fn reassembly_and_squarefree_exhaustive() {
        let e = Effort::default();
        for n in (-1_000_000i64..=1_000_000).step_by(7).filter(|&n| n != 0) {
            let f = factorize(&big(n), &e).unwrap();
            assert!(f.complete);
            assert_eq!(f.reassemble(), big(n));
            assert_eq!(
                is_squarefree(&big(n), &e).unwrap() == TriState::True,
                squarefree_brute(n),
                "n = {n}"
            );
        }
    }

    #[test]
    fn rho_splits_large_semiprimes() {
        let e = Effort::default();
        let p = big(1_000_000_007);
        let q = big(998_244_353);
        let r = BigInt::from(2_305_843_009_213_693_951u64); // 2^61 - 1
        let n = &p * &q * &r;
        let f = factorize(&n, &e).unwrap();
        assert!(f.complete);
        assert_eq!(f.factors.len(), 3);
        assert_eq!(f.reassemble(), n);

        let sq = &p * &p * &q;
        assert_eq!(is_squarefree(&sq, &e).unwrap(), TriState::False);

        // above 2^63, where x^2 + c no longer fits a u64
        let n = big(4_294_967_291) * big(4_294_967_279);
        assert!(n > BigInt::from(1u64 << 63));
        let f = factorize(&n, &e).unwrap();
        assert!(f.complete);
        assert_eq!(f.factors, vec![(big(4_294_967_279), 1), (big(4_294_967_291), 1)]);
    }

    #[test]
    fn exhausted_budget_reports_cofactor() {
        let e = Effort::new(0, 1);
        let p = BigInt::from(1_000_000_007u64);
        let q = BigInt::from(1_000_000_009u64);
        let r = BigInt::from(998_244_353u64);
        let n = &p * &q * &r * 12;
        let f = factorize(&n, &e).unwrap();
        assert!(!f.complete);
        assert_eq!(f.cofactor, &p * &q * &r);
        assert_eq!(f.reassemble(), n);
        assert_eq!(is_squarefree(&n, &e).unwrap(), TriState::False);
        let m = &p * &q * &r * 6;
        assert_eq!(is_squarefree(&m, &e).unwrap(), TriState::Unknown);
        // below the cube of the trial bound two large primes cannot hide a square
        let (s, t) = (BigInt::from(100_003u64), BigInt::from(100_019u64));
        assert!(!factorize(&(&s * &t), &e).unwrap().complete);
        assert_eq!(is_squarefree(&(&s * &t), &e).unwrap(), TriState::True);
        assert_eq!(is_squarefree(&(&s * &s), &e).unwrap(), TriState::False);
    }

    #[test]
    fn perfect_powers() {
        assert_eq!(
            perfect_power(&BigUint::from(3u32).pow(10)),
            Some((BigUint::from(3u32), 10))
        );
        assert_eq!(perfect_power(&BigUint::from(12u32)), None);
    }
}
