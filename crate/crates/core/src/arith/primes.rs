//! Prime sieve and Miller–Rabin primality.
//!
//! Below 3 317 044 064 679 887 385 961 981 the test is deterministic using
//! the first thirteen primes as witnesses. Above that bound it falls back to
//! seeded random witnesses.

use std::sync::OnceLock;

use num_bigint::{BigInt, BigUint, RandBigInt, Sign};
use num_traits::{One, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Upper bound (exclusive) of the trial-division prime table.
pub const TRIAL_BOUND: u32 = 100_000;

/// Random Miller–Rabin rounds used above the deterministic range.
pub const RANDOM_ROUNDS: usize = 40;

const DEFAULT_SEED: u64 = 0x6d6f_6e6f_6765_6e21;

const WITNESSES: [u32; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];

fn deterministic_limit() -> &'static BigUint {
    static LIMIT: OnceLock<BigUint> = OnceLock::new();
    LIMIT.get_or_init(|| "3317044064679887385961981".parse().unwrap())
}

/// All primes below [`TRIAL_BOUND`], ascending.
pub fn small_primes() -> &'static [u32] {
    static TABLE: OnceLock<Vec<u32>> = OnceLock::new();
    TABLE.get_or_init(|| sieve(TRIAL_BOUND))
}

/// Sieve of Eratosthenes: primes strictly below `limit`.
pub fn sieve(limit: u32) -> Vec<u32> {
    let n = limit as usize;
    if n < 3 {
        return Vec::new();
    }
    let mut composite = vec![false; n];
    let mut out = Vec::new();
    for i in 2..n {
        if composite[i] {
            continue;
        }
        out.push(i as u32);
        let mut j = i * i;
        while j < n {
            composite[j] = true;
            j += i;
        }
    }
    out
}

#[inline]
pub(crate) fn mulmod_u64(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub(crate) fn powmod_u64(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod_u64(acc, base, m);
        }
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    acc
}

fn strong_probable_prime_u64(n: u64, a: u64) -> bool {
    let a = a % n;
    if a == 0 {
        return true;
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    let mut x = powmod_u64(a, d, n);
    if x == 1 || x == n - 1 {
        return true;
    }
    for _ in 1..s {
        x = mulmod_u64(x, x, n);
        if x == n - 1 {
            return true;
        }
    }
    false
}

/// Deterministic primality for machine words.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &WITNESSES {
        let p = p as u64;
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    if n < 41 * 41 {
        return true;
    }
    WITNESSES[..12]
        .iter()
        .all(|&a| strong_probable_prime_u64(n, a as u64))
}

fn strong_probable_prime_big(n: &BigUint, a: &BigUint) -> bool {
    let one = BigUint::one();
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    let mut x = a.modpow(&d, n);
    if x == one || x == n_minus_1 {
        return true;
    }
    for _ in 1..s {
        x = (&x * &x) % n;
        if x == n_minus_1 {
            return true;
        }
    }
    false
}

/// Primality test on non-negative magnitudes with an explicit seed for the
/// random rounds used beyond the deterministic range.
pub fn is_prime_biguint(n: &BigUint, seed: u64) -> bool {
    if let Some(small) = n.to_u64() {
        return is_prime_u64(small);
    }
    for &p in small_primes().iter().take(200) {
        if (n % p).is_zero() {
            return false;
        }
    }
    if !WITNESSES
        .iter()
        .all(|&a| strong_probable_prime_big(n, &BigUint::from(a)))
    {
        return false;
    }
    if n < deterministic_limit() {
        return true;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let two = BigUint::from(2u32);
    let upper = n - &two;
    (0..RANDOM_ROUNDS).all(|_| {
        let a = rng.gen_biguint_range(&two, &upper);
        strong_probable_prime_big(n, &a)
    })
}

/// Primality of an arbitrary integer; values `<= 1` are not prime.
pub fn is_prime(n: &BigInt) -> bool {
    is_prime_seeded(n, DEFAULT_SEED)
}

/// As [`is_prime`] with a caller-chosen seed for the probabilistic range.
pub fn is_prime_seeded(n: &BigInt, seed: u64) -> bool {
    match n.sign() {
        Sign::Plus => is_prime_biguint(n.magnitude(), seed),
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trial(n: u64) -> bool {
        if n < 2 {
            return false;
        }
        let mut d = 2;
        while d * d <= n {
            if n % d == 0 {
                return false;
            }
            d += 1;
        }
        true
    }

    #[test]
    fn spec_examples() {
        assert!(is_prime(&BigInt::from(97)));
        assert!(is_prime(&BigInt::from(3637)));
        assert!(!is_prime(&BigInt::from(3381)));
        assert!(!is_prime(&BigInt::from(1)));
        assert!(!is_prime(&BigInt::from(0)));
        assert!(!is_prime(&BigInt::from(-7)));
    }

    #[test]
    fn agrees_with_trial_division() {
        for n in 0..20_000u64 {
            assert_eq!(is_prime_u64(n), trial(n), "n = {n}");
        }
    }

    #[test]
    fn sieve_matches_word_test() {
        let table = small_primes();
        assert_eq!(table[0], 2);
        assert_eq!(table.len(), 9592);
        assert!(table.iter().all(|&p| is_prime_u64(p as u64)));
    }

    #[test]
    fn strong_pseudoprimes_rejected() {
        // 3215031751 fools bases 2,3,5,7; 3825123056546413051 fools bases up to 23.
        assert!(!is_prime_u64(3_215_031_751));
        assert!(!is_prime_u64(3_825_123_056_546_413_051));
        assert!(is_prime_u64(18_446_744_073_709_551_557));
    }

    #[test]
    fn large_values() {
        let m127: BigInt = (BigInt::one() << 127) - 1;
        assert!(is_prime(&m127));
        let composite: BigInt = &m127 * BigInt::from(1_000_003u64);
        assert!(!is_prime(&composite));
        let m89: BigInt = (BigInt::one() << 89) - 1;
        assert!(is_prime(&m89));
        assert!(!is_prime(&(&m89 * &m89)));
    }
}
