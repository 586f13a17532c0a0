//! Integer arithmetic: valuations, primality, factorization, square-free
//! tests and Hensel lifting of roots modulo prime powers.

pub mod factor;
pub mod hensel;
pub mod primes;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub use factor::{factorize, is_squarefree, Effort, Factorization};
pub use hensel::hensel_lift_roots;
pub use primes::{is_prime, is_prime_seeded};

/// Arbitrary-precision signed integer.
pub type Integer = BigInt;

/// Three-valued answer for questions that depend on a factorization.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
pub enum TriState {
    True,
    False,
    Unknown,
}

impl TriState {
    pub fn from_bool(b: bool) -> Self {
        if b {
            TriState::True
        } else {
            TriState::False
        }
    }

    /// `Some(bool)` when decided.
    pub fn decided(self) -> Option<bool> {
        match self {
            TriState::True => Some(true),
            TriState::False => Some(false),
            TriState::Unknown => None,
        }
    }
}

/// Largest `e` with `p^e | n`. `p` is assumed prime (any `p >= 2` works).
pub fn valuation(n: &BigInt, p: &BigInt) -> Result<u32> {
    if n.is_zero() {
        return Err(Error::ValuationOfZero);
    }
    if *p < BigInt::from(2) {
        return Err(Error::NotPrime(p.to_string()));
    }
    if let (Some(mut m), Some(q)) = (n.abs().to_u128(), p.to_u128()) {
        let mut e = 0;
        while m % q == 0 {
            m /= q;
            e += 1;
        }
        return Ok(e);
    }
    let mut m = n.abs();
    let mut e = 0;
    loop {
        let (quot, rem) = m.div_rem(p);
        if !rem.is_zero() {
            return Ok(e);
        }
        m = quot;
        e += 1;
    }
}

/// `v_p` on a possibly-zero integer, `None` standing for +infinity.
pub fn valuation_or_inf(n: &BigInt, p: &BigInt) -> Option<u32> {
    if n.is_zero() {
        None
    } else {
        valuation(n, p).ok()
    }
}

/// Nonnegative residue of `n` modulo `m > 0`.
pub fn modulo(n: &BigInt, m: &BigInt) -> BigInt {
    n.mod_floor(m)
}

/// `n mod m` as a machine word.
pub fn modulo_u64(n: &BigInt, m: u64) -> u64 {
    n.mod_floor(&BigInt::from(m)).to_u64().unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn valuation_examples() {
        let v = |n: i64, p: i64| valuation(&BigInt::from(n), &BigInt::from(p)).unwrap();
        assert_eq!(v(40, 2), 3);
        assert_eq!(v(3125, 5), 5);
        assert_eq!(v(7, 3), 0);
        assert_eq!(v(-40, 2), 3);
        assert_eq!(
            valuation(&BigInt::from(0), &BigInt::from(2)),
            Err(Error::ValuationOfZero)
        );
    }

    #[test]
    fn valuation_of_big_values() {
        let n = num_traits::pow(BigInt::from(3), 200) * 7;
        assert_eq!(valuation(&n, &BigInt::from(3)).unwrap(), 200);
    }

    proptest! {
        #[test]
        fn valuation_shifts_by_one(n in any::<i64>().prop_filter("nonzero", |n| *n != 0),
                                   pi in 0usize..6) {
            let p = BigInt::from([2, 3, 5, 7, 11, 13][pi]);
            let n = BigInt::from(n);
            prop_assert_eq!(
                valuation(&(&n * &p), &p).unwrap(),
                1 + valuation(&n, &p).unwrap()
            );
        }
    }
}
