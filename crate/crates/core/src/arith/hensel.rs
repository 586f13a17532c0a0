//! Roots of integer polynomials modulo prime powers.

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{ToPrimitive, Zero};

use super::primes::is_prime;
use crate::error::{Error, Result};
use crate::poly::{factor_mod_p, reduce_mod_u64, IntPolynomial};

/// Below this, roots mod p are found by scanning every residue.
const SCAN_LIMIT: u64 = 100_000;

/// All residues `r` in `[0, p^k)` with `f(r) = 0 (mod p^k)`, sorted.
///
/// Simple roots are lifted by Newton's step; roots where `f'` vanishes mod p
/// are branched over all `p` lifts at each level.
pub fn hensel_lift_roots(f: &IntPolynomial, p: &BigInt, k: u32) -> Result<Vec<BigInt>> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p.to_string()));
    }
    if k == 0 {
        return Err(Error::InvalidModulus(format!("{p}^0")));
    }
    let df = f.derivative();
    let mut roots = roots_mod_p(f, p)?;
    let mut pj = p.clone();
    for _ in 1..k {
        let next_mod = &pj * p;
        let mut next = Vec::new();
        for r in &roots {
            let d = df.eval(r).mod_floor(p);
            if d.is_zero() {
                let mut cand = r.clone();
                for _ in 0..p.to_u64().unwrap_or(u64::MAX) {
                    if f.eval(&cand).mod_floor(&next_mod).is_zero() {
                        next.push(cand.clone());
                    }
                    cand += &pj;
                }
            } else {
                // f(r + t p^j) = f(r) + t p^j f'(r)  (mod p^(j+1))
                let q = f.eval(r).div_floor(&pj).mod_floor(p);
                let inv = d.modpow(&(p - 2u32), p);
                let t = (-(q * inv)).mod_floor(p);
                next.push(r + t * &pj);
            }
        }
        roots = next;
        pj = next_mod;
    }
    roots.sort();
    Ok(roots)
}

fn roots_mod_p(f: &IntPolynomial, p: &BigInt) -> Result<Vec<BigInt>> {
    let pw = p.to_u64().ok_or_else(|| Error::InvalidModulus(p.to_string()))?;
    let fp = reduce_mod_u64(f, pw);
    if pw <= SCAN_LIMIT {
        return Ok((0..pw).filter(|&r| fp.eval(r) == 0).map(BigInt::from).collect());
    }
    if fp.is_zero() {
        return Err(Error::VanishesModP(pw));
    }
    if fp.degree() == Some(0) {
        return Ok(Vec::new());
    }
    let fl = factor_mod_p(&fp, pw)?;
    let mut out: Vec<BigInt> = fl
        .factors
        .iter()
        .filter(|(g, _)| g.degree() == Some(1))
        .map(|(g, _)| BigInt::from((pw - g.coeff(0)) % pw))
        .collect();
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ip(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn scan(f: &IntPolynomial, m: i64) -> Vec<BigInt> {
        let m = big(m);
        let mut out = Vec::new();
        let mut r = BigInt::zero();
        while r < m {
            if f.eval(&r).mod_floor(&m).is_zero() {
                out.push(r.clone());
            }
            r += 1;
        }
        out
    }

    #[test]
    fn examples() {
        let roots = hensel_lift_roots(&ip(&[0, 1, 0, 0, 0, -1]), &big(5), 2).unwrap();
        for r in [1, 7, 18, 24] {
            assert!(roots.contains(&big(r)));
        }
        assert_eq!(hensel_lift_roots(&ip(&[-3, 1]), &big(5), 2).unwrap(), vec![big(3)]);
        assert_eq!(
            hensel_lift_roots(&ip(&[-1, 0, 1]), &big(3), 2).unwrap(),
            vec![big(1), big(8)]
        );
        assert!(hensel_lift_roots(&ip(&[1, 0, 1]), &big(3), 3).unwrap().is_empty());
        assert!(hensel_lift_roots(&ip(&[1, 1]), &big(6), 1).is_err());
    }

    #[test]
    fn branching_on_repeated_roots() {
        // x^2 mod 9 has roots 0, 3, 6
        assert_eq!(
            hensel_lift_roots(&ip(&[0, 0, 1]), &big(3), 2).unwrap(),
            vec![big(0), big(3), big(6)]
        );
        assert_eq!(hensel_lift_roots(&ip(&[0, 0, 1]), &big(2), 4).unwrap(), scan(&ip(&[0, 0, 1]), 16));
    }

    #[test]
    fn large_prime_uses_factorization() {
        let p = big(1_000_003);
        let f = &ip(&[-2, 1]) * &ip(&[-5, 1]);
        assert_eq!(hensel_lift_roots(&f, &p, 1).unwrap(), vec![big(2), big(5)]);
        let lifted = hensel_lift_roots(&f, &p, 2).unwrap();
        assert_eq!(lifted, vec![big(2), big(5)]);
    }

    proptest! {
        #[test]
        fn matches_exhaustive_scan(coeffs in proptest::collection::vec(-40i64..40, 1..6),
                                   pi in 0usize..5, k in 1u32..5) {
            let p = [2i64, 3, 5, 7, 11][pi];
            let m = p.pow(k);
            prop_assume!(m <= 10_000);
            let f = ip(&coeffs);
            let roots = hensel_lift_roots(&f, &big(p), k).unwrap();
            prop_assert_eq!(&roots, &scan(&f, m));
            for r in &roots {
                let rp = r.mod_floor(&big(p));
                prop_assert!(f.eval(&rp).mod_floor(&big(p)).is_zero());
            }
        }
    }
}
