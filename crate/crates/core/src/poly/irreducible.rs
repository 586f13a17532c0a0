//! Irreducibility over Q for monic integer polynomials.
//!
//! Cheap exits come first (linear, zero constant term, Eisenstein, integer
//! roots, factor-degree sieve over several primes). Anything left goes to
//! Zassenhaus: factor modulo a prime that keeps `f` square-free, Hensel-lift
//! past twice the Mignotte bound, and try subset products as true divisors.

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::finite_field::factor_mod_p;
use super::{reduce_mod_u64, IntPolynomial, ModPolynomial};
use crate::arith::primes::small_primes;
use crate::arith::{factorize, Effort};
use crate::error::{Error, Result};

/// How many primes that keep `f` square-free are examined.
pub const PRIME_SEARCH: usize = 25;

/// Above this magnitude of the constant term, integer-root search is skipped.
const ROOT_SEARCH_LIMIT: u64 = 1_000_000_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Irreducibility {
    Irreducible,
    /// `factor * cofactor == f` with both of positive degree.
    Reducible {
        factor: IntPolynomial,
        cofactor: IntPolynomial,
    },
}

impl Irreducibility {
    pub fn is_irreducible(&self) -> bool {
        matches!(self, Irreducibility::Irreducible)
    }
}

pub fn is_irreducible_over_q(f: &IntPolynomial) -> Result<bool> {
    Ok(irreducibility(f)?.is_irreducible())
}

/// Decide irreducibility of a monic `f` over Q, with a witness when reducible.
pub fn irreducibility(f: &IntPolynomial) -> Result<Irreducibility> {
    let n = f.degree().ok_or(Error::ZeroPolynomial)?;
    if n == 0 {
        return Err(Error::DegreeTooSmall {
            required: 1,
            actual: 0,
        });
    }
    if !f.is_monic() {
        return Err(Error::NotMonic);
    }
    if n == 1 {
        return Ok(Irreducibility::Irreducible);
    }
    let a0 = f.coeff(0);
    if a0.is_zero() {
        return Ok(split_off(f, IntPolynomial::x()));
    }
    if is_eisenstein_somewhere(f) {
        return Ok(Irreducibility::Irreducible);
    }
    if let Some(r) = integer_root(f) {
        return Ok(split_off(f, IntPolynomial::new(vec![-r, BigInt::one()])));
    }

    // Degree sieve over square-free reductions.
    let mut candidates: Vec<(u64, Vec<ModPolynomial>)> = Vec::new();
    let mut possible = vec![true; n + 1];
    possible[0] = false;
    possible[n] = false;
    for &p in small_primes() {
        let p = p as u64;
        let fp = reduce_mod_u64(f, p);
        if !fp.gcd(&fp.derivative()).is_one() {
            continue;
        }
        let fl = factor_mod_p(&fp, p)?;
        let degrees: Vec<usize> = fl
            .factors
            .iter()
            .map(|(g, _)| g.degree().unwrap())
            .collect();
        let sums = subset_sums(&degrees, n);
        for d in 1..n {
            possible[d] &= sums[d];
        }
        if !possible.iter().any(|&b| b) {
            return Ok(Irreducibility::Irreducible);
        }
        candidates.push((p, fl.factors.into_iter().map(|(g, _)| g).collect()));
        if candidates.len() >= PRIME_SEARCH {
            break;
        }
    }
    if candidates.is_empty() {
        // no square-free reduction at all: f has a repeated factor
        return Ok(repeated_factor_witness(f));
    }
    let (p, factors) = candidates
        .into_iter()
        .min_by_key(|(p, fs)| (fs.len(), *p))
        .unwrap();
    zassenhaus(f, p, &factors, &possible)
}

fn split_off(f: &IntPolynomial, factor: IntPolynomial) -> Irreducibility {
    let (cofactor, r) = f.divrem(&factor).expect("monic factor");
    debug_assert!(r.is_zero());
    Irreducibility::Reducible { factor, cofactor }
}

fn subset_sums(degrees: &[usize], n: usize) -> Vec<bool> {
    let mut reach = vec![false; n + 1];
    reach[0] = true;
    for &d in degrees {
        for s in (d..=n).rev() {
            if reach[s - d] {
                reach[s] = true;
            }
        }
    }
    reach
}

/// Eisenstein at some prime dividing every non-leading coefficient.
pub fn is_eisenstein_somewhere(f: &IntPolynomial) -> bool {
    let n = f.degree().unwrap_or(0);
    let g = f.coeffs()[..n]
        .iter()
        .fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if g <= BigInt::one() {
        return false;
    }
    let a0 = f.coeff(0);
    let fac = match factorize(&g, &Effort::new(20_000, 1)) {
        Ok(fac) => fac,
        Err(_) => return false,
    };
    let found = fac.primes().any(|p| !(&a0 % (p * p)).is_zero());
    found
}

/// Eisenstein at the given prime.
pub fn is_eisenstein_at(f: &IntPolynomial, p: &BigInt) -> bool {
    let n = match f.degree() {
        Some(n) if n >= 1 => n,
        _ => return false,
    };
    let a0 = f.coeff(0);
    f.is_monic()
        && f.coeffs()[..n].iter().all(|c| (c % p).is_zero())
        && !(&a0 % (p * p)).is_zero()
}

fn integer_root(f: &IntPolynomial) -> Option<BigInt> {
    let a0 = f.coeff(0);
    let mag = a0.abs().to_u64()?;
    if mag > ROOT_SEARCH_LIMIT {
        return None;
    }
    let fac = factorize(&a0, &Effort::new(50_000, 7)).ok()?;
    if !fac.complete {
        return None;
    }
    let mut divisors = vec![BigInt::one()];
    for (p, e) in &fac.factors {
        let mut next = Vec::with_capacity(divisors.len() * (*e as usize + 1));
        for d in &divisors {
            let mut pk = d.clone();
            next.push(pk.clone());
            for _ in 0..*e {
                pk *= p;
                next.push(pk.clone());
            }
        }
        divisors = next;
    }
    divisors.sort();
    for d in divisors {
        for r in [d.clone(), -d] {
            if f.eval(&r).is_zero() {
                return Some(r);
            }
        }
    }
    None
}

fn repeated_factor_witness(f: &IntPolynomial) -> Irreducibility {
    // primitive PRS gcd of f and f'
    let mut a = f.clone();
    let mut b = f.derivative();
    let cb = b.content();
    b = b.div_exact(&cb).unwrap();
    while b.degree().unwrap_or(0) > 0 {
        let r = a.pseudo_rem(&b);
        if r.is_zero() {
            break;
        }
        let c = r.content();
        a = b;
        b = r.div_exact(&c).unwrap();
    }
    let mut g = if b.degree().unwrap_or(0) > 0 { b } else { a };
    let lc = g.leading().unwrap().clone();
    if lc.is_negative() {
        g = -&g;
    }
    split_off(f, g)
}

/// Extended Euclid over F_p: `(s, t)` with `s*a + t*b = 1`, for coprime inputs.
pub fn xgcd_mod_p(a: &ModPolynomial, b: &ModPolynomial) -> Option<(ModPolynomial, ModPolynomial)> {
    let p = a.modulus();
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (ModPolynomial::one(p), ModPolynomial::zero(p));
    let (mut t0, mut t1) = (ModPolynomial::zero(p), ModPolynomial::one(p));
    while !r1.is_zero() {
        let (q, r) = r0.divrem(&r1).ok()?;
        let s = s0.sub(&q.mul(&s1));
        let t = t0.sub(&q.mul(&t1));
        (r0, r1) = (r1, r);
        (s0, s1) = (s1, s);
        (t0, t1) = (t1, t);
    }
    if r0.degree() != Some(0) {
        return None;
    }
    let inv = super::modp::inv_mod(r0.leading(), p)?;
    Some((s0.scale(inv), t0.scale(inv)))
}

fn reduce_coeffs(f: &IntPolynomial, m: &BigInt) -> IntPolynomial {
    IntPolynomial::new(f.coeffs().iter().map(|c| c.mod_floor(m)).collect())
}

/// Lift `target ≡ g0 * h0 (mod p)` to `target ≡ G * H (mod p^k)`, `G, H` monic.
pub fn hensel_lift_pair(
    target: &IntPolynomial,
    g0: &ModPolynomial,
    h0: &ModPolynomial,
    k: u32,
) -> Result<(IntPolynomial, IntPolynomial)> {
    let p = g0.modulus();
    let (s, t) = xgcd_mod_p(g0, h0).ok_or(Error::InvalidModulus(p.to_string()))?;
    let bp = BigInt::from(p);
    let mut g = g0.lift();
    let mut h = h0.lift();
    let mut pj = bp.clone();
    for _ in 1..k {
        let err = target - &(&g * &h);
        let e = reduce_mod_u64(&err.div_exact(&pj)?, p);
        let (q, sigma) = s.mul(&e).divrem(h0)?;
        let tau = t.mul(&e).add(&q.mul(g0));
        g = &g + &tau.lift().scale(&pj);
        h = &h + &sigma.lift().scale(&pj);
        pj *= &bp;
        g = reduce_coeffs(&g, &pj);
        h = reduce_coeffs(&h, &pj);
    }
    Ok((g, h))
}

/// Lift a full factorization of `f mod p` into distinct monic factors to precision `p^k`.
pub fn hensel_lift_factors(
    f: &IntPolynomial,
    factors: &[ModPolynomial],
    k: u32,
) -> Result<Vec<IntPolynomial>> {
    let p = factors[0].modulus();
    let mut out = Vec::with_capacity(factors.len());
    let mut current = f.clone();
    for i in 0..factors.len() - 1 {
        let rest = factors[i + 1..]
            .iter()
            .fold(ModPolynomial::one(p), |acc, g| acc.mul(g));
        let (g, h) = hensel_lift_pair(&current, &factors[i], &rest, k)?;
        out.push(g);
        current = h;
    }
    out.push(current);
    Ok(out)
}

fn mignotte_bound(f: &IntPolynomial) -> BigInt {
    let n = f.degree().unwrap();
    let norm_sq: BigInt = f.coeffs().iter().map(|c| c * c).sum();
    (norm_sq.sqrt() + 1) << n
}

fn symmetric(f: &IntPolynomial, m: &BigInt) -> IntPolynomial {
    let half = m >> 1;
    IntPolynomial::new(
        f.coeffs()
            .iter()
            .map(|c| {
                let r = c.mod_floor(m);
                if r > half {
                    r - m
                } else {
                    r
                }
            })
            .collect(),
    )
}

fn zassenhaus(
    f: &IntPolynomial,
    p: u64,
    factors: &[ModPolynomial],
    possible: &[bool],
) -> Result<Irreducibility> {
    let r = factors.len();
    if r == 1 {
        return Ok(Irreducibility::Irreducible);
    }
    let bound = mignotte_bound(f) * 2;
    let bp = BigInt::from(p);
    let mut k = 1u32;
    let mut pk = bp.clone();
    while pk <= bound {
        pk *= &bp;
        k += 1;
    }
    let lifted = hensel_lift_factors(f, factors, k)?;
    let degrees: Vec<usize> = lifted.iter().map(|g| g.degree().unwrap()).collect();
    let a0 = f.coeff(0);
    for size in 1..=r / 2 {
        for subset in Combinations::new(r, size) {
            let deg: usize = subset.iter().map(|&i| degrees[i]).sum();
            if !possible[deg] {
                continue;
            }
            // constant-term screen before the full product
            let c0 = subset
                .iter()
                .fold(BigInt::one(), |acc, &i| (acc * lifted[i].coeff(0)).mod_floor(&pk));
            let c0 = if c0 > (&pk >> 1) { c0 - &pk } else { c0 };
            if c0.is_zero() || !(&a0 % &c0).is_zero() {
                continue;
            }
            let prod = subset
                .iter()
                .fold(IntPolynomial::one(), |acc, &i| reduce_coeffs(&(&acc * &lifted[i]), &pk));
            let candidate = symmetric(&prod, &pk);
            let (q, rem) = f.divrem(&candidate)?;
            if rem.is_zero() {
                return Ok(Irreducibility::Reducible {
                    factor: candidate,
                    cofactor: q,
                });
            }
        }
    }
    Ok(Irreducibility::Irreducible)
}

/// Lexicographic `size`-subsets of `0..n`.
struct Combinations {
    n: usize,
    idx: Vec<usize>,
    done: bool,
}

impl Combinations {
    fn new(n: usize, size: usize) -> Self {
        Combinations {
            n,
            idx: (0..size).collect(),
            done: size > n,
        }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.idx.clone();
        let k = self.idx.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.idx[i] < self.n - k + i {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn ip(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    fn assert_witness(f: &IntPolynomial) {
        match irreducibility(f).unwrap() {
            Irreducibility::Reducible { factor, cofactor } => {
                assert!(factor.degree().unwrap() >= 1 && cofactor.degree().unwrap() >= 1);
                assert_eq!(&factor * &cofactor, *f);
            }
            Irreducibility::Irreducible => panic!("{f} reported irreducible"),
        }
    }

    #[test]
    fn examples() {
        assert!(is_irreducible_over_q(&ip(&[2, 0, 0, 0, 0, 1])).unwrap());
        assert!(!is_irreducible_over_q(&ip(&[1, 1, 0, 0, 0, 1])).unwrap());
        assert!(!is_irreducible_over_q(&ip(&[1, 0, 0, 0, 1, 1])).unwrap());
        assert_eq!(
            &ip(&[1, 1, 1]) * &ip(&[1, 0, -1, 1]),
            ip(&[1, 1, 0, 0, 0, 1])
        );
        assert_eq!(&ip(&[1, 1, 1]) * &ip(&[1, -1, 0, 1]), ip(&[1, 0, 0, 0, 1, 1]));
        assert_witness(&ip(&[1, 1, 0, 0, 0, 1]));
        assert_witness(&ip(&[1, 0, 0, 0, 1, 1]));
        assert!(is_irreducible_over_q(&ip(&[0, 0])).is_err());
        assert!(is_irreducible_over_q(&ip(&[5])).is_err());
    }

    #[test]
    fn hard_cases_for_the_sieve() {
        // x^4 + 1 splits modulo every prime but is irreducible
        assert!(is_irreducible_over_q(&ip(&[1, 0, 0, 0, 1])).unwrap());
        // (x^2 + 1)(x^2 + 2) has no linear factor
        assert_witness(&ip(&[2, 0, 3, 0, 1]));
        // (x^2 - 2)(x^2 - 3)(x^2 - 6) vs x^4 - 10x^2 + 1 (irreducible, splits mod all p)
        assert!(is_irreducible_over_q(&ip(&[1, 0, -10, 0, 1])).unwrap());
        assert_witness(&(&(&ip(&[-2, 0, 1]) * &ip(&[-3, 0, 1])) * &ip(&[-6, 0, 1])));
        // repeated factor
        assert_witness(&ip(&[1, 0, 2, 0, 1]));
        assert_witness(&(&ip(&[1, 1, 0, 1]) * &ip(&[1, 1, 0, 1])));
    }

    #[test]
    fn products_of_random_factors_are_caught() {
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        for _ in 0..200 {
            let d1 = rng.gen_range(1..5);
            let d2 = rng.gen_range(1..5);
            let mut a: Vec<i64> = (0..d1).map(|_| rng.gen_range(-30..=30)).collect();
            a.push(1);
            let mut b: Vec<i64> = (0..d2).map(|_| rng.gen_range(-30..=30)).collect();
            b.push(1);
            assert_witness(&(&ip(&a) * &ip(&b)));
        }
    }

    #[test]
    fn eisenstein_helpers() {
        assert!(is_eisenstein_at(&ip(&[2, 2, 0, 0, 0, 1]), &BigInt::from(2)));
        assert!(!is_eisenstein_at(&ip(&[4, 2, 0, 0, 0, 1]), &BigInt::from(2)));
        assert!(is_eisenstein_somewhere(&ip(&[6, 12, 0, 1])));
        assert!(!is_eisenstein_somewhere(&ip(&[4, 2, 0, 1])));
    }

    #[test]
    fn hensel_pair_lifts() {
        // x^2 - 2 = (x - 3)(x + 3) mod 7
        let f = ip(&[-2, 0, 1]);
        let g0 = ModPolynomial::new(7, vec![4, 1]);
        let h0 = ModPolynomial::new(7, vec![3, 1]);
        let (g, h) = hensel_lift_pair(&f, &g0, &h0, 5).unwrap();
        let m = BigInt::from(7).pow(5);
        let diff = &f - &(&g * &h);
        assert!(diff.coeffs().iter().all(|c| (c % &m).is_zero()));
    }

    #[test]
    fn combinations_enumerate_all() {
        assert_eq!(Combinations::new(4, 2).count(), 6);
        assert_eq!(Combinations::new(5, 0).count(), 1);
        assert_eq!(Combinations::new(3, 3).collect::<Vec<_>>(), vec![vec![0, 1, 2]]);
    }
}
