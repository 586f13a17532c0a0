use std::fmt;

use num_bigint::{BigInt, BigUint};

use super::IntPolynomial;
use crate::arith::modulo_u64;
use crate::arith::primes::mulmod_u64;
use crate::error::{Error, Result};

/// Dense polynomial over Z/mZ, residues in `[0, m)`, no trailing zeros.
///
/// The modulus is a machine word; every prime this crate ever reduces by
/// (discriminant primes of degree <= 10 trinomials, Zassenhaus primes)
/// fits comfortably.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ModPolynomial {
    modulus: u64,
    coeffs: Vec<u64>,
}

pub(crate) fn inv_mod(a: u64, m: u64) -> Option<u64> {
    let (mut r0, mut r1) = (m as i128, (a % m) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 != 1 {
        return None;
    }
    Some(t0.rem_euclid(m as i128) as u64)
}

#[inline]
fn add_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 + b as u128) % m as u128) as u64
}

#[inline]
fn sub_mod(a: u64, b: u64, m: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        m - (b - a)
    }
}

impl ModPolynomial {
    /// Builds a polynomial, reducing every coefficient modulo `modulus`.
    pub fn new(modulus: u64, coeffs: Vec<u64>) -> Self {
        assert!(modulus >= 2, "modulus must be at least 2");
        let mut coeffs: Vec<u64> = coeffs.into_iter().map(|c| c % modulus).collect();
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        ModPolynomial { modulus, coeffs }
    }

    pub fn zero(modulus: u64) -> Self {
        Self::new(modulus, Vec::new())
    }

    pub fn one(modulus: u64) -> Self {
        Self::new(modulus, vec![1])
    }

    pub fn x(modulus: u64) -> Self {
        Self::new(modulus, vec![0, 1])
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == 1
    }

    /// Lift with coefficients in `[0, m)`.
    pub fn lift(&self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Lift with coefficients in `(-m/2, m/2]`.
    pub fn lift_symmetric(&self) -> IntPolynomial {
        let half = self.modulus / 2;
        IntPolynomial::new(
            self.coeffs
                .iter()
                .map(|&c| {
                    if c > half {
                        BigInt::from(c) - BigInt::from(self.modulus)
                    } else {
                        BigInt::from(c)
                    }
                })
                .collect(),
        )
    }

    pub fn eval(&self, x: u64) -> u64 {
        let m = self.modulus;
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| add_mod(mulmod_u64(acc, x, m), c, m))
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let m = self.modulus;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Self::new(m, (0..n).map(|i| add_mod(self.coeff(i), rhs.coeff(i), m)).collect())
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let m = self.modulus;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Self::new(m, (0..n).map(|i| sub_mod(self.coeff(i), rhs.coeff(i), m)).collect())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let m = self.modulus;
        if self.is_zero() || rhs.is_zero() {
            return Self::zero(m);
        }
        let mut out = vec![0u64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = add_mod(out[i + j], mulmod_u64(a, b, m), m);
            }
        }
        Self::new(m, out)
    }

    pub fn scale(&self, c: u64) -> Self {
        let m = self.modulus;
        Self::new(m, self.coeffs.iter().map(|&a| mulmod_u64(a, c, m)).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.modulus);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        let m = self.modulus;
        Self::new(
            m,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| mulmod_u64(c, i as u64 % m, m))
                .collect(),
        )
    }

    /// Scales to leading coefficient 1; needs an invertible leading coefficient.
    pub fn monic(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let inv = inv_mod(self.leading(), self.modulus)
            .ok_or(Error::NonInvertibleLeading(self.modulus))?;
        Ok(self.scale(inv))
    }

    /// Euclidean division; the divisor's leading coefficient must be a unit.
    pub fn divrem(&self, g: &Self) -> Result<(Self, Self)> {
        let m = self.modulus;
        if g.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let inv = inv_mod(g.leading(), m).ok_or(Error::NonInvertibleLeading(m))?;
        let dg = g.coeffs.len() - 1;
        if self.coeffs.len() <= dg {
            return Ok((Self::zero(m), self.clone()));
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u64; rem.len() - dg];
        for i in (0..quot.len()).rev() {
            let c = mulmod_u64(rem[i + dg], inv, m);
            rem[i + dg] = 0;
            if c == 0 {
                continue;
            }
            for j in 0..dg {
                rem[i + j] = sub_mod(rem[i + j], mulmod_u64(c, g.coeffs[j], m), m);
            }
            quot[i] = c;
        }
        rem.truncate(dg);
        Ok((Self::new(m, quot), Self::new(m, rem)))
    }

    pub fn rem(&self, g: &Self) -> Result<Self> {
        Ok(self.divrem(g)?.1)
    }

    /// Monic gcd over a prime field (zero if both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b).expect("prime modulus");
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.monic().expect("prime modulus")
        }
    }

    /// `self^e mod g` for an arbitrary-size exponent.
    pub fn powmod(&self, e: &BigUint, g: &Self) -> Result<Self> {
        let mut base = self.rem(g)?;
        let mut acc = Self::one(self.modulus).rem(g)?;
        for i in 0..e.bits() {
            if e.bit(i) {
                acc = acc.mul(&base).rem(g)?;
            }
            if i + 1 < e.bits() {
                base = base.mul(&base).rem(g)?;
            }
        }
        Ok(acc)
    }

    pub fn powmod_u64(&self, e: u64, g: &Self) -> Result<Self> {
        self.powmod(&BigUint::from(e), g)
    }
}

impl fmt::Display for ModPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.lift(), self.modulus)
    }
}

/// Coefficientwise reduction into `[0, m)`.
pub fn reduce_mod(f: &IntPolynomial, m: &BigInt) -> Result<ModPolynomial> {
    let word = u64::try_from(m).map_err(|_| Error::InvalidModulus(m.to_string()))?;
    if word < 2 {
        return Err(Error::InvalidModulus(m.to_string()));
    }
    Ok(reduce_mod_u64(f, word))
}

pub fn reduce_mod_u64(f: &IntPolynomial, m: u64) -> ModPolynomial {
    ModPolynomial::new(m, f.coeffs().iter().map(|c| modulo_u64(c, m)).collect())
}

impl From<&ModPolynomial> for IntPolynomial {
    fn from(p: &ModPolynomial) -> Self {
        p.lift()
    }
}
