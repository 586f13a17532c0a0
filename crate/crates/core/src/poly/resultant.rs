//! Resultants by the subresultant PRS, polynomial discriminants, and the
//! closed form for trinomial discriminants.

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Zero};

use super::IntPolynomial;
use crate::error::{Error, Result};

/// `Res(f, g)` computed with the subresultant pseudo-remainder sequence.
pub fn resultant(f: &IntPolynomial, g: &IntPolynomial) -> Result<BigInt> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let ca = f.content();
    let cb = g.content();
    let mut a = f.div_exact(&ca)?;
    let mut b = g.div_exact(&cb)?;
    let da = a.degree().unwrap();
    let db = b.degree().unwrap();
    let t = num_traits::pow(ca, db) * num_traits::pow(cb, da);
    let mut sign = BigInt::one();
    if da < db {
        std::mem::swap(&mut a, &mut b);
        if da % 2 == 1 && db % 2 == 1 {
            sign = -sign;
        }
    }
    let mut gg = BigInt::one();
    let mut h = BigInt::one();
    while b.degree().unwrap() > 0 {
        let deg_a = a.degree().unwrap();
        let deg_b = b.degree().unwrap();
        let delta = deg_a - deg_b;
        if deg_a % 2 == 1 && deg_b % 2 == 1 {
            sign = -sign;
        }
        let r = a.pseudo_rem(&b);
        if r.is_zero() {
            return Ok(BigInt::zero());
        }
        let divisor = &gg * num_traits::pow(h.clone(), delta);
        a = b;
        b = r.div_exact(&divisor)?;
        gg = a.leading().unwrap().clone();
        // h <- g^delta / h^(delta - 1)
        h = if delta == 0 {
            h
        } else {
            let num = num_traits::pow(gg.clone(), delta);
            let den = num_traits::pow(h, delta - 1);
            num.div_floor(&den)
        };
    }
    let deg_a = a.degree().unwrap();
    let lb = b.leading().unwrap().clone();
    let h = if deg_a == 0 {
        h
    } else {
        num_traits::pow(lb, deg_a).div_floor(&num_traits::pow(h, deg_a - 1))
    };
    Ok(sign * t * h)
}

/// `(-1)^(n(n-1)/2) Res(f, f')` for monic `f` of degree `n >= 2`.
pub fn discriminant(f: &IntPolynomial) -> Result<BigInt> {
    let n = f.degree().ok_or(Error::ZeroPolynomial)?;
    if n < 2 {
        return Err(Error::DegreeTooSmall {
            required: 2,
            actual: n,
        });
    }
    if !f.is_monic() {
        return Err(Error::NotMonic);
    }
    let r = resultant(f, &f.derivative())?;
    Ok(if (n * (n - 1) / 2) % 2 == 1 { -r } else { r })
}

/// Discriminant of `x^n + a x^k + b` in closed form, `0 < k < n`.
pub fn trinomial_discriminant(n: i64, k: i64, a: &BigInt, b: &BigInt) -> Result<BigInt> {
    if k <= 0 || k >= n {
        return Err(Error::InvalidExponents { n, k });
    }
    let g = n.gcd(&k);
    let big_n = (n / g) as usize;
    let big_k = (k / g) as usize;
    let pw = |base: i64, e: usize| num_traits::pow(BigInt::from(base), e);
    let first = pw(n, big_n) * num_traits::pow(b.clone(), big_n - big_k);
    let second = pw(n - k, big_n - big_k) * pw(k, big_k) * num_traits::pow(a.clone(), big_n);
    let inner = if big_n % 2 == 0 {
        first - second
    } else {
        first + second
    };
    let value = num_traits::pow(b.clone(), (k - 1) as usize) * num_traits::pow(inner, g as usize);
    let sign_odd = ((n * n - n) / 2) % 2 == 1;
    Ok(if sign_odd { -value } else { value })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn ip(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    /// Sylvester determinant via fraction-free Bareiss elimination.
    fn sylvester_resultant(f: &IntPolynomial, g: &IntPolynomial) -> BigInt {
        let m = f.degree().unwrap();
        let n = g.degree().unwrap();
        let size = m + n;
        if size == 0 {
            return BigInt::one();
        }
        let mut mat = vec![vec![BigInt::zero(); size]; size];
        for row in 0..n {
            for (j, c) in f.coeffs().iter().rev().enumerate() {
                mat[row][row + j] = c.clone();
            }
        }
        for row in 0..m {
            for (j, c) in g.coeffs().iter().rev().enumerate() {
                mat[n + row][row + j] = c.clone();
            }
        }
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..size {
            if mat[k][k].is_zero() {
                let Some(swap) = (k + 1..size).find(|&r| !mat[r][k].is_zero()) else {
                    return BigInt::zero();
                };
                mat.swap(k, swap);
                sign = -sign;
            }
            for i in k + 1..size {
                for j in k + 1..size {
                    let v = &mat[i][j] * &mat[k][k] - &mat[i][k] * &mat[k][j];
                    mat[i][j] = v / &prev;
                }
                mat[i][k] = BigInt::zero();
            }
            prev = mat[k][k].clone();
        }
        sign * &mat[size - 1][size - 1]
    }

    #[test]
    fn resultant_examples() {
        assert_eq!(resultant(&ip(&[-1, 0, 1]), &ip(&[-2, 1])).unwrap(), big(3));
        assert_eq!(resultant(&ip(&[0, 1]), &ip(&[0, 1])).unwrap(), big(0));
        assert_eq!(resultant(&ip(&[1, 0, 1]), &ip(&[1, 0, 1])).unwrap(), big(0));
        assert!(resultant(&ip(&[]), &ip(&[1, 1])).is_err());
    }

    #[test]
    fn resultant_matches_sylvester() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..400 {
            let df = rng.gen_range(0..7);
            let dg = rng.gen_range(0..7);
            let mut fc: Vec<i64> = (0..=df).map(|_| rng.gen_range(-20..=20)).collect();
            let mut gc: Vec<i64> = (0..=dg).map(|_| rng.gen_range(-20..=20)).collect();
            if fc[df] == 0 {
                fc[df] = 3;
            }
            if gc[dg] == 0 {
                gc[dg] = -2;
            }
            let f = ip(&fc);
            let g = ip(&gc);
            assert_eq!(
                resultant(&f, &g).unwrap(),
                sylvester_resultant(&f, &g),
                "f = {f}, g = {g}"
            );
        }
    }

    #[test]
    fn discriminant_examples() {
        assert_eq!(discriminant(&ip(&[1, 0, 0, 0, 0, 1])).unwrap(), big(3125));
        assert_eq!(discriminant(&ip(&[-1, 0, 1])).unwrap(), big(4));
        assert_eq!(discriminant(&ip(&[0, -1, 0, 1])).unwrap(), big(4));
        assert!(discriminant(&ip(&[1, 1])).is_err());
        assert!(discriminant(&ip(&[1, 1, 2])).is_err());
    }

    #[test]
    fn trinomial_closed_forms() {
        for (a, b) in [(2, 2), (5, 31), (-7, 3), (0, 1)] {
            let (a, b) = (big(a), big(b));
            let expect = big(3125) * num_traits::pow(b.clone(), 4) + big(256) * num_traits::pow(a.clone(), 5);
            assert_eq!(trinomial_discriminant(5, 1, &a, &b).unwrap(), expect);
        }
        for (c, d) in [(1, 2), (5, 21), (-3, 7)] {
            let (c, d) = (big(c), big(d));
            let expect = num_traits::pow(d.clone(), 3)
                * (big(3125) * &d + big(256) * num_traits::pow(c.clone(), 5));
            assert_eq!(trinomial_discriminant(5, 4, &c, &d).unwrap(), expect);
            let expect6 = -num_traits::pow(d.clone(), 4)
                * (big(46656) * &d - big(3125) * num_traits::pow(c.clone(), 6));
            assert_eq!(trinomial_discriminant(6, 5, &c, &d).unwrap(), expect6);
        }
        assert!(trinomial_discriminant(5, 0, &big(1), &big(1)).is_err());
        assert!(trinomial_discriminant(5, 5, &big(1), &big(1)).is_err());
    }

    #[test]
    fn trinomial_formula_agrees_with_resultant() {
        let mut rng = ChaCha8Rng::seed_from_u64(2024);
        for _ in 0..300 {
            let n = rng.gen_range(2..=9i64);
            let k = rng.gen_range(1..n);
            let a = big(rng.gen_range(-50..=50));
            let b = big(rng.gen_range(-50..=50));
            let f = IntPolynomial::trinomial(n as usize, k as usize, &a, &b);
            assert_eq!(
                trinomial_discriminant(n, k, &a, &b).unwrap(),
                discriminant(&f).unwrap(),
                "n={n} k={k} a={a} b={b}"
            );
        }
    }
}
