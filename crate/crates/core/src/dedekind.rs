//! Dedekind's criterion for `p | [O_K : Z[θ]]`.
//!
//! With `f = prod φ_i^e_i (mod p)` and lifts `φ_i` to Z[x], set
//! `d = (f - prod φ_i^e_i) / p`. Then `p` divides the index iff some
//! `φ_i` with `e_i >= 2` divides `d mod p`.

use num_bigint::BigInt;

use crate::arith::is_prime;
use crate::error::{Error, Result};
use crate::poly::{factor_mod_p, reduce_mod, IntPolynomial, ModPolynomial};

/// Which form of the criterion to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DedekindForm {
    /// Some repeated factor divides `d mod p`.
    #[default]
    Divisibility,
    /// `gcd(φ_i^(e_i - 1), d mod p) != 1` for some `i`.
    LiteralGcd,
}

/// How residues in F_p are lifted to integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Lift {
    /// Coefficients in `[0, p)`.
    #[default]
    Canonical,
    /// Coefficients in `(-p/2, p/2]`.
    Symmetric,
}

/// Factors of `f mod p` together with `d mod p`.
#[derive(Debug, Clone)]
pub struct DedekindData {
    pub factors: Vec<(ModPolynomial, u32)>,
    pub d: IntPolynomial,
    pub d_mod_p: ModPolynomial,
}

pub fn dedekind_data(f: &IntPolynomial, p: &BigInt, lift: Lift) -> Result<DedekindData> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p.to_string()));
    }
    if !f.is_monic() {
        return Err(Error::NotMonic);
    }
    let fp = reduce_mod(f, p)?;
    let fl = factor_mod_p(&fp, fp.modulus())?;
    let product = fl.factors.iter().fold(IntPolynomial::one(), |acc, (g, e)| {
        let g = match lift {
            Lift::Canonical => g.lift(),
            Lift::Symmetric => g.lift_symmetric(),
        };
        &acc * &g.pow(*e)
    });
    let d = (f - &product)
        .div_exact(p)
        .map_err(|_| Error::InexactDivision(p.to_string()))?;
    let d_mod_p = reduce_mod(&d, p)?;
    Ok(DedekindData {
        factors: fl.factors,
        d,
        d_mod_p,
    })
}

/// Whether `p` divides the index of a root of the monic irreducible `f`.
pub fn dedekind_p_divides_index(f: &IntPolynomial, p: &BigInt) -> Result<bool> {
    dedekind_p_divides_index_with(f, p, DedekindForm::Divisibility, Lift::Canonical)
}

pub fn dedekind_p_divides_index_with(
    f: &IntPolynomial,
    p: &BigInt,
    form: DedekindForm,
    lift: Lift,
) -> Result<bool> {
    let data = dedekind_data(f, p, lift)?;
    let dbar = &data.d_mod_p;
    for (phi, e) in &data.factors {
        let hit = match form {
            DedekindForm::Divisibility => *e >= 2 && dbar.rem(phi)?.is_zero(),
            DedekindForm::LiteralGcd => !phi.pow(e - 1).gcd(dbar).is_one(),
        };
        if hit {
            return Ok(true);
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{discriminant, is_irreducible_over_q};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn ip(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn examples() {
        assert!(dedekind_p_divides_index(&ip(&[3, 0, 1]), &big(2)).unwrap());
        assert!(!dedekind_p_divides_index(&ip(&[2, 0, 0, 0, 0, 1]), &big(2)).unwrap());
        assert!(dedekind_p_divides_index(&ip(&[4, 2, 0, 0, 0, 1]), &big(2)).unwrap());
        let data = dedekind_data(&ip(&[3, 0, 1]), &big(2), Lift::Canonical).unwrap();
        assert_eq!(data.d, ip(&[1, -1]));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            dedekind_p_divides_index(&ip(&[3, 0, 1]), &big(9)),
            Err(Error::NotPrime(_))
        ));
        assert_eq!(
            dedekind_p_divides_index(&ip(&[3, 0, 2]), &big(3)),
            Err(Error::NotMonic)
        );
    }

    #[test]
    fn forms_and_lifts_agree() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let mut checked = 0;
        while checked < 300 {
            let n = rng.gen_range(2..=7);
            let mut c: Vec<i64> = (0..n).map(|_| rng.gen_range(-40..=40)).collect();
            c.push(1);
            let f = ip(&c);
            if !is_irreducible_over_q(&f).unwrap() {
                continue;
            }
            for p in [2, 3, 5, 7] {
                let p = big(p);
                let base = dedekind_p_divides_index(&f, &p).unwrap();
                for form in [DedekindForm::Divisibility, DedekindForm::LiteralGcd] {
                    for lift in [Lift::Canonical, Lift::Symmetric] {
                        assert_eq!(
                            dedekind_p_divides_index_with(&f, &p, form, lift).unwrap(),
                            base,
                            "{f} at {p}"
                        );
                    }
                }
                let disc = discriminant(&f).unwrap();
                if (&disc % (&p * &p)) != big(0) {
                    assert!(!base, "{f}: {p}^2 does not divide disc");
                }
            }
            checked += 1;
        }
    }
}
