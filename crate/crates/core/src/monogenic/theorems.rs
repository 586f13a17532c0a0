//! Closed-form monogeneity criteria for `x^5 + ax + b`, `x^6 + ax + b`,
//! `x^5 + cx^4 + d` and `x^6 + cx^5 + d`.
//!
//! Each criterion holds under two hypotheses: the trinomial is irreducible
//! and the reduced discriminant factor `(X + Y) / gcd(X, Y)` is square-free.
//! The congruence conditions at 2, 3 and 5 use the residue sets computed in
//! [`super::congruences`].

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::Zero;

use super::congruences::derived_residues;
use crate::arith::{factorize, is_squarefree, modulo_u64, valuation, Effort, TriState};
use crate::error::{Error, Result};
use crate::poly::{is_irreducible_over_q, IntPolynomial};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// `x^5 + a x + b`
    QuinticLinear,
    /// `x^6 + a x + b`
    SexticLinear,
    /// `x^5 + c x^4 + d`
    QuinticNM1,
    /// `x^6 + c x^5 + d`
    SexticNM1,
}

impl Family {
    pub const ALL: [Family; 4] = [
        Family::QuinticLinear,
        Family::SexticLinear,
        Family::QuinticNM1,
        Family::SexticNM1,
    ];

    pub fn degree(self) -> usize {
        match self {
            Family::QuinticLinear | Family::QuinticNM1 => 5,
            Family::SexticLinear | Family::SexticNM1 => 6,
        }
    }

    /// Exponent of the middle term.
    pub fn middle(self) -> usize {
        match self {
            Family::QuinticLinear | Family::SexticLinear => 1,
            _ => self.degree() - 1,
        }
    }

    pub fn polynomial(self, x: &BigInt, y: &BigInt) -> IntPolynomial {
        IntPolynomial::trinomial(self.degree(), self.middle(), x, y)
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::QuinticLinear => "quintic-linear",
            Family::SexticLinear => "sextic-linear",
            Family::QuinticNM1 => "quintic-nm1",
            Family::SexticNM1 => "sextic-nm1",
        }
    }

    pub fn from_name(name: &str) -> Option<Family> {
        Family::ALL.into_iter().find(|f| f.name() == name)
    }

    // (X, Y) whose reduced sum is the square-free hypothesis
    fn hypothesis_terms(self, x: &BigInt, y: &BigInt) -> (BigInt, BigInt) {
        let pw = |b: i64, e: usize| num_traits::pow(BigInt::from(b), e);
        match self {
            Family::QuinticLinear => (pw(2, 8) * num_traits::pow(x.clone(), 5), pw(5, 5) * num_traits::pow(y.clone(), 4)),
            Family::SexticLinear => (pw(6, 6) * num_traits::pow(y.clone(), 5), -(pw(5, 5) * num_traits::pow(x.clone(), 6))),
            Family::QuinticNM1 => (pw(5, 5) * y, pw(2, 8) * num_traits::pow(x.clone(), 5)),
            Family::SexticNM1 => (pw(6, 6) * y, -(pw(5, 5) * num_traits::pow(x.clone(), 6))),
        }
    }
}

/// Outcome of a closed-form criterion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremCheck {
    /// Irreducible and the hypothesis quantity is square-free.
    pub applies: bool,
    /// Decided whenever `applies`; `Unknown` otherwise.
    pub monogenic: TriState,
    /// Why the criterion does not apply, or which condition fails.
    pub failing_condition: Option<String>,
}

impl TheoremCheck {
    fn not_applicable(reason: impl Into<String>) -> Self {
        TheoremCheck {
            applies: false,
            monogenic: TriState::Unknown,
            failing_condition: Some(reason.into()),
        }
    }

    fn decided(failing: Option<String>) -> Self {
        TheoremCheck {
            applies: true,
            monogenic: TriState::from_bool(failing.is_none()),
            failing_condition: failing,
        }
    }
}

/// `(X + Y) / gcd(X, Y)` for the family's discriminant terms.
pub fn hypothesis_quantity(family: Family, x: &BigInt, y: &BigInt) -> Result<BigInt> {
    let (big_x, big_y) = family.hypothesis_terms(x, y);
    let sum = &big_x + &big_y;
    if sum.is_zero() {
        return Err(Error::DegenerateFamily);
    }
    Ok(sum / big_x.gcd(&big_y))
}

pub fn theorem_quintic_linear(a: &BigInt, b: &BigInt) -> Result<TheoremCheck> {
    theorem_check(Family::QuinticLinear, a, b, &Effort::default())
}

pub fn theorem_sextic_linear(a: &BigInt, b: &BigInt) -> Result<TheoremCheck> {
    theorem_check(Family::SexticLinear, a, b, &Effort::default())
}

pub fn theorem_quintic_nm1(c: &BigInt, d: &BigInt) -> Result<TheoremCheck> {
    theorem_check(Family::QuinticNM1, c, d, &Effort::default())
}

pub fn theorem_sextic_nm1(c: &BigInt, d: &BigInt) -> Result<TheoremCheck> {
    theorem_check(Family::SexticNM1, c, d, &Effort::default())
}

/// Evaluate the family's criterion at `(x, y)`.
pub fn theorem_check(family: Family, x: &BigInt, y: &BigInt, effort: &Effort) -> Result<TheoremCheck> {
    let q = hypothesis_quantity(family, x, y)?;
    if !is_irreducible_over_q(&family.polynomial(x, y))? {
        return Ok(TheoremCheck::not_applicable("reducible"));
    }
    match is_squarefree(&q, effort)? {
        TriState::True => {}
        TriState::False => {
            return Ok(TheoremCheck::not_applicable(format!("{q} is not square-free")))
        }
        TriState::Unknown => {
            return Ok(TheoremCheck::not_applicable(format!("square-freeness of {q} undecided")))
        }
    }
    let failing = match family {
        Family::QuinticLinear | Family::SexticLinear => linear_conditions(family, x, y, effort)?,
        Family::QuinticNM1 | Family::SexticNM1 => nm1_conditions(family, x, y, effort)?,
    };
    match failing {
        Condition::Holds => Ok(TheoremCheck::decided(None)),
        Condition::Fails(why) => Ok(TheoremCheck::decided(Some(why))),
        Condition::Undecided(why) => Ok(TheoremCheck::not_applicable(why)),
    }
}

enum Condition {
    Holds,
    Fails(String),
    Undecided(String),
}

fn residue_condition(family: Family, p: u64, x: &BigInt, y: &BigInt) -> Condition {
    let m = p * p;
    let key = (modulo_u64(x, m), modulo_u64(y, m));
    if derived_residues(family, p).contains(&key) {
        Condition::Fails(format!("p={p}: residues {key:?} mod {m}"))
    } else {
        Condition::Holds
    }
}

// For every p | gcd: either p divides both coefficients and p^2 does not
// divide the constant term, or the residue condition at p holds.
fn linear_conditions(family: Family, a: &BigInt, b: &BigInt, effort: &Effort) -> Result<Condition> {
    let g = match family {
        Family::QuinticLinear => (a * BigInt::from(2)).gcd(&(b * BigInt::from(5))),
        _ => (b * BigInt::from(6)).gcd(&(a * BigInt::from(5))),
    };
    let fac = factorize(&g, effort)?;
    if !fac.complete {
        return Ok(Condition::Undecided(format!("could not factor {g}")));
    }
    for p in fac.primes() {
        let both = (a % p).is_zero() && (b % p).is_zero();
        if both {
            if valuation(b, p).map_or(true, |v| v >= 2) {
                return Ok(Condition::Fails(format!("p={p}: p^2 divides the constant term")));
            }
            continue;
        }
        let c = residue_condition(family, u64::try_from(p).unwrap(), a, b);
        if !matches!(c, Condition::Holds) {
            return Ok(c);
        }
    }
    Ok(Condition::Holds)
}

fn nm1_conditions(family: Family, c: &BigInt, d: &BigInt, effort: &Effort) -> Result<Condition> {
    match is_squarefree(d, effort)? {
        TriState::True => {}
        TriState::False => return Ok(Condition::Fails(format!("{d} is not square-free"))),
        TriState::Unknown => return Ok(Condition::Undecided(format!("square-freeness of {d} undecided"))),
    }
    let primes: &[u64] = match family {
        Family::QuinticNM1 => &[5],
        _ => &[2, 3],
    };
    for &p in primes {
        let bp = BigInt::from(p);
        if (c % &bp).is_zero() && !(d % &bp).is_zero() {
            let cond = residue_condition(family, p, c, d);
            if !matches!(cond, Condition::Holds) {
                return Ok(cond);
            }
        }
    }
    Ok(Condition::Holds)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monogenic::{certify_generator, Outcome};

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn hypothesis_examples() {
        let q = |f, x, y| hypothesis_quantity(f, &big(x), &big(y)).unwrap();
        assert_eq!(q(Family::QuinticLinear, 2, 2), big(3637));
        assert_eq!(q(Family::QuinticLinear, 5, 6), big(97));
        assert_eq!(q(Family::QuinticNM1, 1, 2), big(3253));
        assert_eq!(q(Family::QuinticNM1, 5, 21), big(277));
        assert_eq!(
            hypothesis_quantity(Family::QuinticLinear, &big(0), &big(0)),
            Err(Error::DegenerateFamily)
        );
        // x^5 - 5x + 4 has the double root 1
        assert_eq!(
            hypothesis_quantity(Family::QuinticLinear, &big(-5), &big(4)),
            Err(Error::DegenerateFamily)
        );
        // a single vanishing term leaves a unit
        assert_eq!(num_traits::Signed::abs(&q(Family::SexticLinear, 0, 2)), big(1));
    }

    #[test]
    fn quintic_linear_examples() {
        let t = theorem_quintic_linear(&big(2), &big(2)).unwrap();
        assert!(t.applies);
        assert_eq!(t.monogenic, TriState::True);

        let t = theorem_quintic_linear(&big(5), &big(31)).unwrap();
        assert_eq!(t.monogenic, TriState::False);
        assert!(t.failing_condition.is_some());

        let t = theorem_quintic_linear(&big(1), &big(1)).unwrap();
        assert!(!t.applies);
        assert_eq!(t.monogenic, TriState::Unknown);
    }

    #[test]
    fn nm1_examples() {
        let t = theorem_quintic_nm1(&big(1), &big(2)).unwrap();
        assert!(t.applies);
        assert_eq!(t.monogenic, TriState::True);
        let t = theorem_quintic_nm1(&big(5), &big(21)).unwrap();
        assert!(t.applies);
        assert_eq!(t.monogenic, TriState::False);
        let t = theorem_quintic_nm1(&big(1), &big(4)).unwrap();
        assert_eq!(t.monogenic, TriState::False);

        // d = 12 has a square factor
        let t = theorem_sextic_nm1(&big(1), &big(12)).unwrap();
        assert_ne!(t.monogenic, TriState::True);
    }

    #[test]
    fn sextic_conditions() {
        // (a, b) = (2, 3) mod 4 with b odd: condition at 2 holds
        for (a, b) in [(2, 3), (6, 7), (-2, 11)] {
            let t = theorem_sextic_linear(&big(a), &big(b)).unwrap();
            if t.applies {
                assert!(!t.failing_condition.unwrap_or_default().starts_with("p=2"));
            }
        }
        // (0, 1) mod 9 fails at 3
        let t = theorem_sextic_linear(&big(9), &big(10)).unwrap();
        if t.applies {
            assert_eq!(t.monogenic, TriState::False);
        }
        // x^6 + 2 is Eisenstein
        let t = theorem_sextic_linear(&big(0), &big(2)).unwrap();
        assert!(t.applies);
        // (c, d) = (3, 1) mod 9 with c, d chosen so 2 plays no role
        let t = theorem_sextic_nm1(&big(3), &big(1)).unwrap();
        if t.applies {
            assert!(!t.failing_condition.unwrap_or_default().starts_with("p=3"));
        }
    }

    #[test]
    fn closed_forms_agree_with_certification_on_a_grid() {
        let effort = Effort::default();
        for family in Family::ALL {
            for x in -25..=25i64 {
                for y in -25..=25i64 {
                    let (x, y) = (big(x), big(y));
                    let Ok(t) = theorem_check(family, &x, &y, &effort) else {
                        continue;
                    };
                    if !t.applies {
                        continue;
                    }
                    let v = certify_generator(&family.polynomial(&x, &y), &effort).unwrap();
                    assert_ne!(v.outcome, Outcome::Unknown);
                    assert_eq!(
                        t.monogenic == TriState::True,
                        v.outcome == Outcome::Generator,
                        "{:?} ({x}, {y}): {:?}",
                        family,
                        t.failing_condition
                    );
                }
            }
        }
    }
}
