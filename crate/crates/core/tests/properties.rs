use num_bigint::BigInt;
use proptest::prelude::*;

use monogen::arith::{hensel_lift_roots, Effort, TriState};
use monogen::monogenic::{certify_generator, theorem_check, Family, Outcome};
use monogen::poly::{discriminant, trinomial_discriminant, IntPolynomial};

fn big(n: i64) -> BigInt {
    BigInt::from(n)
}

fn family() -> impl Strategy<Value = Family> {
    prop::sample::select(Family::ALL.to_vec())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    // Wider coefficients than the acceptance grid.
    #[test]
    fn criteria_match_certification(f in family(), x in -20_000i64..=20_000, y in -20_000i64..=20_000) {
        let effort = Effort::default();
        let Ok(check) = theorem_check(f, &big(x), &big(y), &effort) else { return Ok(()) };
        prop_assume!(check.applies);
        let v = certify_generator(&f.polynomial(&big(x), &big(y)), &effort).unwrap();
        match v.outcome {
            Outcome::Generator => prop_assert_eq!(check.monogenic, TriState::True),
            Outcome::NotGenerator => prop_assert_eq!(check.monogenic, TriState::False),
            Outcome::Unknown => {}
        }
    }

    #[test]
    fn verdicts_are_consistent(coeffs in prop::collection::vec(-40i64..=40, 2..=7)) {
        let mut c = coeffs;
        c.push(1);
        let f = IntPolynomial::from_i64s(&c);
        let Ok(v) = certify_generator(&f, &Effort::default()) else { return Ok(()) };
        prop_assert!(v.engines_agree());
        for t in &v.tested_primes {
            prop_assert!((&v.discriminant % (&t.p * &t.p)) == big(0));
        }
        if v.outcome == Outcome::Generator {
            prop_assert!(v.witness().is_none());
        }
        if v.outcome == Outcome::NotGenerator {
            prop_assert!(v.witness().is_some());
        }
    }

    #[test]
    fn trinomial_discriminants(n in 2usize..=12, k in 1usize..12, a in -10_000i64..=10_000, b in -10_000i64..=10_000) {
        prop_assume!(k < n);
        let f = IntPolynomial::trinomial(n, k, &big(a), &big(b));
        prop_assert_eq!(
            trinomial_discriminant(n as i64, k as i64, &big(a), &big(b)).unwrap(),
            discriminant(&f).unwrap()
        );
    }

    #[test]
    fn lifted_roots_are_roots(coeffs in prop::collection::vec(-30i64..=30, 1..=5), p in prop::sample::select(vec![2i64, 3, 5, 7]), k in 1u32..=4) {
        let mut c = coeffs;
        c.push(1);
        let f = IntPolynomial::from_i64s(&c);
        let pk = num_traits::pow(big(p), k as usize);
        let roots = hensel_lift_roots(&f, &big(p), k).unwrap();
        let scanned: Vec<BigInt> = (0..num_traits::ToPrimitive::to_i64(&pk).unwrap())
            .map(big)
            .filter(|z| (f.eval(z) % &pk) == big(0))
            .collect();
        prop_assert_eq!(roots, scanned);
    }
}
