//! Residue conditions for the four trinomial families.
//!
//! Whether `p` divides the index depends only on `f mod p^2`, so each
//! condition is a finite set of coefficient pairs modulo `p^2`. The sets are
//! computed here two ways (from the index engines, and for the modulus 25 from
//! roots lifted to Z/25Z) and can be compared with the published lists.

use std::collections::BTreeSet;
use std::sync::OnceLock;

use num_bigint::BigInt;

use super::theorems::Family;
use crate::arith::hensel_lift_roots;
use crate::dedekind::dedekind_p_divides_index;
use crate::error::{Error, Result};
use crate::poly::{discriminant, is_irreducible_over_q};
use crate::polygon::ore_p_divides_index;

/// Coefficient pairs `(x mod m, y mod m)`.
pub type ResidueSet = BTreeSet<(u64, u64)>;

/// Primes with a residue condition in some family.
pub const SPECIAL_PRIMES: [u64; 3] = [2, 3, 5];

/// The pairs mod `p^2` to which a family's congruence condition at `p` applies.
pub fn in_class(family: Family, p: u64, x: u64, y: u64) -> bool {
    let (dx, dy) = (x % p == 0, y % p == 0);
    match (family, p) {
        (Family::QuinticLinear, 2) => !dx && dy,
        (Family::QuinticLinear, 5) => dx && !dy,
        (Family::SexticLinear, 2) | (Family::SexticLinear, 3) => dx && !dy,
        (Family::SexticLinear, 5) => !dx && dy,
        (Family::QuinticNM1, 5) => dx && !dy,
        (Family::SexticNM1, 2) | (Family::SexticNM1, 3) => dx && !dy,
        _ => false,
    }
}

/// Whether the family carries a residue condition at `p`.
pub fn has_condition(family: Family, p: u64) -> bool {
    (0..p * p).any(|x| (0..p * p).any(|y| in_class(family, p, x, y)))
}

/// All pairs mod `p^2` for which `p` divides the index, by both engines.
///
/// Each residue pair is represented by an irreducible member of the family
/// with those residues; the engines must agree on it.
pub fn index_residues(family: Family, p: u64) -> Result<ResidueSet> {
    let m = p * p;
    let bp = BigInt::from(p);
    let mut out = ResidueSet::new();
    for x in 0..m {
        for y in 0..m {
            let f = representative(family, m, x, y)?;
            let ore = ore_p_divides_index(&f, &bp)?;
            let ded = dedekind_p_divides_index(&f, &bp)?;
            if ore != ded {
                return Err(Error::EngineDisagreement(format!("{f} at {p}")));
            }
            if ore {
                out.insert((x, y));
            }
        }
    }
    Ok(out)
}

pub(crate) fn representative(family: Family, m: u64, x: u64, y: u64) -> Result<crate::poly::IntPolynomial> {
    for s in 0..16u64 {
        for t in 1..16u64 {
            let a = BigInt::from(x + s * m);
            let b = BigInt::from(y + t * m);
            let f = family.polynomial(&a, &b);
            if discriminant(&f)? != BigInt::from(0) && is_irreducible_over_q(&f)? {
                return Ok(f);
            }
        }
    }
    Err(Error::Hypothesis(format!(
        "no irreducible representative for ({x}, {y}) mod {m}"
    )))
}

/// Pairs in the modulus-25 class for which the repeated factor of `f mod 5`
/// has a root that survives to Z/25Z.
pub fn hensel_residues_mod25(family: Family) -> Result<ResidueSet> {
    if !has_condition(family, 5) {
        return Err(Error::Hypothesis(format!("{} has no condition at 5", family.name())));
    }
    let five = BigInt::from(5);
    let mut out = ResidueSet::new();
    for x in 0..25u64 {
        for y in 0..25u64 {
            if !in_class(family, 5, x, y) {
                continue;
            }
            // the residue class mod 5 of the repeated root
            let r = match family {
                Family::QuinticLinear | Family::QuinticNM1 => (5 - y % 5) % 5,
                _ => (5 - x % 5) % 5,
            };
            let f = family.polynomial(&BigInt::from(x), &BigInt::from(y));
            let roots = hensel_lift_roots(&f, &five, 2)?;
            if roots.iter().any(|z| z % &five == BigInt::from(r)) {
                out.insert((x, y));
            }
        }
    }
    Ok(out)
}

/// The published index-divisibility sets, restricted to each class.
pub fn published_residues(family: Family, p: u64) -> Option<ResidueSet> {
    let m = p * p;
    let class = |x: u64, y: u64| in_class(family, p, x, y);
    let pick = |bad: &dyn Fn(u64, u64) -> bool| -> ResidueSet {
        (0..m)
            .flat_map(|x| (0..m).map(move |y| (x, y)))
            .filter(|&(x, y)| class(x, y) && bad(x, y))
            .collect()
    };
    let set = match (family, p) {
        (Family::QuinticLinear, 2) | (Family::SexticLinear, 2) | (Family::SexticNM1, 2) => {
            pick(&|x, y| (x + y) % 4 != 1)
        }
        (Family::QuinticLinear, 5) => {
            pick(&|a, b| [(1, 1), (7, 2), (18, 3), (24, 4)].iter().any(|&(c, k)| b == (c + k * a) % 25))
        }
        (Family::SexticLinear, 3) => {
            let listed = [(0, 1), (0, 8), (3, 2), (3, 5), (6, 2), (6, 5)];
            pick(&|a, b| listed.contains(&(a, b)))
        }
        (Family::SexticLinear, 5) => {
            // a = 1 - 4b, 7 + 3b, 18 + 3b, 24 + 4b
            pick(&|a, b| {
                [(1, 21), (7, 3), (18, 3), (24, 4)]
                    .iter()
                    .any(|&(c, k)| a == (c + k * b) % 25)
            })
        }
        (Family::QuinticNM1, 5) => pick(&|c, d| [1, 7, 18, 24].contains(&((c + d) % 25))),
        (Family::SexticNM1, 3) => {
            let allowed = [
                (3, 1),
                (3, 4),
                (3, 7),
                (6, 1),
                (6, 4),
                (6, 7),
                (0, 1),
                (0, 2),
                (0, 4),
                (0, 5),
            ];
            pick(&|c, d| !allowed.contains(&(c, d)))
        }
        _ => return None,
    };
    Some(set)
}

/// Engine-derived sets restricted to the class, cached per family and prime.
pub fn derived_residues(family: Family, p: u64) -> &'static ResidueSet {
    static TABLES: OnceLock<Vec<((Family, u64), ResidueSet)>> = OnceLock::new();
    let tables = TABLES.get_or_init(|| {
        let mut out = Vec::new();
        for family in Family::ALL {
            for p in SPECIAL_PRIMES {
                if !has_condition(family, p) {
                    continue;
                }
                let all = index_residues(family, p).expect("index engines on residue representatives");
                let set = all
                    .into_iter()
                    .filter(|&(x, y)| in_class(family, p, x, y))
                    .collect();
                out.push(((family, p), set));
            }
        }
        out
    });
    static EMPTY: ResidueSet = ResidueSet::new();
    tables
        .iter()
        .find(|(key, _)| *key == (family, p))
        .map_or(&EMPTY, |(_, set)| set)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(pairs: &[(u64, u64)]) -> ResidueSet {
        pairs.iter().copied().collect()
    }

    #[test]
    fn classes() {
        assert!(has_condition(Family::QuinticLinear, 2));
        assert!(!has_condition(Family::QuinticLinear, 3));
        assert!(!has_condition(Family::QuinticNM1, 2));
        assert!(!has_condition(Family::SexticNM1, 5));
    }

    #[test]
    fn quintic_lists_match_publication() {
        for (family, p) in [
            (Family::QuinticLinear, 2),
            (Family::QuinticLinear, 5),
            (Family::QuinticNM1, 5),
        ] {
            assert_eq!(
                derived_residues(family, p),
                &published_residues(family, p).unwrap(),
                "{family:?} at {p}"
            );
        }
        for family in [Family::QuinticLinear, Family::QuinticNM1] {
            assert_eq!(
                &hensel_residues_mod25(family).unwrap(),
                derived_residues(family, 5)
            );
        }
    }

    #[test]
    fn sextic_linear_lists() {
        for p in [2, 3] {
            assert_eq!(
                derived_residues(Family::SexticLinear, p),
                &published_residues(Family::SexticLinear, p).unwrap()
            );
        }
        let derived = derived_residues(Family::SexticLinear, 5);
        assert_eq!(&hensel_residues_mod25(Family::SexticLinear).unwrap(), derived);
        // the third published family reads a = 18 + 3b; roots mod 25 give 18 + 2b
        let fixed: ResidueSet = (0..25u64)
            .flat_map(|a| (0..25u64).map(move |b| (a, b)))
            .filter(|&(a, b)| in_class(Family::SexticLinear, 5, a, b))
            .filter(|&(a, b)| {
                [(1, 21), (7, 3), (18, 2), (24, 4)]
                    .iter()
                    .any(|&(c, k)| a == (c + k * b) % 25)
            })
            .collect();
        assert_eq!(derived, &fixed);
        let published = published_residues(Family::SexticLinear, 5).unwrap();
        assert_ne!(derived, &published);
        let only_published: ResidueSet = published.difference(derived).copied().collect();
        assert_eq!(only_published, set(&[(3, 20), (8, 5), (13, 15), (23, 10)]));
    }

    #[test]
    fn sextic_nm1_lists() {
        assert_eq!(
            derived_residues(Family::SexticNM1, 2),
            &published_residues(Family::SexticNM1, 2).unwrap()
        );
        let derived = derived_residues(Family::SexticNM1, 3);
        let allowed: ResidueSet = (0..9u64)
            .flat_map(|c| (0..9u64).map(move |d| (c, d)))
            .filter(|&(c, d)| in_class(Family::SexticNM1, 3, c, d) && !derived.contains(&(c, d)))
            .collect();
        assert_eq!(
            allowed,
            set(&[
                (0, 2),
                (0, 4),
                (0, 5),
                (0, 7),
                (3, 1),
                (3, 4),
                (3, 7),
                (3, 8),
                (6, 1),
                (6, 4),
                (6, 7),
                (6, 8)
            ])
        );
    }
}
