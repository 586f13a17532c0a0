//! Counting generators over coefficient ranges.

use std::fmt;
use std::ops::RangeInclusive;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::arith::{Effort, TriState};
use crate::error::{Error, Result};
use crate::monogenic::{certify_generator, theorem_check, Family, Outcome};
use crate::poly::IntPolynomial;

/// A one- or two-parameter family of trinomials.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SurveyFamily {
    /// One of the four two-parameter families.
    Theorem(Family),
    /// `x^5 + bx + b`
    QuinticBB,
    /// `x^6 + bx + b`
    SexticBB,
    /// `x^n + cx^(n-1) + cd` for fixed `c`, varying `d`.
    Nm1Cd { degree: usize, c: i64 },
}

impl SurveyFamily {
    /// Parse a family name. `fixed` is the `c` of `nm1-cd`.
    pub fn from_name(name: &str, fixed: Option<i64>, degree: Option<usize>) -> Result<SurveyFamily> {
        let family = match name {
            "quintic-bb" => SurveyFamily::QuinticBB,
            "sextic-bb" => SurveyFamily::SexticBB,
            "nm1-cd" => {
                let c = fixed.ok_or_else(|| Error::Hypothesis("nm1-cd needs a fixed c".into()))?;
                let degree = degree.unwrap_or(5);
                if degree != 5 && degree != 6 {
                    return Err(Error::Hypothesis(format!("nm1-cd degree {degree} is not 5 or 6")));
                }
                SurveyFamily::Nm1Cd { degree, c }
            }
            _ => SurveyFamily::Theorem(
                Family::from_name(name)
                    .ok_or_else(|| Error::Hypothesis(format!("unknown family {name}")))?,
            ),
        };
        Ok(family)
    }

    pub fn two_parameter(self) -> bool {
        matches!(self, SurveyFamily::Theorem(_))
    }

    /// The trinomial at `(x, y)` and the criterion that governs it.
    fn member(self, x: i64, y: i64) -> (Family, BigInt, BigInt) {
        let (x, y) = (BigInt::from(x), BigInt::from(y));
        match self {
            SurveyFamily::Theorem(family) => (family, x, y),
            SurveyFamily::QuinticBB => (Family::QuinticLinear, y.clone(), y),
            SurveyFamily::SexticBB => (Family::SexticLinear, y.clone(), y),
            SurveyFamily::Nm1Cd { degree, c } => {
                let family = if degree == 5 { Family::QuinticNM1 } else { Family::SexticNM1 };
                let c = BigInt::from(c);
                let cd = &c * &y;
                (family, c, cd)
            }
        }
    }
}

impl fmt::Display for SurveyFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SurveyFamily::Theorem(family) => write!(f, "{}", family.name()),
            SurveyFamily::QuinticBB => write!(f, "quintic-bb"),
            SurveyFamily::SexticBB => write!(f, "sextic-bb"),
            SurveyFamily::Nm1Cd { degree, c } => write!(f, "nm1-cd/n={degree}/c={c}"),
        }
    }
}

/// Which count the percentages are taken over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Denominator {
    #[default]
    All,
    Irreducible,
}

#[derive(Debug, Clone)]
pub struct SurveySpec {
    pub family: SurveyFamily,
    pub range: RangeInclusive<i64>,
    /// Second parameter range of a two-parameter family; defaults to `range`.
    pub range2: Option<RangeInclusive<i64>>,
    /// Pins the first parameter of a two-parameter family.
    pub fixed: Option<i64>,
    pub seed: u64,
    pub jobs: usize,
    pub denominator: Denominator,
}

impl SurveySpec {
    pub fn new(family: SurveyFamily, range: RangeInclusive<i64>) -> Self {
        SurveySpec {
            family,
            range,
            range2: None,
            fixed: None,
            seed: 0,
            jobs: 1,
            denominator: Denominator::All,
        }
    }

    // (first parameter range, second parameter range)
    fn grid(&self) -> (RangeInclusive<i64>, RangeInclusive<i64>) {
        if !self.family.two_parameter() {
            return (0..=0, self.range.clone());
        }
        match self.fixed {
            Some(x) => (x..=x, self.range2.clone().unwrap_or_else(|| self.range.clone())),
            None => (
                self.range.clone(),
                self.range2.clone().unwrap_or_else(|| self.range.clone()),
            ),
        }
    }

    fn family_label(&self) -> String {
        match (self.family, self.fixed) {
            (SurveyFamily::Theorem(_), Some(x)) => format!("{}/fixed={x}", self.family),
            _ => self.family.to_string(),
        }
    }

    fn range_label(&self) -> String {
        let r = |r: &RangeInclusive<i64>| format!("{}..{}", r.start(), r.end());
        let (first, second) = self.grid();
        if self.family.two_parameter() && self.fixed.is_none() {
            format!("{}x{}", r(&first), r(&second))
        } else {
            r(&second)
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
struct Counts {
    total: u64,
    irreducible: u64,
    generator: u64,
    hypothesis_ok: u64,
    unknown: u64,
    disagreements: u64,
    theorem_mismatches: u64,
}

impl std::ops::Add for Counts {
    type Output = Counts;
    fn add(self, o: Counts) -> Counts {
        Counts {
            total: self.total + o.total,
            irreducible: self.irreducible + o.irreducible,
            generator: self.generator + o.generator,
            hypothesis_ok: self.hypothesis_ok + o.hypothesis_ok,
            unknown: self.unknown + o.unknown,
            disagreements: self.disagreements + o.disagreements,
            theorem_mismatches: self.theorem_mismatches + o.theorem_mismatches,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurveyRow {
    pub family: String,
    pub param_range: String,
    pub total: u64,
    pub irreducible: u64,
    pub theta_generator: u64,
    pub hypothesis_ok: u64,
    /// Irreducible members whose verdict stayed Unknown.
    pub unknown: u64,
    /// Members on which the polygon and Dedekind engines disagreed at some prime.
    pub engine_disagreements: u64,
    /// Members where the criterion applied but its verdict differed from certification.
    pub theorem_mismatches: u64,
    pub denominator: Denominator,
}

pub const CSV_HEADER: &str =
    "family,param_range,total,irreducible,theta_generator,pct_generator,hypothesis_ok,pct_hypothesis";

/// `100 · count / denom` rounded half up to two decimals.
pub fn percent(count: u64, denom: u64) -> String {
    if denom == 0 {
        return "0.00".to_string();
    }
    let hundredths = (count as u128 * 20_000 + denom as u128) / (2 * denom as u128);
    format!("{}.{:02}", hundredths / 100, hundredths % 100)
}

impl SurveyRow {
    fn denom(&self) -> u64 {
        match self.denominator {
            Denominator::All => self.total,
            Denominator::Irreducible => self.irreducible,
        }
    }

    pub fn pct_generator(&self) -> String {
        percent(self.theta_generator, self.denom())
    }

    pub fn pct_hypothesis(&self) -> String {
        percent(self.hypothesis_ok, self.denom())
    }

    pub fn to_csv_line(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{}",
            self.family,
            self.param_range,
            self.total,
            self.irreducible,
            self.theta_generator,
            self.pct_generator(),
            self.hypothesis_ok,
            self.pct_hypothesis()
        )
    }
}

fn mix(seed: u64, i: u64) -> u64 {
    let mut z = seed ^ i.wrapping_mul(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

fn evaluate(family: Family, x: &BigInt, y: &BigInt, effort: &Effort) -> Result<Counts> {
    let f: IntPolynomial = family.polynomial(x, y);
    let mut c = Counts {
        total: 1,
        ..Counts::default()
    };
    let verdict = match certify_generator(&f, effort) {
        Ok(v) => v,
        Err(Error::ZeroDiscriminant) => return Ok(c),
        Err(e) => return Err(e),
    };
    if !verdict.irreducible {
        return Ok(c);
    }
    c.irreducible = 1;
    c.generator = (verdict.outcome == Outcome::Generator) as u64;
    c.unknown = (verdict.outcome == Outcome::Unknown) as u64;
    c.disagreements = (!verdict.engines_agree()) as u64;
    let check = match theorem_check(family, x, y, effort) {
        Ok(check) => check,
        Err(Error::DegenerateFamily) => return Ok(c),
        Err(e) => return Err(e),
    };
    if check.applies {
        c.hypothesis_ok = (check.monogenic == TriState::True) as u64;
        let decided = match verdict.outcome {
            Outcome::Generator => Some(true),
            Outcome::NotGenerator => Some(false),
            Outcome::Unknown => None,
        };
        if let (Some(v), TriState::True | TriState::False) = (decided, check.monogenic) {
            c.theorem_mismatches = (v != (check.monogenic == TriState::True)) as u64;
        }
    }
    Ok(c)
}

/// Certify every member of the family over the range and tally the results.
///
/// The counts do not depend on `jobs`.
pub fn empirical_survey(spec: &SurveySpec) -> Result<SurveyRow> {
    let (first, second) = spec.grid();
    if first.is_empty() || second.is_empty() {
        return Err(Error::Hypothesis("empty parameter range".into()));
    }
    let width = (*second.end() - *second.start() + 1) as u64;
    let height = (*first.end() - *first.start() + 1) as u64;
    let total = width * height;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(spec.jobs.max(1))
        .build()
        .map_err(|e| Error::Hypothesis(e.to_string()))?;
    let counts = pool.install(|| {
        (0..total)
            .into_par_iter()
            .map(|i| {
                let x = first.start() + (i / width) as i64;
                let y = second.start() + (i % width) as i64;
                let (family, a, b) = spec.family.member(x, y);
                let effort = Effort::new(Effort::default().rho_iterations, mix(spec.seed, i));
                evaluate(family, &a, &b, &effort)
            })
            .try_reduce(Counts::default, |a, b| Ok(a + b))
    })?;
    Ok(SurveyRow {
        family: spec.family_label(),
        param_range: spec.range_label(),
        total: counts.total,
        irreducible: counts.irreducible,
        theta_generator: counts.generator,
        hypothesis_ok: counts.hypothesis_ok,
        unknown: counts.unknown,
        engine_disagreements: counts.disagreements,
        theorem_mismatches: counts.theorem_mismatches,
        denominator: spec.denominator,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rounding() {
        assert_eq!(percent(1, 3), "33.33");
        assert_eq!(percent(2, 3), "66.67");
        assert_eq!(percent(1, 8), "12.50");
        assert_eq!(percent(1, 80000), "0.00");
        assert_eq!(percent(1, 40000), "0.00");
        assert_eq!(percent(1, 20000), "0.01");
        assert_eq!(percent(5, 5), "100.00");
        assert_eq!(percent(0, 0), "0.00");
    }

    #[test]
    fn single_member() {
        let row = empirical_survey(&SurveySpec::new(SurveyFamily::QuinticBB, 2..=2)).unwrap();
        assert_eq!((row.total, row.theta_generator), (1, 1));
        assert_eq!(row.pct_generator(), "100.00");
    }

    #[test]
    fn c4_family_has_no_generators() {
        let family = SurveyFamily::from_name("nm1-cd", Some(4), None).unwrap();
        let row = empirical_survey(&SurveySpec::new(family, -200..=200)).unwrap();
        assert_eq!(row.theta_generator, 0);
        assert_eq!(row.family, "nm1-cd/n=5/c=4");
        assert_eq!(row.param_range, "-200..200");
    }

    #[test]
    fn jobs_do_not_change_the_row() {
        let mut spec = SurveySpec::new(SurveyFamily::Theorem(Family::SexticNM1), -12..=12);
        spec.range2 = Some(-20..=20);
        let one = empirical_survey(&spec).unwrap();
        spec.jobs = 4;
        let four = empirical_survey(&spec).unwrap();
        assert_eq!(one, four);
        assert_eq!(one.total, 25 * 41);
        assert_eq!(one.param_range, "-12..12x-20..20");
        assert_eq!(one.engine_disagreements, 0);
        assert_eq!(one.theorem_mismatches, 0);
        assert!(one.hypothesis_ok <= one.theta_generator + one.unknown);
    }

    #[test]
    fn fixed_first_parameter() {
        let mut spec = SurveySpec::new(SurveyFamily::Theorem(Family::QuinticNM1), -50..=50);
        spec.fixed = Some(4);
        let row = empirical_survey(&spec).unwrap();
        assert_eq!(row.total, 101);
        assert_eq!(row.family, "quintic-nm1/fixed=4");
        spec.denominator = Denominator::Irreducible;
        let by_irr = empirical_survey(&spec).unwrap();
        assert_eq!(by_irr.pct_generator(), percent(row.theta_generator, row.irreducible));
    }

    #[test]
    fn empty_range_is_an_error() {
        #[allow(clippy::reversed_empty_ranges)]
        let spec = SurveySpec::new(SurveyFamily::QuinticBB, 3..=2);
        assert!(empirical_survey(&spec).is_err());
    }
}
