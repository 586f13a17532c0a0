//! The `monogen` command line.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::arith::{Effort, TriState};
use crate::density::{
    bound_linear_family, bound_nminus1_family, empirical_survey, heuristic_independence_bounds,
    heuristic_linear_bound, Denominator, DensityValue, SurveyFamily, SurveySpec, CSV_HEADER,
};
use crate::error::Error;
use crate::monogenic::crosscheck::{cross_check, random_monic_irreducible, worked_corpus};
use crate::monogenic::{certify_generator, theorem_check, MonogenicityVerdict};
use crate::poly::{parse_polynomial, IntPolynomial};

pub const EXIT_USAGE: i32 = 64;

#[derive(Parser, Debug)]
#[command(name = "monogen", version, about = "Power integral bases for trinomial number fields")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide whether a root of one polynomial generates the ring of integers.
    Check(CheckArgs),
    /// Count generators over a coefficient range and print a CSV row.
    Survey(SurveyArgs),
    /// Print density lower bounds.
    Density(DensityArgs),
    /// Compare the polygon and Dedekind engines on random polynomials.
    Xcheck(XcheckArgs),
}

#[derive(Args, Debug)]
struct CheckArgs {
    /// Polynomial text such as "x^5 + 2x + 2".
    #[arg(long, conflicts_with_all = ["family", "coeffs"], required_unless_present = "family")]
    poly: Option<String>,
    /// Family name (quintic-linear, sextic-linear, quintic-nm1, sextic-nm1, quintic-bb, sextic-bb, nm1-cd).
    #[arg(long, requires = "coeffs")]
    family: Option<String>,
    /// Family coefficients, comma separated.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    coeffs: Option<Vec<i64>>,
    /// Degree of the nm1-cd family.
    #[arg(long)]
    degree: Option<usize>,
    /// Pollard rho iteration budget.
    #[arg(long)]
    effort: Option<u64>,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct SurveyArgs {
    #[arg(long)]
    family: String,
    /// The c of nm1-cd, or the first parameter of a two-parameter family.
    #[arg(long, allow_hyphen_values = true)]
    fixed: Option<i64>,
    /// Degree of the nm1-cd family.
    #[arg(long)]
    degree: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    min: i64,
    #[arg(long, allow_hyphen_values = true)]
    max: i64,
    #[arg(long, allow_hyphen_values = true, requires = "max2")]
    min2: Option<i64>,
    #[arg(long, allow_hyphen_values = true, requires = "min2")]
    max2: Option<i64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Output path, or "-" for stdout.
    #[arg(long, default_value = "-")]
    out: String,
    /// Take percentages among irreducible members instead of all members.
    #[arg(long)]
    irreducible_denominator: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum DensityFamily {
    /// x^n + bx + b
    LinearBb,
    /// x^n + cx^(n-1) + cd
    Nm1,
}

#[derive(Args, Debug)]
struct DensityArgs {
    #[arg(long, value_enum)]
    family: DensityFamily,
    #[arg(short = 'n')]
    n: u64,
    #[arg(long, allow_hyphen_values = true)]
    c: Option<i64>,
    /// Also print the bounds from the independence heuristic.
    #[arg(long)]
    heuristic: bool,
}

#[derive(Args, Debug)]
struct XcheckArgs {
    #[arg(long, default_value_t = 1000)]
    count: usize,
    #[arg(long, default_value_t = 6)]
    degree_max: usize,
    #[arg(long, default_value_t = 30)]
    coeff_max: i64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Also run the fixed corpus of family case representatives.
    #[arg(long)]
    corpus: bool,
}

/// Parse `args` (including the program name) and run; returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let result = match cli.command {
        Command::Check(a) => run_check(a, out),
        Command::Survey(a) => run_survey(a, out),
        Command::Density(a) => run_density(a, out),
        Command::Xcheck(a) => run_xcheck(a, out),
    };
    match result {
        Ok(code) => code,
        Err(Failure { code, message }) => {
            let _ = writeln!(err, "error: {message}");
            code
        }
    }
}

struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure {
            code: 1,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

fn family_member(
    name: &str,
    coeffs: &[i64],
    degree: Option<usize>,
) -> Result<(IntPolynomial, crate::monogenic::Family, BigInt, BigInt), Failure> {
    let want = |n: usize| {
        if coeffs.len() == n {
            Ok(())
        } else {
            Err(usage(format!("{name} takes {n} coefficient(s), got {}", coeffs.len())))
        }
    };
    let (family, x, y) = match SurveyFamily::from_name(name, coeffs.first().copied(), degree)? {
        SurveyFamily::Theorem(f) => {
            want(2)?;
            (f, BigInt::from(coeffs[0]), BigInt::from(coeffs[1]))
        }
        SurveyFamily::QuinticBB | SurveyFamily::SexticBB => {
            want(1)?;
            let f = if name == "quintic-bb" {
                crate::monogenic::Family::QuinticLinear
            } else {
                crate::monogenic::Family::SexticLinear
            };
            (f, BigInt::from(coeffs[0]), BigInt::from(coeffs[0]))
        }
        SurveyFamily::Nm1Cd { degree, c } => {
            want(2)?;
            let f = if degree == 5 {
                crate::monogenic::Family::QuinticNM1
            } else {
                crate::monogenic::Family::SexticNM1
            };
            (f, BigInt::from(c), BigInt::from(c) * BigInt::from(coeffs[1]))
        }
    };
    Ok((family.polynomial(&x, &y), family, x, y))
}

fn write_verdict(v: &MonogenicityVerdict, out: &mut dyn Write) -> io::Result<()> {
    writeln!(out, "polynomial: {}", v.polynomial)?;
    writeln!(out, "irreducible: {}", v.irreducible)?;
    writeln!(out, "discriminant: {}", v.discriminant)?;
    for t in &v.tested_primes {
        writeln!(
            out,
            "p={}: divides index: {}; engines agree: {}",
            t.p, t.divides_index, t.agreement
        )?;
    }
    if !v.unknown_cofactor.eq(&BigInt::from(1)) {
        writeln!(out, "unfactored cofactor: {}", v.unknown_cofactor)?;
    }
    writeln!(out, "outcome: {:?}", v.outcome)
}

fn run_check(a: CheckArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let effort = match a.effort {
        Some(n) => Effort::new(n, Effort::default().seed),
        None => Effort::default(),
    };
    let (f, member) = match (&a.poly, &a.family) {
        (Some(text), _) => (parse_polynomial(text)?, None),
        (None, Some(name)) => {
            let (f, family, x, y) = family_member(name, a.coeffs.as_deref().unwrap_or(&[]), a.degree)?;
            (f, Some((family, x, y)))
        }
        (None, None) => return Err(usage("one of --poly or --family is required")),
    };
    let verdict = match certify_generator(&f, &effort) {
        Err(Error::ZeroDiscriminant) => {
            return Err(Failure {
                code: 2,
                message: format!("{f} has zero discriminant"),
            })
        }
        other => other?,
    };
    if a.json {
        writeln!(out, "{}", verdict.to_json())?;
    } else {
        write_verdict(&verdict, out)?;
        if let Some((family, x, y)) = member {
            match theorem_check(family, &x, &y, &effort) {
                Ok(check) => {
                    let verdict = match check.monogenic {
                        TriState::True => "generator",
                        TriState::False => "not a generator",
                        TriState::Unknown => "not applicable",
                    };
                    write!(out, "criterion ({}): {verdict}", family.name())?;
                    match check.failing_condition {
                        Some(why) => writeln!(out, " ({why})")?,
                        None => writeln!(out)?,
                    }
                }
                Err(e) => writeln!(out, "criterion ({}): {e}", family.name())?,
            }
        }
    }
    Ok(verdict.outcome.exit_code())
}

fn run_survey(a: SurveyArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let family = SurveyFamily::from_name(&a.family, a.fixed, a.degree)?;
    if a.min > a.max {
        return Err(usage(format!("empty range {}..{}", a.min, a.max)));
    }
    let mut spec = SurveySpec::new(family, a.min..=a.max);
    if let (Some(lo), Some(hi)) = (a.min2, a.max2) {
        if !family.two_parameter() {
            return Err(usage(format!("{} has one parameter", a.family)));
        }
        if lo > hi {
            return Err(usage(format!("empty range {lo}..{hi}")));
        }
        spec.range2 = Some(lo..=hi);
    }
    if family.two_parameter() {
        spec.fixed = a.fixed;
    }
    spec.seed = a.seed;
    spec.jobs = a.jobs;
    if a.irreducible_denominator {
        spec.denominator = Denominator::Irreducible;
    }
    let row = empirical_survey(&spec)?;
    let text = format!("{CSV_HEADER}\n{}\n", row.to_csv_line());
    if a.out == "-" {
        out.write_all(text.as_bytes())?;
    } else {
        File::create(&a.out)?.write_all(text.as_bytes())?;
    }
    Ok(0)
}

fn write_density(label: &str, v: &DensityValue, out: &mut dyn Write) -> io::Result<()> {
    writeln!(out, "{label}: {:.6}", v.approx)?;
    writeln!(out, "{label} = {v}")
}

fn run_density(a: DensityArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let c = a.c.map(BigInt::from);
    match a.family {
        DensityFamily::LinearBb => {
            write_density("bound", &bound_linear_family(a.n)?, out)?;
            if a.heuristic {
                write_density("B1", &heuristic_linear_bound(a.n)?, out)?;
            }
        }
        DensityFamily::Nm1 => {
            let c = c.ok_or_else(|| usage("nm1 needs --c"))?;
            write_density("bound", &bound_nminus1_family(a.n, &c)?, out)?;
            if a.heuristic {
                let (b1, b2) = heuristic_independence_bounds(a.n, Some(&c))?;
                write_density("B1", &b1, out)?;
                write_density("B2", &b2, out)?;
            }
        }
    }
    Ok(0)
}

fn run_xcheck(a: XcheckArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    if a.degree_max < 2 {
        return Err(usage("--degree-max must be at least 2"));
    }
    if a.coeff_max < 1 {
        return Err(usage("--coeff-max must be positive"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
    let mut polys = (0..a.count)
        .map(|_| random_monic_irreducible(&mut rng, 2..=a.degree_max, a.coeff_max))
        .collect::<crate::Result<Vec<_>>>()?;
    if a.corpus {
        polys.extend(worked_corpus()?);
    }
    let effort = Effort::new(Effort::default().rho_iterations, a.seed);
    let report = cross_check(&polys, &effort)?;
    for d in &report.disagreements {
        writeln!(
            out,
            "DISAGREE {} at p={}: polygon={} dedekind={}",
            d.polynomial, d.p, d.ore, d.dedekind
        )?;
    }
    writeln!(
        out,
        "polynomials: {}, prime tests: {}, incomplete factorizations: {}, disagreements: {}",
        report.polynomials,
        report.prime_tests,
        report.incomplete,
        report.disagreements.len()
    )?;
    Ok(if report.disagreements.is_empty() { 0 } else { 1 })
}
