use thiserror::Error;

/// Errors raised across the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("valuation of zero undefined")]
    ValuationOfZero,
    #[error("{0} is not prime")]
    NotPrime(String),
    #[error("cannot factor zero")]
    FactorZero,
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("divisor must be monic")]
    NotMonic,
    #[error("zero polynomial not allowed here")]
    ZeroPolynomial,
    #[error("degree {actual} is below the required minimum {required}")]
    DegreeTooSmall { required: usize, actual: usize },
    #[error("invalid modulus {0}")]
    InvalidModulus(String),
    #[error("polynomial vanishes modulo {0}")]
    VanishesModP(u64),
    #[error("invalid trinomial exponents n={n}, k={k}")]
    InvalidExponents { n: i64, k: i64 },
    #[error("phi-power divides f exactly")]
    PhiPowerDivides,
    #[error("not squarefree as a polynomial")]
    ZeroDiscriminant,
    #[error("degenerate family member")]
    DegenerateFamily,
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("division by {0} not exact")]
    InexactDivision(String),
    #[error("index engines disagree: {0}")]
    EngineDisagreement(String),
    #[error("leading coefficient is not invertible modulo {0}")]
    NonInvertibleLeading(u64),
}

pub type Result<T> = std::result::Result<T, Error>;
