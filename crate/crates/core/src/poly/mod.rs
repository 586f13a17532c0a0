//! Dense univariate polynomials over Z and Z/mZ.

pub mod finite_field;
pub mod int;
pub mod irreducible;
pub mod modp;
pub mod parse;
pub mod resultant;

pub use finite_field::{factor_mod_p, is_irreducible_mod_p, FactorListModP};
pub use int::IntPolynomial;
pub use irreducible::{irreducibility, is_irreducible_over_q, Irreducibility};
pub use modp::{reduce_mod, reduce_mod_u64, ModPolynomial};
pub use parse::parse_polynomial;
pub use resultant::{discriminant, resultant, trinomial_discriminant};
