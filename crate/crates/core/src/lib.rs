//! Certify power integral bases for roots of monic integer polynomials, with
//! closed-form checks for the quintic and sextic trinomial families
//! `x^n + a x + b` and `x^n + c x^(n-1) + d`.

pub mod arith;
pub mod cli;
pub mod dedekind;
pub mod density;
pub mod error;
pub mod monogenic;
pub mod poly;
pub mod polygon;

pub use error::{Error, Result};
