//! Exact sparse multivariate polynomials over the rationals.
//!
//! Every polynomial lives over the fixed variable set `a b c u x m n t`.
//! The crate provides ring arithmetic, substitution, fraction-free
//! determinants, Sylvester resultants, reduction modulo a minimal polynomial
//! and a multivariate gcd.

mod arith;
mod error;
pub mod gcd;
mod matrix;
mod monomial;
mod parse;
mod poly;
mod reduce;
mod resultant;
pub mod ring;
mod var;

pub use arith::{poly_arith, ArithOp};
pub use error::PolyError;
pub use gcd::gcd;
pub use matrix::{det_bareiss, PolyMatrix};
pub use monomial::{Monomial, MAX_DEGREE};
pub use parse::poly;
pub use poly::MultiPoly;
pub use reduce::reduce_mod;
pub use resultant::{
    elimination_generator, multiplication_matrix, resultant, resultant_u, resultant_via_norm,
    sylvester, sylvester_resultant,
};
pub use ring::Scalar;
pub use var::{Var, NUM_VARS};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
