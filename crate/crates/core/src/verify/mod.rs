//! Statements, incidence polynomials and exact certification.

pub mod certify;
pub mod named;
pub mod statement;

pub use certify::{
    certify, eliminate_and_reduce, reduce_on_family, residual_on, Certificate, CertifyOptions, Elimination, Verdict,
    Witness,
};
pub use named::{find_named, resolve_statement, NamedStatement, NAMED};
pub use statement::{statement_residual, statement_to_polynomial, statement_value, Statement, StatementKind};
