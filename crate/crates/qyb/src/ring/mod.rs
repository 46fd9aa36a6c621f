//! Exact coefficient ring: Laurent polynomials in q, v (for ν) and x over the
//! rationals, their reduced fractions, q-numbers and numeric evaluation.

pub mod coeff;
pub mod eval;
pub mod frac;
pub mod gcd;
pub mod mono;
pub mod parse;
pub mod qnum;
pub mod scalar;

pub use coeff::Coeff;
pub use eval::Point;
pub use frac::ScalarFrac;
pub use gcd::gcd;
pub use mono::{Mono, Var};
pub use qnum::{q_binomial, q_factorial, q_number};
pub use scalar::{Acc, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RingError {
    #[error("division by zero polynomial")]
    DivisionByZero,
    #[error("pole at evaluation point")]
    Pole,
    #[error("not a Laurent polynomial: {0}")]
    NotPolynomial(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("argument out of range: {0}")]
    OutOfRange(String),
}
