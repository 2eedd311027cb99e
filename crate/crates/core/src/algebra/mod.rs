//! Exact sparse polynomials over the Gaussian rationals in the variables
//! `z1, z2, zb1, zb2, u, w`.

mod gauss;
mod gcd;
mod monomial;
mod poly;

pub use gauss::{GaussRational, ParseGaussError};
pub use gcd::mixed_gcd;
pub use monomial::{Monomial, Var};
pub use poly::{Poly, RealPoly};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("malformed input: {0}")]
    MalformedInput(String),
    #[error("polynomial is not divisible")]
    NotDivisible,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("gcd of two zero polynomials")]
    BothZero,
    #[error("polynomial is not real-valued")]
    NotReal,
}

/// Shorthand used throughout the crate and its tests.
pub fn rat(n: i64, d: i64) -> num_rational::BigRational {
    num_rational::BigRational::new(n.into(), d.into())
}
