//! Exact arithmetic foundation: arbitrary-precision rationals, cyclotomic
//! fields Q(zeta_N), multivariate polynomials over them, and integer linear
//! forms used as symbolic exponents in generic-parameter mode.

pub mod cyclotomic;
pub mod linear;
pub mod multipoly;
pub mod parse;

pub use cyclotomic::{cyclotomic_polynomial, euler_phi, CycloField, Cyclotomic};
pub use linear::LinearExponent;
pub use multipoly::{MultiPoly, VarSet};

use thiserror::Error;

/// Arbitrary-precision rational, always stored reduced with positive denominator.
pub type Rational = num_rational::BigRational;
/// Arbitrary-precision integer.
pub type Integer = num_bigint::BigInt;

#[derive(Debug, Error)]
pub enum ExactNumError {
    #[error("division by zero in Q(zeta_{order})")]
    DivisionByZero { order: u32 },
    #[error("parse error: {0}")]
    Parse(String),
}

/// Parses `"p/q"` or `"p"` into a reduced rational. The denominator must be positive.
pub fn rational_from_str(s: &str) -> Result<Rational, ExactNumError> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let n: Integer = num
        .parse()
        .map_err(|_| ExactNumError::Parse(format!("invalid integer `{num}`")))?;
    let d: Integer = match den {
        Some(d) => d
            .parse()
            .map_err(|_| ExactNumError::Parse(format!("invalid denominator `{d}`")))?,
        None => Integer::from(1),
    };
    if d <= Integer::from(0) {
        return Err(ExactNumError::Parse(format!(
            "denominator must be positive in `{s}`"
        )));
    }
    Ok(Rational::new(n, d))
}

/// Renders a rational as `"p/q"`, or just `"p"` when the denominator is 1.
pub fn rational_to_string(r: &Rational) -> String {
    if r.denom() == &Integer::from(1) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
