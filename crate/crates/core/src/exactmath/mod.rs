//! Exact scalar, polynomial and linear-algebra substrate.
//!
//! Scalars are arbitrary-precision rationals ([`Rational`], backed by
//! `num_rational::BigRational`, which maintains the lowest-terms / positive
//! denominator invariants). Polynomials are sparse multivariate with rational
//! coefficients and graded-lexicographic term order. Matrix ranks over the
//! rational function field are computed by fraction-free (Bareiss) elimination
//! with exact pivot divisions.
//!
//! The base field is the rationals, not the complex numbers: every algebra in
//! the catalog has rational structure constants, and the rank of a matrix with
//! rational-coefficient entries over `Q(f1..fn)` equals its rank over
//! `C(f1..fn)`. Classification witnesses over a non-closed field can in
//! principle require field extensions; whenever a witness search exhausts its
//! exact search space the library reports a "witness search failed over Q"
//! error instead of guessing (see [`crate::classify`]).

mod matrix;
mod poly;

pub use matrix::{eval_rank, pfaffian, poly_rank, rational_kernel, PolyMatrix, RationalMatrix};
pub use poly::MultiPoly;

use num_bigint::BigInt;
use thiserror::Error;

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator; zero is `0/1`.
pub type Rational = num_rational::BigRational;

/// Errors from the exact-math layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactMathError {
    #[error("variable lists do not match: {0:?} vs {1:?}")]
    VariableMismatch(Vec<String>, Vec<String>),
    #[error("evaluation point has length {got}, expected {expected}")]
    PointLength { expected: usize, got: usize },
    #[error("cannot parse rational from {0:?}")]
    BadRational(String),
}

/// Rational from an integer.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Rational `p/q`. Panics if `q == 0`.
pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Parse a rational from `"p"` or `"p/q"` (lowest terms not required on input).
pub fn parse_rational(s: &str) -> Result<Rational, ExactMathError> {
    let s = s.trim();
    let bad = || ExactMathError::BadRational(s.to_string());
    match s.split_once('/') {
        None => s.parse::<BigInt>().map(Rational::from_integer).map_err(|_| bad()),
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q == BigInt::from(0) {
                return Err(bad());
            }
            Ok(Rational::new(p, q))
        }
    }
}

/// Canonical `"p/q"` rendering in lowest terms; integers render without the
/// denominator. This is the only rational syntax used in files and reports.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}
