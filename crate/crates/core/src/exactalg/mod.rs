//! Exact rational arithmetic, sparse multivariate polynomials, reduced
//! rational functions, truncated power series and the three-level value
//! calculus (class-in-L / Hodge–Deligne / Euler characteristic).

mod mpoly;
mod parse;
mod ratfunc;
mod series;
mod termsum;

pub use mpoly::{MPoly, Var, CANONICAL_VARS};
pub use parse::parse_poly;
pub use ratfunc::RatFunc;
pub use series::TruncSeries;
pub(crate) use termsum::positive_exponent;
pub use termsum::{Factor, Level, Term, TermSum};

use num_bigint::BigInt;
use thiserror::Error;

/// Exact rational scalar; numerator/denominator are arbitrary precision and
/// stored coprime with positive denominator.
pub type Rational = num_rational::BigRational;

/// Parse a rational from `"p/q"` or `"p"` form.
pub fn parse_rational(s: &str) -> Result<Rational, ExactError> {
    let s = s.trim();
    match s.split_once('/') {
        None => {
            let n: BigInt = s.parse().map_err(|_| ExactError::Parse(format!("bad integer `{s}`")))?;
            Ok(Rational::from_integer(n))
        }
        Some((num, den)) => {
            let n: BigInt = num.trim().parse().map_err(|_| ExactError::Parse(format!("bad numerator in `{s}`")))?;
            let d: BigInt = den.trim().parse().map_err(|_| ExactError::Parse(format!("bad denominator in `{s}`")))?;
            if d == BigInt::from(0) {
                return Err(ExactError::ZeroDenominator);
            }
            Ok(Rational::new(n, d))
        }
    }
}

/// Render a rational in the document form `"p/q"` (or `"p"` when integral).
pub fn rational_string(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ExactError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("operation not supported at this level: {0}")]
    UnsupportedLevel(String),
    #[error("coefficients are not all integers")]
    NonIntegerCoefficients,
    #[error("factor exponent is not a positive integer: {0}")]
    NonIntegerExponent(String),
    #[error("factor with nu = 0 and N = 0 would divide by zero")]
    DivisionByZeroDiscrepancy,
    #[error("series order mismatch: {0}")]
    OrderMismatch(String),
    #[error("rational function has no expansion at the series origin")]
    NonExpandable,
    #[error("opaque class symbol `{0}` has no numeric specialization")]
    SymbolicClass(String),
    #[error("factors mix zeta-context (N > 0) and stringy-zeta-context (N < 0) signs")]
    MixedContextSigns,
}
