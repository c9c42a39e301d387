//! Stringy Euler number of a normal surface singularity with star-shaped
//! resolution graph, directly from its Seifert-type data.
//!
//! The graph has a central curve of genus `g` and self-intersection `-kappa`
//! with `k` attached Hirzebruch-Jung chains, the `i`-th determined by coprime
//! `(n_i, q_i)`. The central log discrepancy is
//!
//! ```text
//! a = (2 - 2g - k + sum 1/n_i) / (kappa - sum q_i/n_i)
//!   = (prod n_i / d) * (2 - 2g - k + sum 1/n_i)
//! ```
//!
//! with `d` the absolute determinant of the total intersection matrix, and
//!
//! ```text
//! e_st(X) = (1/a)(2 - 2g - k + sum n_i) + chi(X \ {P}).
//! ```
//!
//! `chi(X \ {P})` enters as an additive parameter: it may be left symbolic or
//! substituted by a number.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Deserialize;

use super::InvariantError;
use crate::exactalg::{parse_rational, rational_string, Rational};
use crate::strata::StrataError;

/// Seifert-type data of a star-shaped resolution graph.
#[derive(Clone, Debug, PartialEq)]
pub struct SeifertData {
    /// Genus of the central curve.
    pub g: u32,
    /// Minus the self-intersection of the central curve; `kappa >= 1`.
    pub kappa: i64,
    /// One `(n_i, q_i)` per attached chain, coprime.
    pub chains: Vec<(u64, u64)>,
    /// `chi(X \ {P})`; `None` keeps it symbolic.
    pub chi_complement: Option<Rational>,
    /// Known absolute determinant of the total intersection matrix, if any.
    pub d: Option<BigInt>,
}

impl SeifertData {
    pub fn validate(&self) -> Result<(), StrataError> {
        if self.kappa < 1 {
            return Err(StrataError::Schema(format!("kappa = {} must be >= 1", self.kappa)));
        }
        for (n, q) in &self.chains {
            if *n == 0 || *q == 0 || n.gcd(q) != 1 {
                return Err(StrataError::Schema(format!(
                    "chain ({n}, {q}) must consist of coprime positive integers"
                )));
            }
        }
        Ok(())
    }

    /// Parse from JSON: `{"schema": "motivic-kit/v1", "g": 0, "kappa": 1,
    /// "chains": [[2,1],[3,1],[7,1]], "chi_complement": "5"?, "d": 1?}`.
    pub fn parse(text: &str) -> Result<Self, StrataError> {
        #[derive(Deserialize)]
        struct Raw {
            schema: String,
            g: u32,
            kappa: i64,
            chains: Vec<(u64, u64)>,
            #[serde(default)]
            chi_complement: Option<String>,
            #[serde(default)]
            d: Option<i64>,
        }
        let raw: Raw = serde_json::from_str(text).map_err(|e| StrataError::Schema(e.to_string()))?;
        if raw.schema != crate::strata::SCHEMA_VERSION {
            return Err(StrataError::Schema(format!("unsupported schema `{}`", raw.schema)));
        }
        let data = SeifertData {
            g: raw.g,
            kappa: raw.kappa,
            chains: raw.chains,
            chi_complement: raw.chi_complement.as_deref().map(parse_rational).transpose()?,
            d: raw.d.map(BigInt::from),
        };
        data.validate()?;
        Ok(data)
    }
}

/// A rational number plus, optionally still symbolic, `chi(X \ {P})`.
#[derive(Clone, Debug, PartialEq)]
pub struct ChiOffset {
    pub base: Rational,
    /// `None` means the complement stays a symbolic summand.
    pub complement: Option<Rational>,
}

impl ChiOffset {
    pub fn total(&self) -> Option<Rational> {
        self.complement.as_ref().map(|c| &self.base + c)
    }
}

impl fmt::Display for ChiOffset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.complement {
            Some(c) => write!(f, "{}", rational_string(&(&self.base + c))),
            None => write!(f, "{} + chi(X\\{{P}})", rational_string(&self.base)),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SeifertResult {
    /// Log discrepancy of the central curve.
    pub a: Rational,
    pub e_st: ChiOffset,
    /// `(kappa - sum q_i/n_i) * prod n_i`, the determinant the data forces.
    pub d_derived: BigInt,
}

/// Evaluate the closed form. Cross-checks: `d_derived` against the input `d`
/// when given, and the second expression for `a` (through `d`) against the
/// first whenever it is defined.
pub fn seifert_e_st(data: &SeifertData) -> Result<SeifertResult, InvariantError> {
    data.validate()?;
    let k = data.chains.len() as i64;
    let two_minus = Rational::from_integer((2 - 2 * i64::from(data.g) - k).into());
    let mut sum_inv = Rational::zero();
    let mut sum_q_over_n = Rational::zero();
    let mut sum_n = Rational::zero();
    let mut prod_n = BigInt::one();
    for (n, q) in &data.chains {
        sum_inv += Rational::new(1.into(), (*n).into());
        sum_q_over_n += Rational::new((*q).into(), (*n).into());
        sum_n += Rational::from_integer((*n).into());
        prod_n *= BigInt::from(*n);
    }
    let numerator = &two_minus + &sum_inv;
    let denominator = Rational::from_integer(data.kappa.into()) - sum_q_over_n;
    if denominator.is_zero() {
        return Err(InvariantError::DegenerateDenominator);
    }
    let a = &numerator / &denominator;
    if a.is_zero() {
        return Err(InvariantError::StrictlyLogCanonical);
    }

    let d_derived_q = &denominator * Rational::from_integer(prod_n.clone());
    debug_assert!(d_derived_q.is_integer(), "determinant is an integer");
    let d_derived = d_derived_q.to_integer();

    if let Some(d) = &data.d {
        if *d != d_derived {
            return Err(InvariantError::DConsistencyFailure {
                input: d.to_string(),
                derived: d_derived.to_string(),
            });
        }
        // second expression for a, through the supplied determinant
        if !numerator.is_zero() {
            let alt = Rational::new(prod_n, d.clone()) * &numerator;
            if alt != a {
                return Err(InvariantError::DConsistencyFailure {
                    input: rational_string(&alt),
                    derived: rational_string(&a),
                });
            }
        }
    }

    let base = a.recip() * (&two_minus + &sum_n);
    Ok(SeifertResult {
        a,
        e_st: ChiOffset { base, complement: data.chi_complement.clone() },
        d_derived,
    })
}
