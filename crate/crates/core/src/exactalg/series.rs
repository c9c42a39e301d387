//! Truncated power series with rational-function coefficients.

use std::fmt;



use super::mpoly::{MPoly, Var};
use super::ratfunc::RatFunc;
use super::{ExactError, Rational};

/// A power series in one variable truncated at a fixed order; coefficient `k`
/// multiplies `var^k` and the list always has length `order + 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncSeries {
    var: Var,
    coeffs: Vec<RatFunc>,
}

impl TruncSeries {
    pub fn new(var: Var, coeffs: Vec<RatFunc>) -> Result<Self, ExactError> {
        if coeffs.is_empty() {
            return Err(ExactError::OrderMismatch("a series needs at least the order-0 coefficient".into()));
        }
        Ok(TruncSeries { var, coeffs })
    }

    pub fn zero(var: Var, order: usize) -> Self {
        TruncSeries { var, coeffs: vec![RatFunc::zero(); order + 1] }
    }

    pub fn constant(var: Var, order: usize, c: RatFunc) -> Self {
        let mut s = Self::zero(var, order);
        s.coeffs[0] = c;
        s
    }

    /// Series with the given rational numbers as coefficients.
    pub fn from_rationals(var: Var, coeffs: &[Rational]) -> Result<Self, ExactError> {
        Self::new(var, coeffs.iter().cloned().map(RatFunc::from_rational).collect())
    }

    pub fn var(&self) -> &Var {
        &self.var
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &RatFunc {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[RatFunc] {
        &self.coeffs
    }

    pub fn set_coeff(&mut self, k: usize, c: RatFunc) {
        self.coeffs[k] = c;
    }

    /// Truncate to a lower (or equal) order.
    pub fn truncated(&self, order: usize) -> Result<Self, ExactError> {
        if order > self.order() {
            return Err(ExactError::OrderMismatch(format!(
                "cannot extend a series of order {} to order {order}",
                self.order()
            )));
        }
        Ok(TruncSeries { var: self.var.clone(), coeffs: self.coeffs[..=order].to_vec() })
    }

    pub fn add(&self, rhs: &TruncSeries) -> Result<Self, ExactError> {
        self.check_compatible(rhs)?;
        let coeffs = self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect();
        Ok(TruncSeries { var: self.var.clone(), coeffs })
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        TruncSeries {
            var: self.var.clone(),
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Truncated Cauchy product.
    pub fn mul(&self, rhs: &TruncSeries) -> Result<Self, ExactError> {
        self.check_compatible(rhs)?;
        let order = self.order();
        let mut coeffs = vec![RatFunc::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if i + j > order {
                    break;
                }
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        Ok(TruncSeries { var: self.var.clone(), coeffs })
    }

    pub fn pow(&self, mut n: u32) -> Result<Self, ExactError> {
        let mut result = Self::constant(self.var.clone(), self.order(), RatFunc::one());
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                result = result.mul(&base)?;
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(result)
    }

    fn check_compatible(&self, rhs: &TruncSeries) -> Result<(), ExactError> {
        if self.var != rhs.var {
            return Err(ExactError::OrderMismatch(format!(
                "series in {} combined with series in {}",
                self.var, rhs.var
            )));
        }
        if self.order() != rhs.order() {
            return Err(ExactError::OrderMismatch(format!(
                "series orders differ: {} vs {}",
                self.order(),
                rhs.order()
            )));
        }
        Ok(())
    }

    /// Coefficients as exact rationals; `None` if any coefficient is not a constant.
    pub fn constant_coeffs(&self) -> Option<Vec<Rational>> {
        self.coeffs.iter().map(|c| c.as_constant()).collect()
    }

    /// Coefficients as polynomials (denominator 1); `None` otherwise.
    pub fn poly_coeffs(&self) -> Option<Vec<MPoly>> {
        self.coeffs.iter().map(|c| c.as_poly().cloned()).collect()
    }
}

impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*{}", self.var)?,
                _ => write!(f, "({c})*{}^{k}", self.var)?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O({}^{})", self.var, self.order() + 1)
    }
}
