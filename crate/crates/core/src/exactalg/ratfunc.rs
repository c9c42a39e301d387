//! Reduced fractions of multivariate polynomials.
//!
//! Fractions with a univariate numerator and denominator (in the same
//! variable) are put in canonical form: gcd-reduced, denominator with coprime
//! integer coefficients and positive leading coefficient. Multivariate
//! fractions only cancel common monomial content and scalar content; equality
//! is decided by cross-multiplication, which needs no canonical form.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::mpoly::{MPoly, Var};
use super::series::TruncSeries;
use super::{ExactError, Rational};

/// Quotient of two polynomials with nonzero denominator.
#[derive(Clone, Debug)]
pub struct RatFunc {
    numer: MPoly,
    denom: MPoly,
    canonical: bool,
}

impl RatFunc {
    /// Build `numer/denom`, cancelling what can be cancelled cheaply.
    pub fn new(numer: MPoly, denom: MPoly) -> Result<Self, ExactError> {
        if denom.is_zero() {
            return Err(ExactError::ZeroDenominator);
        }
        let mut f = RatFunc { numer, denom, canonical: false };
        f.reduce();
        Ok(f)
    }

    pub fn from_poly(p: MPoly) -> Self {
        RatFunc { numer: p, denom: MPoly::one(), canonical: true }
    }

    pub fn from_rational(q: Rational) -> Self {
        Self::from_poly(MPoly::constant(q))
    }

    pub fn zero() -> Self {
        Self::from_poly(MPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(MPoly::one())
    }

    pub fn numer(&self) -> &MPoly {
        &self.numer
    }

    pub fn denom(&self) -> &MPoly {
        &self.denom
    }

    /// Whether gcd reduction is guaranteed to have been performed.
    pub fn is_canonical(&self) -> bool {
        self.canonical
    }

    pub fn is_zero(&self) -> bool {
        self.numer.is_zero()
    }

    pub fn as_constant(&self) -> Option<Rational> {
        match (self.numer.as_constant(), self.denom.as_constant()) {
            (Some(n), Some(d)) => Some(n / d),
            _ => None,
        }
    }

    /// `Some(p)` when the denominator is 1.
    pub fn as_poly(&self) -> Option<&MPoly> {
        if self.denom.is_one() {
            Some(&self.numer)
        } else {
            None
        }
    }

    /// Canonicalize in place. Univariate fractions are fully gcd-reduced;
    /// multivariate fractions cancel monomial and scalar content only.
    fn reduce(&mut self) {
        if self.numer.is_zero() {
            self.numer = MPoly::zero();
            self.denom = MPoly::one();
            self.canonical = true;
            return;
        }
        // cancel common monomial content
        let nc: BTreeMap<Var, u32> = self.numer.monomial_content().into_iter().collect();
        for (var, k) in self.denom.monomial_content() {
            if let Some(nk) = nc.get(&var) {
                let m = k.min(*nk);
                if m > 0 {
                    self.numer = self.numer.shift_down(&var, m);
                    self.denom = self.denom.shift_down(&var, m);
                }
            }
        }
        // univariate gcd when both sides live in one common variable
        let uni = match (self.numer.as_univariate(), self.denom.as_univariate()) {
            (Some((va, a)), Some((vb, b))) => match (&va, &vb) {
                (Some(x), Some(y)) if x == y => Some((va.clone(), a, b)),
                (Some(_), None) => Some((va.clone(), a, b)),
                (None, _) => Some((vb.clone(), a, b)),
                _ => None,
            },
            _ => None,
        };
        if let Some((var, a, b)) = uni {
            let g = univar_gcd(&a, &b);
            let (na, nb) = if g.len() > 1 {
                (univar_div_exact(&a, &g), univar_div_exact(&b, &g))
            } else {
                (a, b)
            };
            match var {
                Some(v) => {
                    self.numer = MPoly::from_univariate(&v, &na);
                    self.denom = MPoly::from_univariate(&v, &nb);
                }
                None => {
                    self.numer = MPoly::constant(na.first().cloned().unwrap_or_else(Rational::zero));
                    self.denom = MPoly::constant(nb.first().cloned().unwrap_or_else(Rational::one));
                }
            }
            self.canonical = true;
        } else {
            self.canonical = false;
        }
        self.normalize_scale();
        if self.denom.is_one() || self.numer.as_constant().is_some() {
            self.canonical = true;
        }
    }

    /// Scale so the denominator has coprime integer coefficients and positive
    /// leading coefficient (graded-lex order).
    fn normalize_scale(&mut self) {
        if let Some(c) = self.denom.as_constant() {
            self.numer = self.numer.scale(&c.recip());
            self.denom = MPoly::one();
            return;
        }
        let mut denom_lcm = BigInt::one();
        let mut denom_gcd = BigInt::zero();
        for (_, c) in self.denom.terms() {
            denom_lcm = denom_lcm.lcm(c.denom());
            denom_gcd = denom_gcd.gcd(c.numer());
        }
        let mut k = Rational::new(denom_lcm, denom_gcd);
        if self.denom.leading_coeff().is_negative() {
            k = -k;
        }
        if !k.is_one() {
            self.numer = self.numer.scale(&k);
            self.denom = self.denom.scale(&k);
        }
    }

    /// Exact equality as rational functions, by cross-multiplication.
    pub fn equal(&self, other: &RatFunc) -> bool {
        &self.numer * &other.denom == &other.numer * &self.denom
    }

    pub fn recip(&self) -> Result<RatFunc, ExactError> {
        RatFunc::new(self.denom.clone(), self.numer.clone())
    }

    pub fn pow(&self, n: u32) -> RatFunc {
        RatFunc {
            numer: self.numer.pow(n),
            denom: self.denom.pow(n),
            canonical: self.canonical,
        }
    }

    /// Substitute a polynomial for a variable in both numerator and denominator.
    pub fn subst(&self, var: &Var, replacement: &MPoly) -> Result<RatFunc, ExactError> {
        RatFunc::new(self.numer.subst(var, replacement), self.denom.subst(var, replacement))
    }

    /// Evaluate at a rational point covering all variables.
    pub fn eval(&self, point: &BTreeMap<Var, Rational>) -> Result<Rational, ExactError> {
        let d = self.denom.eval(point)?;
        if d.is_zero() {
            return Err(ExactError::ZeroDenominator);
        }
        Ok(self.numer.eval(point)? / d)
    }

    /// Taylor coefficients `c_0..c_order` of the expansion in `var` around 0.
    ///
    /// The remaining variables stay symbolic: each coefficient is a rational
    /// function in them. Errors with [`ExactError::NonExpandable`] when the
    /// denominator vanishes at `var = 0`.
    pub fn taylor_in(&self, var: &Var, order: usize) -> Result<TruncSeries, ExactError> {
        let num_coeffs = self.numer.coeffs_in(var);
        let den_coeffs = self.denom.coeffs_in(var);
        let b0 = den_coeffs[0].clone();
        if b0.is_zero() {
            return Err(ExactError::NonExpandable);
        }
        let b0_inv = RatFunc::new(MPoly::one(), b0)?;
        let mut coeffs: Vec<RatFunc> = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut acc = RatFunc::from_poly(num_coeffs.get(n).cloned().unwrap_or_else(MPoly::zero));
            for k in 1..=n {
                if let Some(bk) = den_coeffs.get(k) {
                    if !bk.is_zero() {
                        acc = &acc - &(&RatFunc::from_poly(bk.clone()) * &coeffs[n - k]);
                    }
                }
            }
            coeffs.push(&acc * &b0_inv);
        }
        TruncSeries::new(var.clone(), coeffs)
    }
}

impl PartialEq for RatFunc {
    fn eq(&self, other: &Self) -> bool {
        self.equal(other)
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::new(
            &(&self.numer * &rhs.denom) + &(&rhs.numer * &self.denom),
            &self.denom * &rhs.denom,
        )
        .expect("nonzero denominators")
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            numer: -&self.numer,
            denom: self.denom.clone(),
            canonical: self.canonical,
        }
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::new(&self.numer * &rhs.numer, &self.denom * &rhs.denom).expect("nonzero denominators")
    }
}

impl Div for &RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::new(&self.numer * &rhs.denom, &self.denom * &rhs.numer).expect("division by zero")
    }
}

macro_rules! forward_owned_ops {
    ($($trait:ident :: $method:ident),*) => {$(
        impl $trait for RatFunc {
            type Output = RatFunc;
            fn $method(self, rhs: RatFunc) -> RatFunc { (&self).$method(&rhs) }
        }
    )*};
}
forward_owned_ops!(Add::add, Sub::sub, Mul::mul, Div::div);

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom.is_one() {
            return write!(f, "{}", self.numer);
        }
        write!(f, "({})/({})", self.numer, self.denom)
    }
}

// ---- dense univariate helpers ------------------------------------------

fn univar_trim(c: &mut Vec<Rational>) {
    while c.last().map(|x| x.is_zero()).unwrap_or(false) {
        c.pop();
    }
}

fn univar_monic(c: &mut [Rational]) {
    if let Some(last) = c.last().cloned() {
        if !last.is_one() {
            for x in c.iter_mut() {
                *x /= last.clone();
            }
        }
    }
}

/// Remainder of dense univariate division.
fn univar_rem(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut r = a.to_vec();
    univar_trim(&mut r);
    let db = b.len() - 1;
    let lead = b.last().expect("nonzero divisor");
    while r.len() > db {
        let k = r.len() - 1 - db;
        let q = r.last().unwrap() / lead;
        for i in 0..=db {
            let t = &b[i] * &q;
            r[k + i] -= t;
        }
        univar_trim(&mut r);
        if r.is_empty() {
            break;
        }
    }
    r
}

/// Exact quotient; panics if the division has a remainder.
fn univar_div_exact(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut r = a.to_vec();
    univar_trim(&mut r);
    let db = b.len() - 1;
    let lead = b.last().expect("nonzero divisor");
    let mut q = vec![Rational::zero(); r.len().saturating_sub(db)];
    while r.len() > db {
        let k = r.len() - 1 - db;
        let c = r.last().unwrap() / lead;
        q[k] = c.clone();
        for i in 0..=db {
            let t = &b[i] * &c;
            r[k + i] -= t;
        }
        univar_trim(&mut r);
    }
    assert!(r.is_empty(), "inexact univariate division");
    if q.is_empty() {
        q.push(Rational::zero());
    }
    q
}

/// Monic gcd of two dense univariate polynomials over Q.
fn univar_gcd(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    univar_trim(&mut x);
    univar_trim(&mut y);
    while !y.is_empty() {
        let r = univar_rem(&x, &y);
        x = y;
        y = r;
    }
    if x.is_empty() {
        x.push(Rational::one());
    }
    univar_monic(&mut x);
    x
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::parse_poly;

    fn rf(n: &str, d: &str) -> RatFunc {
        RatFunc::new(parse_poly(n).unwrap(), parse_poly(d).unwrap()).unwrap()
    }

    #[test]
    fn reduces_univariate_fraction() {
        // (L^2 - 1)/(L - 1) -> L + 1
        let f = rf("L^2 - 1", "L - 1");
        assert!(f.is_canonical());
        assert_eq!(f.to_string(), "L + 1");
    }

    #[test]
    fn cusp_ztop_value_reduces() {
        // (30 + 24s)/(6(1+s)(5+6s)) -> (4s + 5-ish) canonical form
        let f = rf("24*s + 30", "(6 + 6*s)*(5 + 6*s)");
        let expect = rf("4*s + 5", "(5 + 6*s)*(1 + s)");
        assert!(f.equal(&expect));
        assert_eq!(f.to_string(), "(4*s + 5)/(6*s^2 + 11*s + 5)");
    }

    #[test]
    fn already_reduced_fraction_stays_fixed() {
        // (2p-1-p^2 T)/(1-pT)^2 at p = 3
        let f = rf("5 - 9*T", "(1 - 3*T)^2");
        let again = RatFunc::new(f.numer().clone(), f.denom().clone()).unwrap();
        assert_eq!(f.numer(), again.numer());
        assert_eq!(f.denom(), again.denom());
        assert_eq!(f.to_string(), "(-9*T + 5)/(9*T^2 - 6*T + 1)");
    }

    #[test]
    fn zero_denominator_rejected() {
        assert!(matches!(
            RatFunc::new(MPoly::one(), MPoly::zero()),
            Err(ExactError::ZeroDenominator)
        ));
    }

    #[test]
    fn cross_multiplication_equality() {
        // L(L-1)/(L-T) vs (L-1)/(1 - T/L) cleared to polynomial form:
        // the second is (L(L-1))/(L - T) after clearing 1/L.
        let a = rf("L^2 - L", "L - T");
        let b = rf("L*(L - 1)*L", "L*(L - T)");
        assert!(a.equal(&b));
        // permuted denominator factors compare equal
        let c = rf("4*s + 5", "(5 + 6*s)*(1 + s)");
        let d = rf("4*s + 5", "(1 + s)*(5 + 6*s)");
        assert!(c.equal(&d));
    }

    #[test]
    fn equality_is_an_equivalence_on_mixed_forms() {
        let a = rf("L^2 - 1", "L - 1");
        let b = rf("L + 1", "1");
        assert!(a.equal(&b) && b.equal(&a) && a.equal(&a));
    }

    #[test]
    fn monomial_content_cancels_multivariate() {
        let f = rf("L^2*T - L*T", "L*T^2");
        assert_eq!(f.to_string(), "(L - 1)/(T)");
        assert!(!rf("L*T + 1", "L + T").is_canonical());
    }

    #[test]
    fn taylor_of_geometric_series() {
        let f = rf("1", "1 - T");
        let s = f.taylor_in(&Var::new("T"), 4).unwrap();
        for k in 0..=4 {
            assert_eq!(s.coeff(k).as_constant().unwrap(), Rational::one());
        }
    }

    #[test]
    fn taylor_with_symbolic_l() {
        // L(L-1)/(L-T): coefficient of T^n is (L-1)/L^n
        let f = rf("L^2 - L", "L - T");
        let s = f.taylor_in(&Var::new("T"), 3).unwrap();
        for n in 0..=3usize {
            let expect = rf("L - 1", &format!("L^{n}"));
            assert!(s.coeff(n).equal(&expect), "coefficient {n}");
        }
    }

    #[test]
    fn taylor_rejects_vanishing_origin() {
        let f = rf("1", "T");
        assert!(matches!(f.taylor_in(&Var::new("T"), 3), Err(ExactError::NonExpandable)));
    }
}
