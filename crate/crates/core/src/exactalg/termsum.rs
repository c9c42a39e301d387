//! Sums over strata in "resolution normal form".
//!
//! Every closed-form invariant in this crate is a sum of terms
//! `coeff * prod_i factor(nu_i, N_i)`, where a factor denotes
//!
//! - `(L - 1)*T^N / (L^nu - T^N)` for `N > 0` (zeta context),
//! - `(L - 1) / (L^nu - 1)` for `N = 0` (volume / stringy context, in
//!   Hodge form `(uv - 1)/((uv)^nu - 1)` with roots `w^r = uv`),
//! - `1 / (nu + s*N)` at the Euler level (topological and stringy zeta).
//!
//! A [`TermSum`] keeps the factors symbolic so the same data can be expanded
//! as a series, assembled into a rational function, or specialized down the
//! chain class-in-L -> Hodge -> Euler characteristic.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::mpoly::{MPoly, Var};
use super::ratfunc::RatFunc;
use super::series::TruncSeries;
use super::{rational_string, ExactError, Rational};

/// Specialization level of a [`TermSum`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Level {
    /// Coefficients are polynomials in `L` (possibly with opaque symbols).
    ClassL,
    /// Coefficients are polynomials in `(u, v)`; factors live over `w` with
    /// `w^rootIndex = uv`.
    Hodge,
    /// Coefficients are rational constants (Euler characteristics).
    Euler,
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Level::ClassL => "class-L",
            Level::Hodge => "hodge",
            Level::Euler => "euler",
        })
    }
}

/// One multiplicand `(nu, N)` of a resolution-formula product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factor {
    nu: Rational,
    n: Rational,
}

impl Factor {
    /// `nu` and `n` must not both vanish.
    pub fn new(nu: Rational, n: Rational) -> Self {
        assert!(
            !(nu.is_zero() && n.is_zero()),
            "factor (nu, N) = (0, 0) is not allowed"
        );
        Factor { nu, n }
    }

    pub fn pure(nu: Rational) -> Self {
        Factor::new(nu, Rational::zero())
    }

    pub fn from_ints(nu: i64, n: i64) -> Self {
        Factor::new(Rational::from_integer(nu.into()), Rational::from_integer(n.into()))
    }

    pub fn nu(&self) -> &Rational {
        &self.nu
    }

    pub fn n(&self) -> &Rational {
        &self.n
    }

    /// `(L - 1)/(L^nu - 1)` or `(L - 1)T^N/(L^nu - T^N)` as an exact fraction;
    /// requires integer exponents.
    pub fn class_value(&self) -> Result<RatFunc, ExactError> {
        let nu = positive_exponent(&self.nu)?;
        let l_minus_1 = &MPoly::var("L") - &MPoly::one();
        let l_nu = MPoly::var("L").pow(nu);
        if self.n.is_zero() {
            return RatFunc::new(l_minus_1, &l_nu - &MPoly::one());
        }
        if self.n.is_negative() {
            return Err(ExactError::UnsupportedLevel(
                "class-level value of a factor with N < 0".into(),
            ));
        }
        let n = positive_exponent(&self.n)?;
        let t_n = MPoly::var("T").pow(n);
        RatFunc::new(&l_minus_1 * &t_n, &l_nu - &t_n)
    }

    /// Hodge-level value `(w^r - 1)/(w^{r*nu} - 1)` where `w^r = uv`.
    pub fn hodge_value(&self, root_index: u32) -> Result<RatFunc, ExactError> {
        if !self.n.is_zero() {
            return Err(ExactError::UnsupportedLevel(
                "hodge-level value of a factor with N != 0".into(),
            ));
        }
        let scaled = &self.nu * Rational::from_integer(root_index.into());
        let exp = positive_exponent(&scaled)?;
        let num = &MPoly::var("w").pow(root_index) - &MPoly::one();
        let den = &MPoly::var("w").pow(exp) - &MPoly::one();
        RatFunc::new(num, den)
    }

    /// Euler-level value `1/(nu + s*N)` as a fraction over Q(s).
    pub fn euler_value(&self) -> RatFunc {
        let den = &MPoly::constant(self.nu.clone()) + &MPoly::monomial("s", 1, self.n.clone());
        RatFunc::new(MPoly::one(), den).expect("(nu, N) != (0, 0)")
    }

    /// The exact limit `1/nu` of the pure factor as `L -> 1`.
    pub fn chi_limit(&self) -> Result<Rational, ExactError> {
        if !self.n.is_zero() {
            return Err(ExactError::UnsupportedLevel(
                "chi specialization of a factor with N != 0".into(),
            ));
        }
        if self.nu.is_zero() {
            return Err(ExactError::DivisionByZeroDiscrepancy);
        }
        Ok(self.nu.recip())
    }

    /// Candidate pole `-nu/N` (for factors with `N != 0`).
    pub fn candidate_pole(&self) -> Option<Rational> {
        if self.n.is_zero() {
            None
        } else {
            Some(-(&self.nu / &self.n))
        }
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "f(nu={}, N={})", rational_string(&self.nu), rational_string(&self.n))
    }
}

pub(crate) fn positive_exponent(q: &Rational) -> Result<u32, ExactError> {
    if !q.is_integer() || !q.is_positive() {
        return Err(ExactError::NonIntegerExponent(rational_string(q)));
    }
    q.numer()
        .try_into()
        .map_err(|_| ExactError::NonIntegerExponent(rational_string(q)))
}

/// One stratum contribution.
#[derive(Clone, Debug, PartialEq)]
pub struct Term {
    pub coeff: MPoly,
    pub factors: Vec<Factor>,
}

impl Term {
    pub fn new(coeff: MPoly, factors: Vec<Factor>) -> Self {
        Term { coeff, factors }
    }

    pub fn constant(coeff: MPoly) -> Self {
        Term { coeff, factors: Vec::new() }
    }
}

/// A sum of terms at one specialization level.
#[derive(Clone, Debug, PartialEq)]
pub struct TermSum {
    level: Level,
    terms: Vec<Term>,
    root_index: u32,
}

impl TermSum {
    pub fn new(level: Level, terms: Vec<Term>) -> Result<Self, ExactError> {
        let mut has_pos = false;
        let mut has_neg = false;
        for t in &terms {
            for f in &t.factors {
                if f.n().is_positive() {
                    has_pos = true;
                } else if f.n().is_negative() {
                    has_neg = true;
                }
            }
        }
        if has_pos && has_neg {
            return Err(ExactError::MixedContextSigns);
        }
        let root_index = root_index_of(&terms);
        Ok(TermSum { level, terms, root_index })
    }

    pub fn level(&self) -> Level {
        self.level
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    /// Smallest `r` with `r * nu` integral for every factor.
    pub fn root_index(&self) -> u32 {
        self.root_index
    }

    /// Expand as a truncated series in `T`.
    ///
    /// Each factor `(nu, N)` with `N > 0` contributes
    /// `(L - 1) * sum_{k >= 1} L^{-k*nu} T^{k*N}`; pure factors multiply in as
    /// constants. Coefficients are exact rational functions in `L`.
    pub fn series_expand(&self, order: usize) -> Result<TruncSeries, ExactError> {
        if self.level == Level::Hodge {
            return Err(ExactError::UnsupportedLevel("series expansion at hodge level".into()));
        }
        let t = Var::new("T");
        let mut acc = TruncSeries::zero(t.clone(), order);
        for term in &self.terms {
            let mut s = TruncSeries::constant(t.clone(), order, RatFunc::from_poly(term.coeff.clone()));
            for f in &term.factors {
                if f.n().is_zero() {
                    s = s.scale(&f.class_value()?);
                    continue;
                }
                if f.n().is_negative() {
                    return Err(ExactError::UnsupportedLevel(
                        "series expansion of a factor with N < 0".into(),
                    ));
                }
                let n = positive_exponent(f.n())? as usize;
                let nu = positive_exponent(f.nu())?;
                let mut fs = TruncSeries::zero(t.clone(), order);
                let l_minus_1 = &MPoly::var("L") - &MPoly::one();
                let mut k = 1u32;
                while (k as usize) * n <= order {
                    let coeff = RatFunc::new(l_minus_1.clone(), MPoly::var("L").pow(k * nu))?;
                    fs.set_coeff(k as usize * n, coeff);
                    k += 1;
                }
                s = s.mul(&fs)?;
            }
            acc = acc.add(&s)?;
        }
        Ok(acc)
    }

    /// Euler-characteristic specialization: `sum chi(coeff) * prod 1/nu_i`.
    ///
    /// Requires every factor pure (`N = 0`); the per-factor rule is the exact
    /// limit `(L - 1)/(L^nu - 1) -> 1/nu` as `L -> 1`.
    pub fn specialize_chi(&self) -> Result<Rational, ExactError> {
        let mut acc = Rational::zero();
        for term in &self.terms {
            let mut val = term.coeff.chi_value()?;
            if val.is_zero() {
                continue;
            }
            for f in &term.factors {
                val *= f.chi_limit()?;
            }
            acc += val;
        }
        Ok(acc)
    }

    /// Hodge specialization: substitute `L -> uv` in coefficients and
    /// reinterpret factors over `w` with `w^rootIndex = uv`.
    pub fn specialize_hodge(&self) -> Result<TermSum, ExactError> {
        let uv = &MPoly::var("u") * &MPoly::var("v");
        let l = Var::new("L");
        let terms = self
            .terms
            .iter()
            .map(|t| Term::new(t.coeff.subst(&l, &uv), t.factors.clone()))
            .collect();
        TermSum::new(Level::Hodge, terms)
    }

    /// Assemble the class-level rational function in `(L, T)`.
    pub fn to_ratfunc(&self) -> Result<RatFunc, ExactError> {
        if self.level == Level::Hodge {
            return Err(ExactError::UnsupportedLevel("class assembly of a hodge-level sum".into()));
        }
        let mut acc = RatFunc::zero();
        for term in &self.terms {
            let mut val = RatFunc::from_poly(term.coeff.clone());
            for f in &term.factors {
                val = &val * &f.class_value()?;
            }
            acc = &acc + &val;
        }
        Ok(acc)
    }

    /// Assemble the hodge-level rational function over `(u, v, w)`.
    pub fn to_ratfunc_hodge(&self) -> Result<RatFunc, ExactError> {
        let mut acc = RatFunc::zero();
        for term in &self.terms {
            let mut val = RatFunc::from_poly(term.coeff.clone());
            for f in &term.factors {
                val = &val * &f.hodge_value(self.root_index)?;
            }
            acc = &acc + &val;
        }
        Ok(acc)
    }

    /// Per-factor limit `T -> L^{-s}, L -> 1`: every factor becomes
    /// `1/(nu + s*N)` and every coefficient its Euler characteristic, giving
    /// an exact rational function in `s`.
    pub fn euler_limit(&self) -> Result<RatFunc, ExactError> {
        let mut acc = RatFunc::zero();
        for term in &self.terms {
            let chi = term.coeff.chi_value()?;
            if chi.is_zero() {
                continue;
            }
            let mut val = RatFunc::from_rational(chi);
            for f in &term.factors {
                val = &val * &f.euler_value();
            }
            acc = &acc + &val;
        }
        Ok(acc)
    }

    /// All candidate pole locations `-nu/N` of factors with `N != 0`.
    pub fn candidate_poles(&self) -> Vec<Rational> {
        let mut out: Vec<Rational> = self
            .terms
            .iter()
            .flat_map(|t| t.factors.iter().filter_map(Factor::candidate_pole))
            .collect();
        out.sort();
        out.dedup();
        out
    }
}

fn root_index_of(terms: &[Term]) -> u32 {
    let mut r = BigInt::one();
    for t in terms {
        for f in &t.factors {
            r = r.lcm(f.nu().denom());
        }
    }
    r.try_into().unwrap_or(u32::MAX)
}

impl fmt::Display for TermSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({})", t.coeff)?;
            for fac in &t.factors {
                write!(f, "*{fac}")?;
            }
        }
        if self.root_index > 1 {
            write!(f, "  [w^{} = uv]", self.root_index)?;
        }
        Ok(())
    }
}
