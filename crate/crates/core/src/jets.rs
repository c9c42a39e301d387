//! Equations of jet spaces of affine varieties by truncated power-series
//! substitution.
//!
//! For a system in variables `x1..xm` and level `n`, each variable becomes a
//! truncated series `xj_0 + xj_1*t + ... + xj_n*t^n`; substituting into an
//! input polynomial and collecting coefficients of `t^0..t^n` gives the jet
//! equations. The `t^k` group only involves jet coefficients of index at most
//! `k`, so the systems are triangular by level.

use std::fmt;

use thiserror::Error;

use crate::exactalg::{parse_poly, ExactError, MPoly, RatFunc, TruncSeries, Var};

#[derive(Debug, Error)]
pub enum JetError {
    #[error("series order mismatch: {0}")]
    OrderMismatch(String),
    #[error("polynomial {index} is zero")]
    ZeroPolynomial { index: usize },
    #[error("polynomial {index} has non-integer coefficients")]
    NonIntegerCoefficients { index: usize },
    #[error("polynomial {index} uses variable `{var}`; only x1..x{num_vars} are allowed")]
    UnknownVariable { index: usize, var: String, num_vars: usize },
    #[error(transparent)]
    Exact(#[from] ExactError),
}

/// An affine variety given by integer-coefficient polynomials in `x1..xm`.
#[derive(Clone, Debug, PartialEq)]
pub struct AffineSystem {
    num_vars: usize,
    polys: Vec<MPoly>,
}

impl AffineSystem {
    /// Validates that every polynomial is nonzero, has integer coefficients
    /// (so reduction mod p is defined) and only uses `x1..xm`.
    pub fn new(num_vars: usize, polys: Vec<MPoly>) -> Result<Self, JetError> {
        for (index, p) in polys.iter().enumerate() {
            if p.is_zero() {
                return Err(JetError::ZeroPolynomial { index });
            }
            if !p.has_integer_coeffs() {
                return Err(JetError::NonIntegerCoefficients { index });
            }
            for v in p.vars() {
                if ambient_var_index(v.name(), num_vars).is_none() {
                    return Err(JetError::UnknownVariable {
                        index,
                        var: v.name().to_string(),
                        num_vars,
                    });
                }
            }
        }
        Ok(AffineSystem { num_vars, polys })
    }

    /// Parse a polynomial file: one polynomial per line in the canonical text
    /// form over `x1..xm`; blank lines and `#` comments are skipped. The
    /// number of variables is the largest index mentioned.
    pub fn parse(text: &str) -> Result<Self, JetError> {
        let mut polys = Vec::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            polys.push(parse_poly(line)?);
        }
        let mut num_vars = 0;
        for p in &polys {
            for v in p.vars() {
                if let Some(j) = parse_x_index(v.name()) {
                    num_vars = num_vars.max(j);
                }
            }
        }
        AffineSystem::new(num_vars, polys)
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn polys(&self) -> &[MPoly] {
        &self.polys
    }
}

fn parse_x_index(name: &str) -> Option<usize> {
    let rest = name.strip_prefix('x')?;
    let j: usize = rest.parse().ok()?;
    (j >= 1).then_some(j)
}

fn ambient_var_index(name: &str, num_vars: usize) -> Option<usize> {
    parse_x_index(name).filter(|j| *j <= num_vars)
}

/// Name of the level-`k` jet coefficient of ambient variable `xj`.
pub fn jet_var(j: usize, k: usize) -> Var {
    Var::new(format!("x{j}_{k}"))
}

/// The equations of the level-`n` jet space of an affine system, grouped by
/// input polynomial and `t`-degree.
#[derive(Clone, Debug, PartialEq)]
pub struct JetSystem {
    level: usize,
    num_ambient_vars: usize,
    /// `groups[i][k]` is the coefficient of `t^k` in the substituted
    /// polynomial `i`; each inner list has length `level + 1`.
    groups: Vec<Vec<MPoly>>,
}

impl JetSystem {
    pub fn level(&self) -> usize {
        self.level
    }

    pub fn num_ambient_vars(&self) -> usize {
        self.num_ambient_vars
    }

    /// Number of jet coefficients `m * (n + 1)`.
    pub fn num_vars(&self) -> usize {
        self.num_ambient_vars * (self.level + 1)
    }

    pub fn groups(&self) -> &[Vec<MPoly>] {
        &self.groups
    }

    /// All equations of one `t`-degree across the input polynomials.
    pub fn equations_at(&self, degree: usize) -> impl Iterator<Item = &MPoly> {
        self.groups.iter().map(move |g| &g[degree])
    }

    /// Total equation count `(n + 1) * |polys|`.
    pub fn num_equations(&self) -> usize {
        self.groups.len() * (self.level + 1)
    }

    /// Jet variables in deterministic order: ambient index outer, level inner.
    pub fn variables(&self) -> Vec<Var> {
        let mut out = Vec::with_capacity(self.num_vars());
        for j in 1..=self.num_ambient_vars {
            for k in 0..=self.level {
                out.push(jet_var(j, k));
            }
        }
        out
    }

    /// Drop the top `t`-degree group, giving the level `n - 1` system.
    pub fn truncated(&self) -> Option<JetSystem> {
        if self.level == 0 {
            return None;
        }
        Some(JetSystem {
            level: self.level - 1,
            num_ambient_vars: self.num_ambient_vars,
            groups: self.groups.iter().map(|g| g[..self.level].to_vec()).collect(),
        })
    }
}

impl fmt::Display for JetSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for k in 0..=self.level {
            writeln!(f, "# t^{k}")?;
            for g in &self.groups {
                writeln!(f, "{}", g[k])?;
            }
        }
        Ok(())
    }
}

/// Coefficients of `t^0..t^n` of `p` evaluated on one truncated series per
/// variable of `p` (matched by position).
pub fn truncate_compose(p: &MPoly, series: &[TruncSeries], order: usize) -> Result<TruncSeries, JetError> {
    if series.len() != p.vars().len() {
        return Err(JetError::OrderMismatch(format!(
            "{} series supplied for {} variables",
            series.len(),
            p.vars().len()
        )));
    }
    for s in series {
        if s.order() < order {
            return Err(JetError::OrderMismatch(format!(
                "series of order {} cannot be composed at order {order}",
                s.order()
            )));
        }
    }
    let t = Var::new("T");
    // powers of each variable series, computed on demand
    let mut powers: Vec<Vec<TruncSeries>> = series
        .iter()
        .map(|s| Ok(vec![TruncSeries::constant(t.clone(), order, RatFunc::one()), s.truncated(order)?]))
        .collect::<Result<_, ExactError>>()?;
    let mut acc = TruncSeries::zero(t.clone(), order);
    for (exp, c) in p.terms() {
        let mut term = TruncSeries::constant(t.clone(), order, RatFunc::from_rational(c.clone()));
        for (i, e) in exp.iter().enumerate() {
            if *e == 0 {
                continue;
            }
            while powers[i].len() <= *e as usize {
                let next = powers[i].last().unwrap().mul(&powers[i][1])?;
                powers[i].push(next);
            }
            term = term.mul(&powers[i][*e as usize])?;
        }
        acc = acc.add(&term)?;
    }
    Ok(acc)
}

/// Generic truncated series for ambient variable `xj`: `xj_0 + xj_1 t + ...`.
fn generic_jet_series(j: usize, order: usize) -> TruncSeries {
    let coeffs = (0..=order)
        .map(|k| RatFunc::from_poly(MPoly::var(jet_var(j, k))))
        .collect();
    TruncSeries::new(Var::new("T"), coeffs).expect("order + 1 coefficients")
}

/// Equations of the level-`n` jet space: coefficients of `t^0..t^n` of each
/// input polynomial evaluated on generic jets.
pub fn jet_equations(sys: &AffineSystem, level: usize) -> Result<JetSystem, JetError> {
    let mut groups = Vec::with_capacity(sys.polys.len());
    for p in &sys.polys {
        let series: Vec<TruncSeries> = p
            .vars()
            .iter()
            .map(|v| generic_jet_series(ambient_var_index(v.name(), sys.num_vars).expect("validated"), level))
            .collect();
        let composed = truncate_compose(p, &series, level)?;
        let group: Vec<MPoly> = composed
            .coeffs()
            .iter()
            .map(|c| c.as_poly().cloned().expect("polynomial coefficients"))
            .collect();
        groups.push(group);
    }
    Ok(JetSystem {
        level,
        num_ambient_vars: sys.num_vars,
        groups,
    })
}
