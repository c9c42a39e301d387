//! Sparse multivariate polynomials over exact rationals.
//!
//! Variables are named; the six value-ring variables `L, T, u, v, s, w` sort
//! before any other name, so invariants print in a stable order. Terms are
//! stored without zero coefficients and display in graded-lexicographic order
//! (`2*L^2 - L`).

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{ExactError, Rational};

/// The value-ring variable names, in canonical order.
pub const CANONICAL_VARS: [&str; 6] = ["L", "T", "u", "v", "s", "w"];

/// A named polynomial variable.
///
/// Ordering: canonical value-ring variables first (in the order of
/// [`CANONICAL_VARS`]), then all other names in natural order (digit runs
/// compare numerically, so `x1_2 < x1_10`).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Var(String);

impl Var {
    pub fn new(name: impl Into<String>) -> Self {
        Var(name.into())
    }

    pub fn name(&self) -> &str {
        &self.0
    }

    fn canonical_rank(&self) -> usize {
        CANONICAL_VARS
            .iter()
            .position(|c| *c == self.0)
            .unwrap_or(CANONICAL_VARS.len())
    }
}

impl From<&str> for Var {
    fn from(s: &str) -> Self {
        Var::new(s)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Compare strings treating maximal digit runs as numbers.
fn natural_cmp(a: &str, b: &str) -> Ordering {
    let (mut ai, mut bi) = (a.as_bytes(), b.as_bytes());
    loop {
        match (ai.first(), bi.first()) {
            (None, None) => return Ordering::Equal,
            (None, Some(_)) => return Ordering::Less,
            (Some(_), None) => return Ordering::Greater,
            (Some(&ca), Some(&cb)) => {
                if ca.is_ascii_digit() && cb.is_ascii_digit() {
                    let ea = ai.iter().position(|c| !c.is_ascii_digit()).unwrap_or(ai.len());
                    let eb = bi.iter().position(|c| !c.is_ascii_digit()).unwrap_or(bi.len());
                    let na = std::str::from_utf8(&ai[..ea]).unwrap().trim_start_matches('0');
                    let nb = std::str::from_utf8(&bi[..eb]).unwrap().trim_start_matches('0');
                    let ord = na.len().cmp(&nb.len()).then_with(|| na.cmp(nb));
                    if ord != Ordering::Equal {
                        return ord;
                    }
                    ai = &ai[ea..];
                    bi = &bi[eb..];
                } else {
                    let ord = ca.cmp(&cb);
                    if ord != Ordering::Equal {
                        return ord;
                    }
                    ai = &ai[1..];
                    bi = &bi[1..];
                }
            }
        }
    }
}

impl PartialOrd for Var {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Var {
    fn cmp(&self, other: &Self) -> Ordering {
        self.canonical_rank()
            .cmp(&other.canonical_rank())
            .then_with(|| natural_cmp(&self.0, &other.0))
    }
}

/// Sparse multivariate polynomial with [`Rational`] coefficients.
///
/// Invariants: `vars` is sorted and duplicate-free, every exponent vector has
/// length `vars.len()`, and no zero coefficient is stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MPoly {
    vars: Vec<Var>,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl MPoly {
    pub fn zero() -> Self {
        MPoly { vars: Vec::new(), terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Vec::new(), c);
        }
        MPoly { vars: Vec::new(), terms }
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(Rational::from_integer(n.into()))
    }

    /// The polynomial consisting of a single variable.
    pub fn var(name: impl Into<Var>) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(vec![1], Rational::one());
        MPoly { vars: vec![name.into()], terms }
    }

    /// `c * x^e` for a single variable.
    pub fn monomial(name: impl Into<Var>, exp: u32, c: Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        if exp == 0 {
            return Self::constant(c);
        }
        let mut terms = BTreeMap::new();
        terms.insert(vec![exp], c);
        MPoly { vars: vec![name.into()], terms }
    }

    /// Build from explicit variables and (exponent vector, coefficient) pairs.
    pub fn from_terms(vars: Vec<Var>, parts: impl IntoIterator<Item = (Vec<u32>, Rational)>) -> Self {
        let mut p = MPoly { vars, terms: BTreeMap::new() };
        let sorted = {
            let mut v = p.vars.clone();
            v.sort();
            v.dedup();
            v
        };
        if sorted != p.vars {
            // remap exponents onto the sorted variable list
            let map: Vec<usize> = p
                .vars
                .iter()
                .map(|v| sorted.iter().position(|s| s == v).unwrap())
                .collect();
            let mut terms = BTreeMap::new();
            for (exp, c) in parts {
                let mut e = vec![0u32; sorted.len()];
                for (i, x) in exp.iter().enumerate() {
                    e[map[i]] += x;
                }
                add_to(&mut terms, e, c);
            }
            p = MPoly { vars: sorted, terms };
        } else {
            for (exp, c) in parts {
                assert_eq!(exp.len(), p.vars.len(), "exponent vector length mismatch");
                add_to(&mut p.terms, exp, c);
            }
        }
        p.trim();
        p
    }

    fn trim(&mut self) {
        self.terms.retain(|_, c| !c.is_zero());
        // drop variables that no longer occur
        if self.vars.is_empty() {
            return;
        }
        let mut used = vec![false; self.vars.len()];
        for exp in self.terms.keys() {
            for (i, e) in exp.iter().enumerate() {
                if *e > 0 {
                    used[i] = true;
                }
            }
        }
        if used.iter().all(|u| *u) {
            return;
        }
        let keep: Vec<usize> = (0..self.vars.len()).filter(|i| used[*i]).collect();
        let vars: Vec<Var> = keep.iter().map(|i| self.vars[*i].clone()).collect();
        let terms = self
            .terms
            .iter()
            .map(|(exp, c)| (keep.iter().map(|i| exp[*i]).collect(), c.clone()))
            .collect();
        self.vars = vars;
        self.terms = terms;
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().map(|c| c.is_one()).unwrap_or(false)
    }

    /// `Some(c)` when the polynomial is the constant `c` (including zero).
    pub fn as_constant(&self) -> Option<Rational> {
        if self.is_zero() {
            return Some(Rational::zero());
        }
        if self.terms.len() == 1 {
            let (exp, c) = self.terms.iter().next().unwrap();
            if exp.iter().all(|e| *e == 0) {
                return Some(c.clone());
            }
        }
        None
    }

    pub fn vars(&self) -> &[Var] {
        &self.vars
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &Rational)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    pub fn degree_in(&self, var: &Var) -> u32 {
        match self.vars.iter().position(|v| v == var) {
            Some(i) => self.terms.keys().map(|e| e[i]).max().unwrap_or(0),
            None => 0,
        }
    }

    /// Align two polynomials onto the union of their variable sets.
    #[allow(clippy::type_complexity)]
    fn aligned(&self, other: &MPoly) -> (Vec<Var>, BTreeMap<Vec<u32>, Rational>, BTreeMap<Vec<u32>, Rational>) {
        if self.vars == other.vars {
            return (self.vars.clone(), self.terms.clone(), other.terms.clone());
        }
        let union: BTreeSet<Var> = self.vars.iter().chain(other.vars.iter()).cloned().collect();
        let vars: Vec<Var> = union.into_iter().collect();
        let remap = |p: &MPoly| -> BTreeMap<Vec<u32>, Rational> {
            let idx: Vec<usize> = p
                .vars
                .iter()
                .map(|v| vars.iter().position(|w| w == v).unwrap())
                .collect();
            p.terms
                .iter()
                .map(|(exp, c)| {
                    let mut e = vec![0u32; vars.len()];
                    for (i, x) in exp.iter().enumerate() {
                        e[idx[i]] = *x;
                    }
                    (e, c.clone())
                })
                .collect()
        };
        let a = remap(self);
        let b = remap(other);
        (vars, a, b)
    }

    pub fn pow(&self, mut n: u32) -> MPoly {
        let mut result = MPoly::one();
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                result = &result * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn scale(&self, c: &Rational) -> MPoly {
        if c.is_zero() {
            return MPoly::zero();
        }
        let mut p = self.clone();
        for v in p.terms.values_mut() {
            *v *= c;
        }
        p
    }

    /// Substitute a polynomial for one variable.
    pub fn subst(&self, var: &Var, replacement: &MPoly) -> MPoly {
        let Some(i) = self.vars.iter().position(|v| v == var) else {
            return self.clone();
        };
        let max_exp = self.terms.keys().map(|e| e[i]).max().unwrap_or(0);
        let mut powers = Vec::with_capacity(max_exp as usize + 1);
        powers.push(MPoly::one());
        for _ in 1..=max_exp {
            powers.push(&powers[powers.len() - 1] * replacement);
        }
        let mut acc = MPoly::zero();
        for (exp, c) in &self.terms {
            let mut rest_exp = exp.clone();
            let e = rest_exp[i];
            rest_exp[i] = 0;
            let rest = MPoly::from_terms(self.vars.clone(), [(rest_exp, c.clone())]);
            acc = &acc + &(&rest * &powers[e as usize]);
        }
        acc
    }

    /// Evaluate with every variable set to the given rational values.
    pub fn eval(&self, point: &BTreeMap<Var, Rational>) -> Result<Rational, ExactError> {
        let mut acc = Rational::zero();
        for (exp, c) in &self.terms {
            let mut term = c.clone();
            for (i, e) in exp.iter().enumerate() {
                if *e == 0 {
                    continue;
                }
                let x = point
                    .get(&self.vars[i])
                    .ok_or_else(|| ExactError::SymbolicClass(self.vars[i].name().to_string()))?;
                let mut pw = Rational::one();
                for _ in 0..*e {
                    pw *= x;
                }
                term *= pw;
            }
            acc += term;
        }
        Ok(acc)
    }

    /// Evaluate at a single-variable point; other variables must be absent.
    pub fn eval_univar(&self, var: &Var, x: &Rational) -> Result<Rational, ExactError> {
        let mut point = BTreeMap::new();
        point.insert(var.clone(), x.clone());
        self.eval(&point)
    }

    /// Sum of coefficients, i.e. evaluation at 1 of every variable — the
    /// Euler-characteristic specialization for value-ring polynomials.
    ///
    /// Errors on opaque class symbols (any variable outside the canonical
    /// six), for which evaluation at 1 has no meaning.
    pub fn chi_value(&self) -> Result<Rational, ExactError> {
        for v in &self.vars {
            if v.canonical_rank() == CANONICAL_VARS.len() {
                return Err(ExactError::SymbolicClass(v.name().to_string()));
            }
        }
        Ok(self.terms.values().sum())
    }

    /// True when every coefficient is an integer.
    pub fn has_integer_coeffs(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// True when every variable is among the given names.
    pub fn vars_within(&self, allowed: &[&str]) -> bool {
        self.vars.iter().all(|v| allowed.contains(&v.name()))
    }

    /// Value at an integer point of a univariate integer polynomial in `L`.
    pub fn eval_at_prime(&self, p: u64) -> Result<BigInt, ExactError> {
        if !self.has_integer_coeffs() {
            return Err(ExactError::NonIntegerCoefficients);
        }
        if !self.vars_within(&["L"]) {
            return Err(ExactError::SymbolicClass(format!(
                "expected a polynomial in L, found variables {:?}",
                self.vars.iter().map(Var::name).collect::<Vec<_>>()
            )));
        }
        let x = BigInt::from(p);
        let mut acc = BigInt::zero();
        for (exp, c) in &self.terms {
            let e = exp.first().copied().unwrap_or(0);
            acc += c.to_integer() * x.pow(e);
        }
        Ok(acc)
    }

    /// Dense coefficient list when the polynomial involves at most one
    /// variable. Returns `(variable, ascending coefficients)`; the variable is
    /// `None` for constants.
    pub fn as_univariate(&self) -> Option<(Option<Var>, Vec<Rational>)> {
        match self.vars.len() {
            0 => Some((None, if self.is_zero() { vec![] } else { vec![self.as_constant().unwrap()] })),
            1 => {
                let deg = self.terms.keys().map(|e| e[0]).max().unwrap_or(0);
                let mut coeffs = vec![Rational::zero(); deg as usize + 1];
                for (exp, c) in &self.terms {
                    coeffs[exp[0] as usize] = c.clone();
                }
                Some((Some(self.vars[0].clone()), coeffs))
            }
            _ => None,
        }
    }

    /// Build a univariate polynomial from ascending dense coefficients.
    pub fn from_univariate(var: &Var, coeffs: &[Rational]) -> MPoly {
        MPoly::from_terms(
            vec![var.clone()],
            coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (vec![i as u32], c.clone())),
        )
    }

    /// Split into dense coefficients with respect to one variable; entry `k`
    /// is the (multivariate) coefficient of `var^k`.
    pub fn coeffs_in(&self, var: &Var) -> Vec<MPoly> {
        let Some(i) = self.vars.iter().position(|v| v == var) else {
            return vec![self.clone()];
        };
        let deg = self.terms.keys().map(|e| e[i]).max().unwrap_or(0);
        let mut out = vec![MPoly::zero(); deg as usize + 1];
        for (exp, c) in &self.terms {
            let k = exp[i] as usize;
            let mut e = exp.clone();
            e[i] = 0;
            out[k] = &out[k] + &MPoly::from_terms(self.vars.clone(), [(e, c.clone())]);
        }
        out
    }

    /// Leading coefficient in graded-lexicographic order.
    pub fn leading_coeff(&self) -> Rational {
        self.sorted_terms()
            .first()
            .map(|(_, c)| (*c).clone())
            .unwrap_or_else(Rational::zero)
    }

    /// Per-variable minimum exponent over all terms (the monomial content).
    pub fn monomial_content(&self) -> Vec<(Var, u32)> {
        if self.is_zero() {
            return Vec::new();
        }
        let mut mins = vec![u32::MAX; self.vars.len()];
        for exp in self.terms.keys() {
            for (i, e) in exp.iter().enumerate() {
                mins[i] = mins[i].min(*e);
            }
        }
        self.vars
            .iter()
            .zip(mins)
            .filter(|(_, m)| *m > 0)
            .map(|(v, m)| (v.clone(), m))
            .collect()
    }

    /// Divide out `var^k`; panics if some term has a smaller exponent.
    pub fn shift_down(&self, var: &Var, k: u32) -> MPoly {
        if k == 0 {
            return self.clone();
        }
        let i = self.vars.iter().position(|v| v == var).expect("variable not present");
        let terms = self
            .terms
            .iter()
            .map(|(exp, c)| {
                let mut e = exp.clone();
                assert!(e[i] >= k, "monomial not divisible");
                e[i] -= k;
                (e, c.clone())
            })
            .collect::<Vec<_>>();
        MPoly::from_terms(self.vars.clone(), terms)
    }

    /// Terms sorted for display: total degree descending, then exponent
    /// vector descending lexicographically.
    fn sorted_terms(&self) -> Vec<(&Vec<u32>, &Rational)> {
        let mut ts: Vec<_> = self.terms.iter().collect();
        ts.sort_by(|(ea, _), (eb, _)| {
            let da: u32 = ea.iter().sum();
            let db: u32 = eb.iter().sum();
            db.cmp(&da).then_with(|| eb.cmp(ea))
        });
        ts
    }
}

fn add_to(terms: &mut BTreeMap<Vec<u32>, Rational>, exp: Vec<u32>, c: Rational) {
    use std::collections::btree_map::Entry;
    match terms.entry(exp) {
        Entry::Vacant(e) => {
            if !c.is_zero() {
                e.insert(c);
            }
        }
        Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

impl Add for &MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        let (vars, a, b) = self.aligned(rhs);
        let mut terms = a;
        for (exp, c) in b {
            add_to(&mut terms, exp, c);
        }
        let mut p = MPoly { vars, terms };
        p.trim();
        p
    }
}

impl Sub for &MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        self + &(-rhs)
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        let mut p = self.clone();
        for c in p.terms.values_mut() {
            *c = -c.clone();
        }
        p
    }
}

impl Mul for &MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        if self.is_zero() || rhs.is_zero() {
            return MPoly::zero();
        }
        let (vars, a, b) = self.aligned(rhs);
        let mut terms = BTreeMap::new();
        for (ea, ca) in &a {
            for (eb, cb) in &b {
                let exp: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                add_to(&mut terms, exp, ca * cb);
            }
        }
        let mut p = MPoly { vars, terms };
        p.trim();
        p
    }
}

macro_rules! forward_owned_ops {
    ($($trait:ident :: $method:ident),*) => {$(
        impl $trait for MPoly {
            type Output = MPoly;
            fn $method(self, rhs: MPoly) -> MPoly { (&self).$method(&rhs) }
        }
    )*};
}
forward_owned_ops!(Add::add, Sub::sub, Mul::mul);

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        -&self
    }
}

fn fmt_rational_magnitude(c: &Rational) -> String {
    let c = c.abs();
    if c.is_integer() {
        c.to_integer().to_string()
    } else {
        format!("{}/{}", c.numer().abs(), c.denom())
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (exp, c)) in self.sorted_terms().into_iter().enumerate() {
            if i == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let mut parts: Vec<String> = Vec::new();
            let mag = fmt_rational_magnitude(c);
            let is_const = exp.iter().all(|e| *e == 0);
            if mag != "1" || is_const {
                parts.push(mag);
            }
            for (j, e) in exp.iter().enumerate() {
                match e {
                    0 => {}
                    1 => parts.push(self.vars[j].to_string()),
                    _ => parts.push(format!("{}^{}", self.vars[j], e)),
                }
            }
            f.write_str(&parts.join("*"))?;
        }
        Ok(())
    }
}
