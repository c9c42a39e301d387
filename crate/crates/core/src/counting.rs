//! Brute-force exact counting over finite rings, generating-series assembly,
//! and rational-function fitting/verification.
//!
//! The three counting modes share one enumeration strategy: candidates are
//! built digit by digit (congruence mode) or jet level by jet level, and a
//! branch is abandoned as soon as the partial solution fails the equations it
//! already determines. For congruences this works because a solution mod
//! `p^{n+1}` reduces to a solution mod `p^{k+1}` for every `k <= n`; for jet
//! systems because the `t^k` equation group only involves jet coefficients of
//! level at most `k`. Workers partition the outermost digit block and
//! aggregate by integer summation, so counts are identical for any thread
//! count.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::exactalg::{ExactError, MPoly, RatFunc, Rational, TruncSeries, Var};
use crate::jets::{jet_equations, jet_var, AffineSystem, JetError, JetSystem};

#[derive(Debug, Error)]
pub enum CountError {
    #[error("enumeration of {required} points exceeds the budget of {budget}")]
    BudgetExceeded { required: u128, budget: u64 },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("contact counting needs exactly one polynomial, got {0}")]
    ContactNeedsOnePoly(usize),
    #[error("series has {have} coefficients but the fit needs at least {needed}")]
    InsufficientData { needed: usize, have: usize },
    #[error("no rational function with the requested denominator shape fits the series")]
    NoFit,
    #[error("series coefficients are not rational constants")]
    NonNumericSeries,
    #[error("rational function has no expansion at T = 0")]
    NonExpandable,
    #[error(transparent)]
    Jet(#[from] JetError),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

/// Enumeration budget and worker count.
#[derive(Clone, Copy, Debug)]
pub struct CountOptions {
    /// Upper bound on the ambient enumeration size `p^{vars}`. Exceeding it
    /// is an error, never a silent truncation.
    pub budget: u64,
    pub threads: usize,
}

pub const DEFAULT_BUDGET: u64 = 100_000_000;

impl Default for CountOptions {
    fn default() -> Self {
        CountOptions { budget: DEFAULT_BUDGET, threads: 1 }
    }
}

/// What a [`CountSeries`] counts.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CountMode {
    /// Solutions of the system mod `p^{n+1}`.
    Congruence,
    /// Points of the level-`n` jet system over the field with `p` elements.
    JetPoints,
    /// Ambient `n`-jets with contact order exactly `n` along the hypersurface.
    Contact,
}

impl std::fmt::Display for CountMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            CountMode::Congruence => "congruence",
            CountMode::JetPoints => "jet",
            CountMode::Contact => "contact",
        })
    }
}

/// A prime together with a sequence of exact counts indexed by level.
#[derive(Clone, Debug, PartialEq)]
pub struct CountSeries {
    pub p: u64,
    pub mode: CountMode,
    pub counts: Vec<BigInt>,
}

impl CountSeries {
    pub fn new(p: u64, mode: CountMode, counts: Vec<BigInt>) -> Self {
        assert!(counts.iter().all(|c| !c.is_negative()), "counts must be non-negative");
        CountSeries { p, mode, counts }
    }

    /// Congruence-mode sanity bound: every solution mod `p^{n+2}` reduces to
    /// one mod `p^{n+1}`, so `counts[n+1] <= p^m * counts[n]`.
    pub fn reduction_compatible(&self, num_vars: usize) -> bool {
        let factor = BigInt::from(self.p).pow(num_vars as u32);
        self.counts
            .windows(2)
            .all(|w| w[1].clone() <= &w[0] * &factor)
    }
}

fn check_prime(p: u64) -> Result<(), CountError> {
    if p < 2 {
        return Err(CountError::NotPrime(p));
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return Err(CountError::NotPrime(p));
        }
        d += 1;
    }
    Ok(())
}

fn check_budget(p: u64, vars: u32, budget: u64) -> Result<(), CountError> {
    let required = (p as u128).checked_pow(vars).unwrap_or(u128::MAX);
    if required > budget as u128 {
        return Err(CountError::BudgetExceeded { required, budget });
    }
    Ok(())
}

// ---- compiled evaluation over Z/r ----------------------------------------

/// A polynomial lowered to machine words mod `r`.
struct CompiledPoly {
    terms: Vec<(u64, Vec<(usize, u32)>)>,
}

fn compile(p: &MPoly, var_index: &BTreeMap<Var, usize>, r: u64) -> CompiledPoly {
    let terms = p
        .terms()
        .map(|(exp, c)| {
            debug_assert!(c.is_integer());
            let coeff = c.to_integer().mod_floor(&BigInt::from(r)).to_u64().expect("reduced mod r");
            let monomial = exp
                .iter()
                .enumerate()
                .filter(|(_, e)| **e > 0)
                .map(|(i, e)| (var_index[&p.vars()[i]], *e))
                .collect();
            (coeff, monomial)
        })
        .collect();
    CompiledPoly { terms }
}

impl CompiledPoly {
    fn eval(&self, x: &[u64], r: u64) -> u64 {
        let mut acc: u128 = 0;
        for (coeff, monomial) in &self.terms {
            let mut t = *coeff as u128;
            for (idx, exp) in monomial {
                let base = x[*idx] as u128;
                for _ in 0..*exp {
                    t = (t * base) % r as u128;
                }
            }
            acc = (acc + t) % r as u128;
        }
        acc as u64
    }
}

/// Split `0..total` into near-equal chunks for the worker pool.
fn chunks(total: u64, threads: usize) -> Vec<(u64, u64)> {
    let threads = threads.max(1).min(total.max(1) as usize);
    let size = total / threads as u64;
    let rem = total % threads as u64;
    let mut out = Vec::with_capacity(threads);
    let mut start = 0;
    for i in 0..threads as u64 {
        let len = size + u64::from(i < rem);
        out.push((start, start + len));
        start += len;
    }
    out
}

fn run_partitioned(total0: u64, threads: usize, work: impl Fn(u64, u64) -> u64 + Sync) -> u64 {
    if threads <= 1 {
        return work(0, total0);
    }
    let work = &work;
    std::thread::scope(|scope| {
        let handles: Vec<_> = chunks(total0, threads)
            .into_iter()
            .map(|(a, b)| scope.spawn(move || work(a, b)))
            .collect();
        handles.into_iter().map(|h| h.join().expect("counting worker")).sum()
    })
}

/// Write the base-`p` digits of `index` into `digits`.
fn decode_digits(mut index: u64, p: u64, digits: &mut [u64]) {
    for d in digits.iter_mut() {
        *d = index % p;
        index /= p;
    }
}

// ---- congruence counting --------------------------------------------------

/// Number of solutions of the system mod `p^{level+1}`, by pruned digit-tree
/// enumeration of `(Z/p^{level+1})^m`.
pub fn count_congruence(
    sys: &AffineSystem,
    p: u64,
    level: u32,
    opts: &CountOptions,
) -> Result<u64, CountError> {
    check_prime(p)?;
    let m = sys.num_vars();
    check_budget(p, (level + 1) * m as u32, opts.budget)?;
    let r = p.pow(level + 1);
    let var_index: BTreeMap<Var, usize> = (1..=m).map(|j| (Var::new(format!("x{j}")), j - 1)).collect();
    let polys: Vec<CompiledPoly> = sys.polys().iter().map(|q| compile(q, &var_index, r)).collect();

    let total0 = p.pow(m as u32);
    let count = run_partitioned(total0, opts.threads, |start, end| {
        let mut digits = vec![0u64; m];
        let mut x = vec![0u64; m];
        let mut total = 0u64;
        for combo in start..end {
            decode_digits(combo, p, &mut digits);
            x.copy_from_slice(&digits);
            total += congruence_rec(&polys, p, r, level, 0, &mut x, 1);
        }
        total
    });
    Ok(count)
}

/// Count solutions below a fixed level-0 assignment. `pk = p^k` scales the
/// digits contributed at level `k`.
fn congruence_rec(
    polys: &[CompiledPoly],
    p: u64,
    r: u64,
    level: u32,
    k: u32,
    x: &mut [u64],
    pk: u64,
) -> u64 {
    let modulus = pk * p; // p^{k+1}
    if polys.iter().any(|q| q.eval(x, r) % modulus != 0) {
        return 0;
    }
    if k == level {
        return 1;
    }
    let m = x.len();
    let mut digits = vec![0u64; m];
    let mut count = 0;
    let next_pk = modulus;
    for combo in 0..p.pow(m as u32) {
        decode_digits(combo, p, &mut digits);
        for j in 0..m {
            x[j] += digits[j] * next_pk;
        }
        count += congruence_rec(polys, p, r, level, k + 1, x, next_pk);
        for j in 0..m {
            x[j] -= digits[j] * next_pk;
        }
    }
    count
}

// ---- jet-point and contact counting ---------------------------------------

/// Layout of jet coefficients for compiled evaluation: level-major, so the
/// block of level `k` is contiguous and filled when the recursion reaches it.
fn jet_var_index(m: usize, level: usize) -> BTreeMap<Var, usize> {
    let mut map = BTreeMap::new();
    for j in 1..=m {
        for k in 0..=level {
            map.insert(jet_var(j, k), k * m + (j - 1));
        }
    }
    map
}

/// Number of points of the jet system over the field with `p` elements, by
/// level-by-level enumeration with early exit on failed equation groups.
pub fn count_jet_points(js: &JetSystem, p: u64, opts: &CountOptions) -> Result<u64, CountError> {
    check_prime(p)?;
    check_budget(p, js.num_vars() as u32, opts.budget)?;
    let m = js.num_ambient_vars();
    let n = js.level();
    let var_index = jet_var_index(m, n);
    // groups_at[k] = all t^k equations across the input polynomials
    let groups_at: Vec<Vec<CompiledPoly>> = (0..=n)
        .map(|k| js.equations_at(k).map(|q| compile(q, &var_index, p)).collect())
        .collect();

    let total0 = p.pow(m as u32);
    let count = run_partitioned(total0, opts.threads, |start, end| {
        let mut x = vec![0u64; m * (n + 1)];
        let mut total = 0u64;
        for combo in start..end {
            decode_digits(combo, p, &mut x[0..m]);
            total += jet_rec(&groups_at, p, 0, n, &mut x, m);
        }
        total
    });
    Ok(count)
}

fn jet_rec(groups_at: &[Vec<CompiledPoly>], p: u64, k: usize, n: usize, x: &mut [u64], m: usize) -> u64 {
    if groups_at[k].iter().any(|q| q.eval(x, p) != 0) {
        return 0;
    }
    if k == n {
        return 1;
    }
    let mut count = 0;
    let block = (k + 1) * m..(k + 2) * m;
    for combo in 0..p.pow(m as u32) {
        decode_digits(combo, p, &mut x[block.clone()]);
        count += jet_rec(groups_at, p, k + 1, n, x, m);
    }
    for i in block {
        x[i] = 0;
    }
    count
}

/// Number of ambient `n`-jets over the field with `p` elements on which the
/// (single) polynomial has contact order exactly `n`: the `t^0..t^{n-1}`
/// coefficients of the substituted polynomial vanish and the `t^n` one does
/// not.
pub fn count_contact(
    sys: &AffineSystem,
    p: u64,
    level: u32,
    opts: &CountOptions,
) -> Result<u64, CountError> {
    check_prime(p)?;
    if sys.polys().len() != 1 {
        return Err(CountError::ContactNeedsOnePoly(sys.polys().len()));
    }
    let m = sys.num_vars();
    let n = level as usize;
    check_budget(p, ((n + 1) * m) as u32, opts.budget)?;
    let js = jet_equations(sys, n)?;
    let var_index = jet_var_index(m, n);
    let eq_at: Vec<CompiledPoly> = (0..=n)
        .map(|k| compile(&js.groups()[0][k], &var_index, p))
        .collect();

    let total0 = p.pow(m as u32);
    let count = run_partitioned(total0, opts.threads, |start, end| {
        let mut x = vec![0u64; m * (n + 1)];
        let mut total = 0u64;
        for combo in start..end {
            decode_digits(combo, p, &mut x[0..m]);
            total += contact_rec(&eq_at, p, 0, n, &mut x, m);
        }
        total
    });
    Ok(count)
}

fn contact_rec(eq_at: &[CompiledPoly], p: u64, k: usize, n: usize, x: &mut [u64], m: usize) -> u64 {
    let value = eq_at[k].eval(x, p);
    if k == n {
        return u64::from(value != 0);
    }
    if value != 0 {
        return 0;
    }
    let mut count = 0;
    let block = (k + 1) * m..(k + 2) * m;
    for combo in 0..p.pow(m as u32) {
        decode_digits(combo, p, &mut x[block.clone()]);
        count += contact_rec(eq_at, p, k + 1, n, x, m);
    }
    for i in block {
        x[i] = 0;
    }
    count
}

// ---- series assembly, fitting, verification --------------------------------

/// Package counts as a truncated series in `T`. Empty count lists carry no
/// series (a truncated series has at least its order-0 coefficient).
pub fn assemble_series(counts: &CountSeries) -> Option<TruncSeries> {
    if counts.counts.is_empty() {
        return None;
    }
    let coeffs: Vec<Rational> = counts
        .counts
        .iter()
        .map(|c| Rational::from_integer(c.clone()))
        .collect();
    Some(TruncSeries::from_rationals(Var::new("T"), &coeffs).expect("non-empty"))
}

/// Denominator shape `prod_i (1 - p^{a_i} T^{b_i})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DenominatorShape {
    pub factors: Vec<(i64, u32)>,
}

impl DenominatorShape {
    pub fn new(factors: Vec<(i64, u32)>) -> Self {
        assert!(!factors.is_empty(), "a denominator shape needs at least one factor");
        assert!(factors.iter().all(|(_, b)| *b > 0), "T-exponents must be positive");
        DenominatorShape { factors }
    }

    /// The denominator polynomial in `T` at a concrete prime.
    pub fn poly(&self, p: u64) -> MPoly {
        let mut acc = MPoly::one();
        for (a, b) in &self.factors {
            let pa = if *a >= 0 {
                Rational::from_integer(BigInt::from(p).pow(*a as u32))
            } else {
                Rational::new(1.into(), BigInt::from(p).pow(a.unsigned_abs() as u32))
            };
            let f = &MPoly::one() - &MPoly::monomial("T", *b, pa);
            acc = &acc * &f;
        }
        acc
    }

    pub fn degree(&self) -> u32 {
        self.factors.iter().map(|(_, b)| b).sum()
    }
}

const FIT_MARGIN: usize = 2;

/// Solve for a numerator so that `numerator / shape` reproduces the series.
///
/// The system is triangular: multiplying the series by the denominator must
/// leave a polynomial of degree at most `max_numer_degree` (default: the
/// denominator degree). Held-out coefficients — at least [`FIT_MARGIN`] of
/// them beyond the numerator degree — must come out zero, otherwise the shape
/// does not fit.
pub fn fit_rational(
    series: &TruncSeries,
    shape: &DenominatorShape,
    p: u64,
    max_numer_degree: Option<usize>,
) -> Result<RatFunc, CountError> {
    let coeffs = series.constant_coeffs().ok_or(CountError::NonNumericSeries)?;
    let deg_d = shape.degree() as usize;
    let d_max = max_numer_degree.unwrap_or(deg_d);
    let needed = deg_d + d_max + FIT_MARGIN;
    if coeffs.len() < needed {
        return Err(CountError::InsufficientData { needed, have: coeffs.len() });
    }
    let denom = shape.poly(p);
    let (_, dense) = denom.as_univariate().expect("univariate in T");
    // q = denominator * series, truncated
    let mut q = vec![Rational::zero(); coeffs.len()];
    for (j, qj) in q.iter_mut().enumerate() {
        for (i, di) in dense.iter().enumerate().take(j + 1) {
            if !di.is_zero() {
                *qj += di * &coeffs[j - i];
            }
        }
    }
    if q.iter().skip(d_max + 1).any(|c| !c.is_zero()) {
        return Err(CountError::NoFit);
    }
    let numer = MPoly::from_univariate(&Var::new("T"), &q[..=d_max.min(q.len() - 1)]);
    Ok(RatFunc::new(numer, denom)?)
}

/// True iff the Taylor coefficients of `f` at `T = 0` match every coefficient
/// of the series.
pub fn verify_rational(series: &TruncSeries, f: &RatFunc) -> Result<bool, CountError> {
    let expansion = f
        .taylor_in(series.var(), series.order())
        .map_err(|e| match e {
            ExactError::NonExpandable => CountError::NonExpandable,
            other => CountError::Exact(other),
        })?;
    Ok(series
        .coeffs()
        .iter()
        .zip(expansion.coeffs())
        .all(|(a, b)| a.equal(b)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn opts() -> CountOptions {
        CountOptions::default()
    }

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    /// Independent oracle: full enumeration of (Z/p^{n+1})^m with BigInt
    /// evaluation, no pruning, no compiled arithmetic.
    fn naive_congruence(sys: &AffineSystem, p: u64, level: u32) -> u64 {
        let m = sys.num_vars();
        let r = BigInt::from(p.pow(level + 1));
        let total = p.pow((level + 1) * m as u32);
        let mut count = 0;
        for combo in 0..total {
            let mut x = combo;
            let point: BTreeMap<Var, Rational> = (1..=m)
                .map(|j| {
                    let v = x % p.pow(level + 1);
                    x /= p.pow(level + 1);
                    (Var::new(format!("x{j}")), q(v as i64))
                })
                .collect();
            let ok = sys.polys().iter().all(|f| {
                let val = f.eval(&point).unwrap();
                val.to_integer().mod_floor(&r).is_zero()
            });
            if ok {
                count += 1;
            }
        }
        count
    }

    #[test]
    fn congruence_matches_naive_enumeration() {
        for (text, p, n) in [("x2 - x1^2", 2u64, 2u32), ("x1*x2", 3, 1), ("x2^2 - x1^3", 2, 2)] {
            let sys = AffineSystem::parse(text).unwrap();
            let fast = count_congruence(&sys, p, n, &opts()).unwrap();
            let slow = naive_congruence(&sys, p, n);
            assert_eq!(fast, slow, "{text} p={p} n={n}");
        }
    }

    #[test]
    fn congruence_closed_forms() {
        // parabola: p^{n+1}
        let parabola = AffineSystem::parse("x2 - x1^2").unwrap();
        assert_eq!(count_congruence(&parabola, 3, 2, &opts()).unwrap(), 27);
        // node: (n+2)p^{n+1} - (n+1)p^n
        let node = AffineSystem::parse("x1*x2").unwrap();
        assert_eq!(count_congruence(&node, 3, 1, &opts()).unwrap(), 21);
        // cusp at p=2, n=1: p(2p-1)
        let cusp = AffineSystem::parse("x2^2 - x1^3").unwrap();
        assert_eq!(count_congruence(&cusp, 2, 1, &opts()).unwrap(), 6);
    }

    #[test]
    fn budget_is_enforced() {
        let sys = AffineSystem::parse("x1*x2").unwrap();
        let tight = CountOptions { budget: 10, threads: 1 };
        match count_congruence(&sys, 3, 1, &tight) {
            Err(CountError::BudgetExceeded { required, budget }) => {
                assert_eq!(required, 81);
                assert_eq!(budget, 10);
            }
            other => panic!("expected BudgetExceeded, got {other:?}"),
        }
    }

    #[test]
    fn jet_points_match_classes() {
        // cusp level 1 at p=3: 2p^2 - p = 15
        let cusp = AffineSystem::parse("x2^2 - x1^3").unwrap();
        let js = jet_equations(&cusp, 1).unwrap();
        assert_eq!(count_jet_points(&js, 3, &opts()).unwrap(), 15);
        // cusp level 0 at p=5: p
        let js0 = jet_equations(&cusp, 0).unwrap();
        assert_eq!(count_jet_points(&js0, 5, &opts()).unwrap(), 5);
        // node level 2 at p=2: 4*8 - 3*4 = 20
        let node = AffineSystem::parse("x1*x2").unwrap();
        let js2 = jet_equations(&node, 2).unwrap();
        assert_eq!(count_jet_points(&js2, 2, &opts()).unwrap(), 20);
    }

    #[test]
    fn contact_counts() {
        // f = x1 in one variable: (p - 1) jets of order exactly n
        let line = AffineSystem::parse("x1").unwrap();
        for n in 0..=3 {
            assert_eq!(count_contact(&line, 5, n, &opts()).unwrap(), 4, "n={n}");
        }
        // cusp at n=0: p^2 - p
        let cusp = AffineSystem::parse("x2^2 - x1^3").unwrap();
        assert_eq!(count_contact(&cusp, 3, 0, &opts()).unwrap(), 6);
    }

    #[test]
    fn parallel_equals_sequential() {
        let cusp = AffineSystem::parse("x2^2 - x1^3").unwrap();
        let seq = count_congruence(&cusp, 3, 3, &opts()).unwrap();
        for threads in [2, 4, 7] {
            let par = count_congruence(&cusp, 3, 3, &CountOptions { budget: DEFAULT_BUDGET, threads }).unwrap();
            assert_eq!(par, seq, "threads={threads}");
        }
    }

    #[test]
    fn reduction_compatibility_invariant() {
        let cusp = AffineSystem::parse("x2^2 - x1^3").unwrap();
        let counts: Vec<BigInt> = (0..=4)
            .map(|n| BigInt::from(count_congruence(&cusp, 2, n, &opts()).unwrap()))
            .collect();
        let series = CountSeries::new(2, CountMode::Congruence, counts);
        assert!(series.reduction_compatible(2));
    }

    #[test]
    fn fit_recovers_node_numerator() {
        // J_p for the node at p = 3: (2p - 1 - p^2 T)/(1 - pT)^2 = (5 - 9T)/(1-3T)^2
        let node = AffineSystem::parse("x1*x2").unwrap();
        let counts: Vec<BigInt> = (0..8)
            .map(|n| BigInt::from(count_congruence(&node, 3, n, &opts()).unwrap()))
            .collect();
        let series = assemble_series(&CountSeries::new(3, CountMode::Congruence, counts)).unwrap();
        let shape = DenominatorShape::new(vec![(1, 1), (1, 1)]);
        let fit = fit_rational(&series, &shape, 3, None).unwrap();
        let expect = RatFunc::new(
            crate::exactalg::parse_poly("5 - 9*T").unwrap(),
            crate::exactalg::parse_poly("(1 - 3*T)^2").unwrap(),
        )
        .unwrap();
        assert!(fit.equal(&expect));
    }

    #[test]
    fn fit_rejects_wrong_shape() {
        // the node series is not geometric
        let node = AffineSystem::parse("x1*x2").unwrap();
        let counts: Vec<BigInt> = (0..8)
            .map(|n| BigInt::from(count_congruence(&node, 3, n, &opts()).unwrap()))
            .collect();
        let series = assemble_series(&CountSeries::new(3, CountMode::Congruence, counts)).unwrap();
        let shape = DenominatorShape::new(vec![(1, 1)]);
        assert!(matches!(fit_rational(&series, &shape, 3, None), Err(CountError::NoFit)));
    }

    #[test]
    fn fit_all_zero_series() {
        let series = TruncSeries::from_rationals(Var::new("T"), &vec![q(0); 8]).unwrap();
        let shape = DenominatorShape::new(vec![(1, 1)]);
        let fit = fit_rational(&series, &shape, 2, None).unwrap();
        assert!(fit.is_zero());
    }

    #[test]
    fn fit_needs_enough_coefficients() {
        let series = TruncSeries::from_rationals(Var::new("T"), &[q(1), q(2)]).unwrap();
        let shape = DenominatorShape::new(vec![(1, 1), (1, 1)]);
        assert!(matches!(
            fit_rational(&series, &shape, 2, None),
            Err(CountError::InsufficientData { .. })
        ));
    }

    #[test]
    fn verify_rational_examples() {
        let ones = TruncSeries::from_rationals(Var::new("T"), &vec![q(1); 6]).unwrap();
        let geom = RatFunc::new(MPoly::one(), crate::exactalg::parse_poly("1 - T").unwrap()).unwrap();
        assert!(verify_rational(&ones, &geom).unwrap());

        let bad = TruncSeries::from_rationals(Var::new("T"), &[q(1), q(2)]).unwrap();
        assert!(!verify_rational(&bad, &geom).unwrap());

        let pole = RatFunc::new(MPoly::one(), MPoly::var("T")).unwrap();
        assert!(matches!(verify_rational(&ones, &pole), Err(CountError::NonExpandable)));
    }

    #[test]
    fn empty_counts_have_no_series() {
        assert!(assemble_series(&CountSeries::new(2, CountMode::Congruence, vec![])).is_none());
    }

    #[test]
    fn rejects_composite_modulus() {
        let sys = AffineSystem::parse("x1").unwrap();
        assert!(matches!(count_congruence(&sys, 4, 0, &opts()), Err(CountError::NotPrime(4))));
    }
}
