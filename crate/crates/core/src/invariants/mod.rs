//! Closed-form invariants evaluated from resolution data: normal-crossings
//! motivic integrals, motivic volume, motivic and topological zeta functions
//! with pole extraction and the monodromy check, stringy invariants, the
//! stringy zeta function with its limit at `s = 1`, proper-birational class
//! identities, and the Seifert-data formula.
//!
//! All five sum-over-strata formula families share one shape: a stratum
//! contributes its class (or chi) times a product of per-component factors.
//! Builders here only differ in how a component record maps to a factor.

mod seifert;

use std::collections::BTreeSet;
use std::fmt;

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::exactalg::{
    positive_exponent, rational_string, ExactError, Factor, Level, MPoly, RatFunc, Rational, Term,
    TermSum, Var,
};
use crate::strata::{ComponentRecord, Context, ResolutionData, StrataError, StratumRecord};

pub use seifert::{seifert_e_st, ChiOffset, SeifertData, SeifertResult};

#[derive(Debug, Error)]
pub enum InvariantError {
    #[error("expected a {expected} document, found {found}")]
    WrongContext { expected: Context, found: Context },
    #[error("stratum {{{subset}}} carries no classL data required for a class-level sum")]
    MissingClassData { subset: String },
    #[error("stratum {{{subset}}} carries neither hodge nor classL data")]
    MissingHodgeData { subset: String },
    #[error("component `{id}` has log discrepancy {a} <= 0: not log terminal")]
    NotLogTerminal { id: String, a: String },
    #[error("pole at s = 1 of multiplicity {0}")]
    PoleAtOne(u32),
    #[error("input is strictly log canonical (a = 0)")]
    StrictlyLogCanonical,
    #[error("kappa - sum q_i/n_i = 0: both expressions for the log discrepancy degenerate")]
    DegenerateDenominator,
    #[error("determinant cross-check failed: input d = {input}, derived = {derived}")]
    DConsistencyFailure { input: String, derived: String },
    #[error("expected a univariate rational function in `{0}`")]
    NotUnivariate(String),
    #[error(transparent)]
    Strata(#[from] StrataError),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

fn subset_label(subset: &BTreeSet<String>) -> String {
    subset.iter().cloned().collect::<Vec<_>>().join(",")
}

fn expect_context(data: &ResolutionData, expected: Context) -> Result<(), InvariantError> {
    if data.context != expected {
        return Err(InvariantError::WrongContext { expected, found: data.context });
    }
    Ok(())
}

/// Class-level sum over strata; `factor_of` maps each component of a stratum
/// subset to its formula factor.
fn class_sum(
    data: &ResolutionData,
    factor_of: impl Fn(&ComponentRecord) -> Factor,
) -> Result<TermSum, InvariantError> {
    let mut terms = Vec::with_capacity(data.strata.len());
    for s in &data.strata {
        let class = s.class_l.clone().ok_or_else(|| InvariantError::MissingClassData {
            subset: subset_label(&s.subset),
        })?;
        terms.push(Term::new(class, factors_of(data, s, &factor_of)));
    }
    Ok(TermSum::new(Level::ClassL, terms)?)
}

/// Euler-level sum over strata with chi coefficients.
fn euler_sum(
    data: &ResolutionData,
    factor_of: impl Fn(&ComponentRecord) -> Factor,
) -> Result<TermSum, InvariantError> {
    let terms = data
        .strata
        .iter()
        .map(|s| Term::new(MPoly::constant(s.chi.clone()), factors_of(data, s, &factor_of)))
        .collect();
    Ok(TermSum::new(Level::Euler, terms)?)
}

fn factors_of(
    data: &ResolutionData,
    stratum: &StratumRecord,
    factor_of: &impl Fn(&ComponentRecord) -> Factor,
) -> Vec<Factor> {
    stratum
        .subset
        .iter()
        .map(|id| factor_of(data.component(id).expect("validated id")))
        .collect()
}

/// Motivic integral of `L^{-ord D}` over the arc space against a normal
/// crossings divisor `D = sum N_i D_i`: the stratum `D_I°` contributes
/// `[D_I°] * prod (L - 1)/(L^{1 + N_i} - 1)`.
pub fn nc_integral(data: &ResolutionData) -> Result<TermSum, InvariantError> {
    expect_context(data, Context::NcIntegral)?;
    class_sum(data, |c| {
        Factor::pure(c.n.clone().expect("validated") + Rational::one())
    })
}

/// Motivic volume of the arc space from a log resolution: strata weighted by
/// `prod (L - 1)/(L^{rho_i} - 1)`.
pub fn motivic_volume(data: &ResolutionData) -> Result<TermSum, InvariantError> {
    expect_context(data, Context::Volume)?;
    class_sum(data, |c| Factor::pure(c.nu.clone().expect("validated")))
}

/// Motivic zeta function from an embedded resolution: strata weighted by
/// `prod (L - 1) T^{N_i} / (L^{nu_i} - T^{N_i})`.
pub fn motivic_zeta(data: &ResolutionData) -> Result<TermSum, InvariantError> {
    expect_context(data, Context::Zeta)?;
    class_sum(data, |c| {
        Factor::new(c.nu.clone().expect("validated"), c.n.clone().expect("validated"))
    })
}

/// Class identity for a proper birational morphism: the strata sum with pure
/// factors `(L - 1)/(L^{nu_i} - 1)` reassembles `[X]`.
pub fn birational_class_sum(data: &ResolutionData) -> Result<TermSum, InvariantError> {
    expect_context(data, Context::BirationalIdentity)?;
    class_sum(data, |c| Factor::pure(c.nu.clone().expect("validated")))
}

/// Euler side of the birational identity: `sum chi(E_I°) prod 1/nu_i`.
pub fn birational_chi_sum(data: &ResolutionData) -> Result<Rational, InvariantError> {
    expect_context(data, Context::BirationalIdentity)?;
    let sum = euler_sum(data, |c| Factor::pure(c.nu.clone().expect("validated")))?;
    Ok(sum.specialize_chi()?)
}

/// True iff both the class identity (sum equals `lhs_class` as rational
/// functions) and its Euler specialization (sum of `chi/prod nu` equals
/// `lhs_class` at `L = 1`) hold.
pub fn birational_identity(data: &ResolutionData, lhs_class: &MPoly) -> Result<bool, InvariantError> {
    let sum = birational_class_sum(data)?;
    let class_ok = sum.to_ratfunc()?.equal(&RatFunc::from_poly(lhs_class.clone()));
    let chi_ok = birational_chi_sum(data)? == lhs_class.chi_value()?;
    Ok(class_ok && chi_ok)
}

/// `J(T) = (Z(L^m T) - L^m) / (L^m T - 1)`: the generating series of jet-space
/// classes recovered from the motivic zeta function of a hypersurface.
///
/// The substitution `T -> L^m T` is performed termwise: a factor `(nu, N)`
/// becomes `(L - 1) L^{mN} T^N / (L^nu - L^{mN} T^N)`.
pub fn j_from_z(zeta: &TermSum, ambient_dim: u32) -> Result<RatFunc, InvariantError> {
    let l = MPoly::var("L");
    let t = MPoly::var("T");
    let l_minus_1 = &l - &MPoly::one();
    let mut scaled = RatFunc::zero();
    for term in zeta.terms() {
        let mut val = RatFunc::from_poly(term.coeff.clone());
        for f in &term.factors {
            let nu = positive_exponent(f.nu())?;
            let n = positive_exponent(f.n())?;
            let shifted = &l.pow(ambient_dim * n) * &t.pow(n);
            let numer = &l_minus_1 * &shifted;
            let denom = &l.pow(nu) - &shifted;
            val = &val * &RatFunc::new(numer, denom)?;
        }
        scaled = &scaled + &val;
    }
    let lm = RatFunc::from_poly(l.pow(ambient_dim));
    let denom = RatFunc::new(&(&l.pow(ambient_dim) * &t) - &MPoly::one(), MPoly::one())?;
    Ok(&(&scaled - &lm) / &denom)
}

/// Topological zeta function `sum chi(E_I°) prod 1/(nu_i + s N_i)`, an exact
/// rational function in `s`.
pub fn z_top(data: &ResolutionData) -> Result<RatFunc, InvariantError> {
    expect_context(data, Context::Zeta)?;
    let sum = euler_sum(data, |c| {
        Factor::new(c.nu.clone().expect("validated"), c.n.clone().expect("validated"))
    })?;
    Ok(sum.euler_limit()?)
}

/// Candidate pole locations `-nu_i/N_i` of a zeta document, one per
/// component, duplicates kept.
pub fn candidate_poles(data: &ResolutionData) -> Vec<Rational> {
    data.components
        .iter()
        .filter_map(|c| match (&c.nu, &c.n) {
            (Some(nu), Some(n)) if !n.is_zero() => Some(-(nu / n)),
            _ => None,
        })
        .collect()
}

/// Poles with multiplicities, ascending by location.
#[derive(Clone, Debug, PartialEq)]
pub struct PoleList {
    pub poles: Vec<(Rational, u32)>,
}

impl PoleList {
    pub fn locations(&self) -> Vec<Rational> {
        self.poles.iter().map(|(x, _)| x.clone()).collect()
    }
}

impl fmt::Display for PoleList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .poles
            .iter()
            .map(|(x, m)| {
                if *m == 1 {
                    rational_string(x)
                } else {
                    format!("{} (order {m})", rational_string(x))
                }
            })
            .collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// Dense ascending coefficients of the denominator of a univariate fraction.
fn univar_denom(f: &RatFunc, var: &str) -> Result<Vec<Rational>, InvariantError> {
    let reduced = RatFunc::new(f.numer().clone(), f.denom().clone())?;
    match reduced.denom().as_univariate() {
        Some((v, coeffs)) if v.is_none() || v.as_ref().map(Var::name) == Some(var) => Ok(coeffs),
        _ => Err(InvariantError::NotUnivariate(var.to_string())),
    }
}

/// Divide by `(x - root)` as long as the remainder vanishes; returns the
/// multiplicity and the final quotient.
fn strip_root(coeffs: &mut Vec<Rational>, root: &Rational) -> u32 {
    let mut mult = 0;
    loop {
        if coeffs.len() < 2 {
            return mult;
        }
        // synthetic division by (x - root)
        let mut quotient = vec![Rational::zero(); coeffs.len() - 1];
        let mut carry = Rational::zero();
        for k in (0..coeffs.len()).rev() {
            let value = &coeffs[k] + &(&carry * root);
            if k == 0 {
                if !value.is_zero() {
                    return mult;
                }
            } else {
                quotient[k - 1] = value.clone();
                carry = value;
            }
        }
        *coeffs = quotient;
        mult += 1;
    }
}

/// Poles of a reduced rational function in `s` among the candidate locations
/// `-nu_i/N_i`; a location outside the candidate set cannot be a pole of the
/// assembled sum.
pub fn extract_poles(f: &RatFunc, candidates: &[Rational]) -> Result<PoleList, InvariantError> {
    let mut denom = univar_denom(f, "s")?;
    let mut distinct: Vec<Rational> = candidates.to_vec();
    distinct.sort();
    distinct.dedup();
    let mut poles = Vec::new();
    for loc in distinct {
        let mult = strip_root(&mut denom, &loc);
        if mult > 0 {
            poles.push((loc, mult));
        }
    }
    Ok(PoleList { poles })
}

/// True iff the reduced denominator factors completely into candidate roots,
/// i.e. every pole lies in the candidate set.
pub fn poles_contained(f: &RatFunc, candidates: &[Rational]) -> Result<bool, InvariantError> {
    let mut denom = univar_denom(f, "s")?;
    let mut distinct: Vec<Rational> = candidates.to_vec();
    distinct.sort();
    distinct.dedup();
    for loc in &distinct {
        strip_root(&mut denom, loc);
    }
    Ok(denom.len() <= 1)
}

/// Monodromy eigenvalue exponents: the set of `q` in `[0, 1)` with eigenvalue
/// `e^{2 pi i q}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EigenvalueSet {
    values: BTreeSet<Rational>,
}

impl EigenvalueSet {
    /// Exponents are reduced mod 1 into `[0, 1)`.
    pub fn new(exponents: impl IntoIterator<Item = Rational>) -> Self {
        EigenvalueSet {
            values: exponents.into_iter().map(|q| frac_mod_one(&q)).collect(),
        }
    }

    pub fn contains(&self, exponent: &Rational) -> bool {
        self.values.contains(&frac_mod_one(exponent))
    }

    pub fn values(&self) -> &BTreeSet<Rational> {
        &self.values
    }
}

fn frac_mod_one(q: &Rational) -> Rational {
    let f = q - q.floor();
    debug_assert!(!f.is_negative() && f < Rational::one());
    f
}

/// Verdict of the monodromy check for one pole.
#[derive(Clone, Debug, PartialEq)]
pub struct PoleCheck {
    pub location: Rational,
    pub multiplicity: u32,
    /// `location` reduced mod 1, the exponent whose eigenvalue must occur.
    pub exponent: Rational,
    pub satisfied: bool,
}

/// For each pole `s0`, the check holds iff `e^{2 pi i s0}` is a listed
/// eigenvalue, i.e. `s0 mod 1` is in the exponent set. An empty pole list is
/// vacuously satisfied.
pub fn monodromy_check(poles: &PoleList, eigenvalues: &EigenvalueSet) -> Vec<PoleCheck> {
    poles
        .poles
        .iter()
        .map(|(location, multiplicity)| {
            let exponent = frac_mod_one(location);
            PoleCheck {
                location: location.clone(),
                multiplicity: *multiplicity,
                satisfied: eigenvalues.contains(&exponent),
                exponent,
            }
        })
        .collect()
}

/// The three stringy invariants of a log terminal input. `class_l` is only
/// available when every stratum carries class data, `hodge` when every
/// stratum carries Hodge or class data.
#[derive(Clone, Debug)]
pub struct StringyInvariants {
    pub euler: Rational,
    pub hodge: Option<TermSum>,
    pub class_l: Option<TermSum>,
}

/// Stringy invariants `e_st`, `E_st`, `cal E_st` — strata weighted by
/// `1/a_i`, `(uv - 1)/((uv)^{a_i} - 1)`, `(L - 1)/(L^{a_i} - 1)`.
pub fn stringy_invariants(data: &ResolutionData) -> Result<StringyInvariants, InvariantError> {
    expect_context(data, Context::Stringy)?;
    for c in &data.components {
        let a = c.a.as_ref().expect("validated");
        if !a.is_positive() {
            return Err(InvariantError::NotLogTerminal {
                id: c.id.clone(),
                a: rational_string(a),
            });
        }
    }
    let factor_of = |c: &ComponentRecord| Factor::pure(c.a.clone().expect("validated"));
    let euler = euler_sum(data, factor_of)?.specialize_chi()?;

    let class_l = if data.strata.iter().all(|s| s.class_l.is_some()) {
        Some(class_sum(data, factor_of)?)
    } else {
        None
    };

    let hodge = if data.strata.iter().all(|s| s.hodge.is_some() || s.class_l.is_some()) {
        let uv = &MPoly::var("u") * &MPoly::var("v");
        let terms = data
            .strata
            .iter()
            .map(|s| {
                let coeff = match &s.hodge {
                    Some(h) => h.clone(),
                    None => s.class_l.as_ref().unwrap().subst(&Var::new("L"), &uv),
                };
                Term::new(coeff, factors_of(data, s, &factor_of))
            })
            .collect();
        Some(TermSum::new(Level::Hodge, terms)?)
    } else {
        None
    };

    Ok(StringyInvariants { euler, hodge, class_l })
}

/// Stringy zeta function `sum chi(E_I°) prod 1/(nu_i + s N_i)` for the split
/// `a_i = nu_i + N_i` with `nu_i >= 0`, `N_i <= 0`.
pub fn stringy_zeta(data: &ResolutionData) -> Result<RatFunc, InvariantError> {
    expect_context(data, Context::StringyZeta)?;
    let sum = euler_sum(data, |c| {
        Factor::new(c.nu.clone().expect("validated"), c.n.clone().expect("validated"))
    })?;
    Ok(sum.euler_limit()?)
}

/// Value of a reduced rational function at `s = 1`, or the multiplicity of
/// the pole sitting there.
pub fn limit_s1(f: &RatFunc) -> Result<Rational, InvariantError> {
    let reduced = RatFunc::new(f.numer().clone(), f.denom().clone())?;
    let s = Var::new("s");
    let one = Rational::one();
    let denom_at_1 = reduced.denom().eval_univar(&s, &one)?;
    if !denom_at_1.is_zero() {
        return Ok(reduced.numer().eval_univar(&s, &one)? / denom_at_1);
    }
    let mut coeffs = univar_denom(&reduced, "s")?;
    Err(InvariantError::PoleAtOne(strip_root(&mut coeffs, &one)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::parse_poly;
    use crate::strata::load_resolution;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn qq(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn rf(n: &str, d: &str) -> RatFunc {
        RatFunc::new(parse_poly(n).unwrap(), parse_poly(d).unwrap()).unwrap()
    }

    fn doc_fx_zeta() -> ResolutionData {
        load_resolution(
            r#"{
            "schema": "motivic-kit/v1", "context": "zeta", "ambient_dim": 1,
            "components": [ { "id": "E", "N": 1, "nu": 1 } ],
            "strata": [
                { "subset": [], "classL": "L - 1" },
                { "subset": ["E"], "classL": "1" }
            ]
        }"#,
        )
        .unwrap()
    }

    #[test]
    fn nc_integral_point_divisor() {
        // A^1 with the origin of multiplicity N: (L-1) + (L-1)/(L^{1+N}-1)
        for n in [1i64, 3, 6] {
            let doc = format!(
                r#"{{
                "schema": "motivic-kit/v1", "context": "nc-integral", "ambient_dim": 1,
                "components": [ {{ "id": "E", "N": {n} }} ],
                "strata": [
                    {{ "subset": [], "classL": "L - 1" }},
                    {{ "subset": ["E"], "classL": "1" }}
                ]
            }}"#
            );
            let data = load_resolution(&doc).unwrap();
            let sum = nc_integral(&data).unwrap();
            let expect = &rf("L - 1", "1") + &rf("L - 1", &format!("L^{} - 1", n + 1));
            assert!(sum.to_ratfunc().unwrap().equal(&expect));
        }
    }

    #[test]
    fn nc_integral_empty_divisor() {
        let data = load_resolution(
            r#"{
            "schema": "motivic-kit/v1", "context": "nc-integral", "ambient_dim": 1,
            "components": [],
            "strata": [ { "subset": [], "classL": "L" } ]
        }"#,
        )
        .unwrap();
        let sum = nc_integral(&data).unwrap();
        assert!(sum.to_ratfunc().unwrap().equal(&RatFunc::from_poly(MPoly::var("L"))));
    }

    #[test]
    fn zeta_of_coordinate_function() {
        // f = x: Z(T) = L(L-1)/(L-T)
        let sum = motivic_zeta(&doc_fx_zeta()).unwrap();
        let expect = rf("L^2 - L", "L - T");
        assert!(sum.to_ratfunc().unwrap().equal(&expect));
        // coefficient of T^n is (L-1)/L^n
        let series = sum.series_expand(4).unwrap();
        for n in 1..=4usize {
            assert!(series.coeff(n).equal(&rf("L - 1", &format!("L^{n}"))));
        }
    }

    #[test]
    fn j_of_coordinate_function_is_geometric() {
        // X = point: J(T) = 1/(1 - T)
        let sum = motivic_zeta(&doc_fx_zeta()).unwrap();
        let j = j_from_z(&sum, 1).unwrap();
        assert!(j.equal(&rf("1", "1 - T")));
    }

    #[test]
    fn ztop_of_coordinate_function() {
        // chi(A^1 - 0) = 0 and chi(pt) = 1 give 0 + 1/(1+s)
        let f = z_top(&doc_fx_zeta()).unwrap();
        assert!(f.equal(&rf("1", "1 + s")));
    }

    #[test]
    fn ztop_all_chi_zero() {
        let data = load_resolution(
            r#"{
            "schema": "motivic-kit/v1", "context": "zeta", "ambient_dim": 1,
            "components": [ { "id": "E", "N": 2, "nu": 3 } ],
            "strata": [ { "subset": ["E"], "chi": 0 } ]
        }"#,
        )
        .unwrap();
        assert!(z_top(&data).unwrap().is_zero());
    }

    #[test]
    fn pole_extraction() {
        // 1/(1+s)^2 has the double pole -1
        let f = rf("1", "(1 + s)^2");
        let poles = extract_poles(&f, &[q(-1)]).unwrap();
        assert_eq!(poles.poles, vec![(q(-1), 2)]);
        // constants have no poles
        let c = rf("3", "1");
        assert!(extract_poles(&c, &[q(-1)]).unwrap().poles.is_empty());
        // a candidate that does not divide the denominator is dropped
        let g = rf("1", "1 + s");
        let poles = extract_poles(&g, &[q(-1), qq(-5, 6)]).unwrap();
        assert_eq!(poles.poles, vec![(q(-1), 1)]);
    }

    #[test]
    fn monodromy_verdicts() {
        let eig = EigenvalueSet::new([q(0), qq(1, 6), qq(5, 6)]);
        let poles = PoleList { poles: vec![(q(-1), 1), (qq(-5, 6), 1)] };
        let report = monodromy_check(&poles, &eig);
        assert!(report.iter().all(|c| c.satisfied));
        assert_eq!(report[0].exponent, q(0));
        assert_eq!(report[1].exponent, qq(1, 6));

        // constructed violation: pole -1/2 against exponents {0}
        let bad = monodromy_check(
            &PoleList { poles: vec![(qq(-1, 2), 1)] },
            &EigenvalueSet::new([q(0)]),
        );
        assert!(!bad[0].satisfied);
        assert_eq!(bad[0].exponent, qq(1, 2));

        // empty pole list is vacuously satisfied
        assert!(monodromy_check(&PoleList { poles: vec![] }, &eig).is_empty());
    }

    #[test]
    fn stringy_of_quadric_cone() {
        // z^2 = xy: a = 1, strata [X - 0] = L^2 - 1 and [E] = L + 1
        let data = load_resolution(
            r#"{
            "schema": "motivic-kit/v1", "context": "stringy", "ambient_dim": 2,
            "components": [ { "id": "E", "a": 1 } ],
            "strata": [
                { "subset": [], "classL": "L^2 - 1" },
                { "subset": ["E"], "classL": "L + 1" }
            ]
        }"#,
        )
        .unwrap();
        let inv = stringy_invariants(&data).unwrap();
        assert_eq!(inv.euler, q(2));
        let cal = inv.class_l.unwrap();
        assert!(cal.to_ratfunc().unwrap().equal(&rf("L^2 + L", "1")));
        // hodge level exists (derived from classes) and respecializes to 2
        assert_eq!(inv.hodge.unwrap().specialize_chi().unwrap(), q(2));
    }

    #[test]
    fn stringy_of_nonsingular_input() {
        let data = load_resolution(
            r#"{
            "schema": "motivic-kit/v1", "context": "stringy", "ambient_dim": 2,
            "components": [],
            "strata": [ { "subset": [], "classL": "L^2" } ]
        }"#,
        )
        .unwrap();
        let inv = stringy_invariants(&data).unwrap();
        assert_eq!(inv.euler, q(1));
        assert!(inv.class_l.unwrap().to_ratfunc().unwrap().equal(&rf("L^2", "1")));
    }

    #[test]
    fn stringy_levels_unavailable_without_class_data() {
        // a stratum carrying only chi: the Euler level still works, the
        // class and hodge levels are reported unavailable
        let data = load_resolution(
            r#"{
            "schema": "motivic-kit/v1", "context": "stringy", "ambient_dim": 3,
            "components": [ { "id": "E", "a": "1/2" } ],
            "strata": [
                { "subset": [], "chi": 0 },
                { "subset": ["E"], "chi": 3 }
            ]
        }"#,
        )
        .unwrap();
        let inv = stringy_invariants(&data).unwrap();
        assert_eq!(inv.euler, q(6));
        assert!(inv.class_l.is_none());
        assert!(inv.hodge.is_none());
    }

    #[test]
    fn stringy_rejects_non_log_terminal() {
        let data = load_resolution(
            r#"{
            "schema": "motivic-kit/v1", "context": "stringy", "ambient_dim": 2,
            "components": [ { "id": "E", "a": 0 } ],
            "strata": [ { "subset": ["E"], "chi": 2 } ]
        }"#,
        )
        .unwrap();
        assert!(matches!(
            stringy_invariants(&data),
            Err(InvariantError::NotLogTerminal { .. })
        ));
    }

    #[test]
    fn blowup_identity() {
        let data = load_resolution(
            r#"{
            "schema": "motivic-kit/v1", "context": "birational-identity", "ambient_dim": 2,
            "components": [ { "id": "E", "nu": 2 } ],
            "strata": [
                { "subset": [], "classL": "L^2 - 1" },
                { "subset": ["E"], "classL": "L + 1" }
            ]
        }"#,
        )
        .unwrap();
        assert!(birational_identity(&data, &parse_poly("L^2").unwrap()).unwrap());
        assert!(!birational_identity(&data, &parse_poly("L^2 + 1").unwrap()).unwrap());
        // chi identity on its own: 0 + 2/2 = 1
        let chi = euler_sum(&data, |c| Factor::pure(c.nu.clone().unwrap()))
            .unwrap()
            .specialize_chi()
            .unwrap();
        assert_eq!(chi, q(1));
    }

    #[test]
    fn identity_morphism() {
        let data = load_resolution(
            r#"{
            "schema": "motivic-kit/v1", "context": "birational-identity", "ambient_dim": 2,
            "components": [],
            "strata": [ { "subset": [], "classL": "L^2" } ]
        }"#,
        )
        .unwrap();
        assert!(birational_identity(&data, &parse_poly("L^2").unwrap()).unwrap());
    }

    #[test]
    fn limit_at_one() {
        // 13/s + 5 -> 18
        let f = &rf("13", "s") + &rf("5", "1");
        assert_eq!(limit_s1(&f).unwrap(), q(18));
        // constants pass through
        assert_eq!(limit_s1(&rf("7", "1")).unwrap(), q(7));
        // 1/(1-s) has a simple pole at 1
        assert!(matches!(limit_s1(&rf("1", "1 - s")), Err(InvariantError::PoleAtOne(1))));
        assert!(matches!(limit_s1(&rf("1", "(1 - s)^2")), Err(InvariantError::PoleAtOne(2))));
    }

    #[test]
    fn stringy_zeta_log_terminal_is_e_st() {
        // all N = 0: the function is constant and equals e_st on the same strata
        let data = load_resolution(
            r#"{
            "schema": "motivic-kit/v1", "context": "stringy-zeta", "ambient_dim": 2,
            "components": [ { "id": "E", "nu": 1, "N": 0 } ],
            "strata": [
                { "subset": [], "classL": "L^2 - 1" },
                { "subset": ["E"], "classL": "L + 1" }
            ]
        }"#,
        )
        .unwrap();
        let z = stringy_zeta(&data).unwrap();
        assert_eq!(z.as_constant().unwrap(), q(2));
        assert_eq!(limit_s1(&z).unwrap(), q(2));
    }
}
