//! Resolution/stratification data: components `E_i` with multiplicities,
//! strata `E_I°` with topological data, document parsing and validation, and
//! singularity classification from log discrepancies.
//!
//! Documents are JSON with the stable schema key `motivic-kit/v1`:
//!
//! ```json
//! { "schema": "motivic-kit/v1",
//!   "context": "zeta",
//!   "ambient_dim": 2,
//!   "components": [ { "id": "E1", "N": 2, "nu": "2" } ],
//!   "strata": [ { "subset": ["E1"], "chi": "1", "classL": "L" } ] }
//! ```
//!
//! Rationals are `"p/q"` strings (plain integers also accepted); `classL` and
//! `hodge` are polynomial strings in the canonical text form. Strata that
//! contribute nothing may be omitted; absent strata contribute zero. Whether
//! the empty-subset stratum belongs in a document depends on whether the
//! invariant is computed globally or locally at a point — that choice is the
//! document author's.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactalg::{parse_poly, parse_rational, rational_string, ExactError, MPoly, Rational, Var};

pub const SCHEMA_VERSION: &str = "motivic-kit/v1";

/// Which formula family a document feeds; fixes which multiplicities are
/// required and their sign constraints.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Context {
    #[serde(rename = "zeta")]
    Zeta,
    #[serde(rename = "volume")]
    Volume,
    #[serde(rename = "stringy")]
    Stringy,
    #[serde(rename = "stringy-zeta")]
    StringyZeta,
    #[serde(rename = "nc-integral")]
    NcIntegral,
    #[serde(rename = "birational-identity")]
    BirationalIdentity,
}

impl fmt::Display for Context {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Context::Zeta => "zeta",
            Context::Volume => "volume",
            Context::Stringy => "stringy",
            Context::StringyZeta => "stringy-zeta",
            Context::NcIntegral => "nc-integral",
            Context::BirationalIdentity => "birational-identity",
        })
    }
}

/// An exceptional component with its multiplicities.
///
/// `n` is the multiplicity in the pullback divisor, `nu - 1` the multiplicity
/// in the relative canonical divisor, `a` the log discrepancy. In the
/// stringy-zeta context the split satisfies `a = nu + n` exactly.
#[derive(Clone, Debug, PartialEq)]
pub struct ComponentRecord {
    pub id: String,
    pub n: Option<Rational>,
    pub nu: Option<Rational>,
    pub a: Option<Rational>,
}

/// A locally closed stratum `E_I°` with its topological data. `chi` is the
/// topological Euler characteristic of the (possibly non-compact) complex
/// stratum; compactly-supported and ordinary chi agree here, so one number
/// suffices.
#[derive(Clone, Debug, PartialEq)]
pub struct StratumRecord {
    pub subset: BTreeSet<String>,
    pub chi: Rational,
    pub hodge: Option<MPoly>,
    pub class_l: Option<MPoly>,
}

/// Validated resolution data.
#[derive(Clone, Debug, PartialEq)]
pub struct ResolutionData {
    pub ambient_dim: u32,
    pub context: Context,
    pub components: Vec<ComponentRecord>,
    pub strata: Vec<StratumRecord>,
}

#[derive(Debug, Error)]
pub enum StrataError {
    #[error("schema error: {0}")]
    Schema(String),
    #[error("stratum {{{subset}}}: chi/hodge/classL disagree ({detail})")]
    InconsistentStratumData { subset: String, detail: String },
    #[error("component `{id}`: missing multiplicity `{field}` required in {context} context")]
    MissingMultiplicity { id: String, field: &'static str, context: Context },
    #[error("component `{id}`: (nu, N) = (0, 0) cannot occur in stringy-zeta context")]
    ForbiddenZeroPair { id: String },
    #[error("document has no empty-subset stratum")]
    MissingEmptyStratum,
    #[error(transparent)]
    Exact(#[from] ExactError),
}

// ---- raw document (serde) -----------------------------------------------

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum RationalField {
    Int(i64),
    Str(String),
}

impl RationalField {
    fn parse(&self) -> Result<Rational, StrataError> {
        match self {
            RationalField::Int(n) => Ok(Rational::from_integer((*n).into())),
            RationalField::Str(s) => Ok(parse_rational(s)?),
        }
    }

    fn from_rational(q: &Rational) -> Self {
        RationalField::Str(rational_string(q))
    }
}

#[derive(Serialize, Deserialize)]
struct RawComponent {
    id: String,
    #[serde(rename = "N", default, skip_serializing_if = "Option::is_none")]
    n: Option<RationalField>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    nu: Option<RationalField>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    a: Option<RationalField>,
}

#[derive(Serialize, Deserialize)]
struct RawStratum {
    subset: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    chi: Option<RationalField>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    hodge: Option<String>,
    #[serde(rename = "classL", default, skip_serializing_if = "Option::is_none")]
    class_l: Option<String>,
}

#[derive(Serialize, Deserialize)]
struct RawDocument {
    schema: String,
    context: Context,
    ambient_dim: u32,
    components: Vec<RawComponent>,
    strata: Vec<RawStratum>,
}

/// Parse and validate a document.
pub fn load_resolution(text: &str) -> Result<ResolutionData, StrataError> {
    let raw: RawDocument =
        serde_json::from_str(text).map_err(|e| StrataError::Schema(e.to_string()))?;
    if raw.schema != SCHEMA_VERSION {
        return Err(StrataError::Schema(format!(
            "unsupported schema `{}` (expected `{SCHEMA_VERSION}`)",
            raw.schema
        )));
    }
    let mut components = Vec::with_capacity(raw.components.len());
    for c in &raw.components {
        components.push(ComponentRecord {
            id: c.id.clone(),
            n: c.n.as_ref().map(|v| v.parse()).transpose()?,
            nu: c.nu.as_ref().map(|v| v.parse()).transpose()?,
            a: c.a.as_ref().map(|v| v.parse()).transpose()?,
        });
    }
    let mut strata = Vec::with_capacity(raw.strata.len());
    for s in &raw.strata {
        let subset: BTreeSet<String> = s.subset.iter().cloned().collect();
        if subset.len() != s.subset.len() {
            return Err(StrataError::Schema(format!(
                "stratum subset {:?} repeats a component id",
                s.subset
            )));
        }
        let class_l = s.class_l.as_deref().map(parse_poly).transpose()?;
        let hodge = s.hodge.as_deref().map(parse_poly).transpose()?;
        let chi = resolve_chi(&subset, s.chi.as_ref().map(|v| v.parse()).transpose()?, &class_l, &hodge)?;
        strata.push(StratumRecord { subset, chi, hodge, class_l });
    }
    let data = ResolutionData {
        ambient_dim: raw.ambient_dim,
        context: raw.context,
        components,
        strata,
    };
    data.validate()?;
    Ok(data)
}

fn subset_label(subset: &BTreeSet<String>) -> String {
    subset.iter().cloned().collect::<Vec<_>>().join(",")
}

/// Derive or cross-check chi from classL/hodge. Evaluation at `L = 1` resp.
/// `u = v = 1` is skipped for classes with opaque symbols.
fn resolve_chi(
    subset: &BTreeSet<String>,
    chi: Option<Rational>,
    class_l: &Option<MPoly>,
    hodge: &Option<MPoly>,
) -> Result<Rational, StrataError> {
    let from_class = class_l.as_ref().and_then(|p| p.chi_value().ok());
    let from_hodge = hodge.as_ref().and_then(|p| p.chi_value().ok());
    if let (Some(c), Some(h)) = (class_l, hodge) {
        // hodge must be classL with L -> uv whenever both are plain L/uv polynomials
        if c.vars_within(&["L"]) && h.vars_within(&["u", "v"]) {
            let subst = c.subst(&Var::new("L"), &(&MPoly::var("u") * &MPoly::var("v")));
            if subst != *h {
                return Err(StrataError::InconsistentStratumData {
                    subset: subset_label(subset),
                    detail: format!("classL substituted gives {subst}, hodge is {h}"),
                });
            }
        }
    }
    if let (Some(a), Some(b)) = (&from_class, &from_hodge) {
        if a != b {
            return Err(StrataError::InconsistentStratumData {
                subset: subset_label(subset),
                detail: format!("classL(1) = {a}, hodge(1,1) = {b}"),
            });
        }
    }
    let derived = from_class.or(from_hodge);
    match (chi, derived) {
        (Some(c), Some(d)) => {
            if c != d {
                return Err(StrataError::InconsistentStratumData {
                    subset: subset_label(subset),
                    detail: format!("chi = {}, derived value = {}", rational_string(&c), rational_string(&d)),
                });
            }
            Ok(c)
        }
        (Some(c), None) => Ok(c),
        (None, Some(d)) => Ok(d),
        (None, None) => Err(StrataError::Schema(format!(
            "stratum {{{}}} has no chi and none can be derived",
            subset_label(subset)
        ))),
    }
}

impl ResolutionData {
    /// Check all structural and per-context invariants.
    pub fn validate(&self) -> Result<(), StrataError> {
        let mut ids = BTreeSet::new();
        for c in &self.components {
            if !ids.insert(c.id.clone()) {
                return Err(StrataError::Schema(format!("duplicate component id `{}`", c.id)));
            }
        }
        let mut subsets = BTreeSet::new();
        for s in &self.strata {
            if !subsets.insert(s.subset.clone()) {
                return Err(StrataError::Schema(format!(
                    "duplicate stratum subset {{{}}}",
                    subset_label(&s.subset)
                )));
            }
            for id in &s.subset {
                if !ids.contains(id) {
                    return Err(StrataError::Schema(format!(
                        "stratum references unknown component id `{id}`"
                    )));
                }
            }
        }
        for c in &self.components {
            self.validate_component(c)?;
        }
        Ok(())
    }

    fn validate_component(&self, c: &ComponentRecord) -> Result<(), StrataError> {
        let missing = |field: &'static str| StrataError::MissingMultiplicity {
            id: c.id.clone(),
            field,
            context: self.context,
        };
        let positive_int = |q: &Rational, field: &'static str| -> Result<(), StrataError> {
            if !q.is_integer() || !q.is_positive() {
                return Err(StrataError::Schema(format!(
                    "component `{}`: {field} = {} must be a positive integer in {} context",
                    c.id,
                    rational_string(q),
                    self.context
                )));
            }
            Ok(())
        };
        match self.context {
            Context::Zeta => {
                let n = c.n.as_ref().ok_or_else(|| missing("N"))?;
                let nu = c.nu.as_ref().ok_or_else(|| missing("nu"))?;
                positive_int(n, "N")?;
                positive_int(nu, "nu")?;
            }
            Context::Volume | Context::BirationalIdentity => {
                let nu = c.nu.as_ref().ok_or_else(|| missing("nu"))?;
                positive_int(nu, "nu")?;
            }
            Context::NcIntegral => {
                let n = c.n.as_ref().ok_or_else(|| missing("N"))?;
                positive_int(n, "N")?;
            }
            Context::Stringy => {
                c.a.as_ref().ok_or_else(|| missing("a"))?;
            }
            Context::StringyZeta => {
                let nu = c.nu.as_ref().ok_or_else(|| missing("nu"))?;
                let n = c.n.as_ref().ok_or_else(|| missing("N"))?;
                if nu.is_negative() {
                    return Err(StrataError::Schema(format!(
                        "component `{}`: nu must be >= 0 in stringy-zeta context",
                        c.id
                    )));
                }
                if n.is_positive() {
                    return Err(StrataError::Schema(format!(
                        "component `{}`: N must be <= 0 in stringy-zeta context",
                        c.id
                    )));
                }
                if nu.is_zero() && n.is_zero() {
                    return Err(StrataError::ForbiddenZeroPair { id: c.id.clone() });
                }
                if let Some(a) = &c.a {
                    let sum = nu + n;
                    if *a != sum {
                        return Err(StrataError::Schema(format!(
                            "component `{}`: a = {} but nu + N = {}",
                            c.id,
                            rational_string(a),
                            rational_string(&sum)
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn component(&self, id: &str) -> Option<&ComponentRecord> {
        self.components.iter().find(|c| c.id == id)
    }

    pub fn empty_stratum(&self) -> Option<&StratumRecord> {
        self.strata.iter().find(|s| s.subset.is_empty())
    }

    /// Log discrepancies of all components, in document order. In the
    /// stringy-zeta context a missing `a` is filled in as `nu + N`.
    pub fn log_discrepancies(&self) -> Vec<Rational> {
        self.components
            .iter()
            .filter_map(|c| {
                c.a.clone().or_else(|| match (&c.nu, &c.n) {
                    (Some(nu), Some(n)) if self.context == Context::StringyZeta => Some(nu + n),
                    _ => None,
                })
            })
            .collect()
    }

    /// Serialize back to the canonical document form.
    pub fn serialize(&self) -> String {
        let raw = RawDocument {
            schema: SCHEMA_VERSION.to_string(),
            context: self.context,
            ambient_dim: self.ambient_dim,
            components: self
                .components
                .iter()
                .map(|c| RawComponent {
                    id: c.id.clone(),
                    n: c.n.as_ref().map(RationalField::from_rational),
                    nu: c.nu.as_ref().map(RationalField::from_rational),
                    a: c.a.as_ref().map(RationalField::from_rational),
                })
                .collect(),
            strata: self
                .strata
                .iter()
                .map(|s| RawStratum {
                    subset: s.subset.iter().cloned().collect(),
                    chi: Some(RationalField::from_rational(&s.chi)),
                    hodge: s.hodge.as_ref().map(|p| p.to_string()),
                    class_l: s.class_l.as_ref().map(|p| p.to_string()),
                })
                .collect(),
        };
        serde_json::to_string_pretty(&raw).expect("serializable document")
    }
}

/// Singularity class determined by the multiset of log discrepancies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum SingularityClass {
    Terminal,
    Canonical,
    LogTerminal,
    StrictlyLogCanonical,
    NotLogCanonical,
}

impl SingularityClass {
    /// The classes are nested: terminal implies canonical implies log
    /// terminal implies log canonical. These predicates test membership in
    /// the cumulative classes; [`classify`] itself returns the strictest one.
    pub fn is_terminal(self) -> bool {
        self == SingularityClass::Terminal
    }

    pub fn is_canonical(self) -> bool {
        self <= SingularityClass::Canonical
    }

    pub fn is_log_terminal(self) -> bool {
        self <= SingularityClass::LogTerminal
    }

    pub fn is_log_canonical(self) -> bool {
        self <= SingularityClass::StrictlyLogCanonical
    }
}

impl fmt::Display for SingularityClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SingularityClass::Terminal => "terminal",
            SingularityClass::Canonical => "canonical",
            SingularityClass::LogTerminal => "log-terminal",
            SingularityClass::StrictlyLogCanonical => "strictly-log-canonical",
            SingularityClass::NotLogCanonical => "not-log-canonical",
        })
    }
}

/// Strictest class consistent with all log discrepancies: `a_i > 1` terminal,
/// `>= 1` canonical, `> 0` log terminal, `= 0` at the minimum strictly log
/// canonical, `< 0` somewhere not log canonical. No exceptional divisors
/// means the conditions are vacuous: terminal.
pub fn classify(a_values: &[Rational]) -> SingularityClass {
    let Some(min) = a_values.iter().min() else {
        return SingularityClass::Terminal;
    };
    let one = Rational::one();
    if *min > one {
        SingularityClass::Terminal
    } else if *min == one {
        SingularityClass::Canonical
    } else if min.is_positive() {
        SingularityClass::LogTerminal
    } else if min.is_zero() {
        SingularityClass::StrictlyLogCanonical
    } else {
        SingularityClass::NotLogCanonical
    }
}

/// True iff the strata chi values sum to `total_chi`. The empty-subset
/// stratum must be present: the check is about a partition of the whole space.
pub fn check_additivity(data: &ResolutionData, total_chi: &Rational) -> Result<bool, StrataError> {
    if data.empty_stratum().is_none() {
        return Err(StrataError::MissingEmptyStratum);
    }
    let sum: Rational = data.strata.iter().map(|s| s.chi.clone()).sum();
    Ok(sum == *total_chi)
}

/// Chi values of all strata keyed by subset.
pub fn chi_table(data: &ResolutionData) -> BTreeMap<Vec<String>, Rational> {
    data.strata
        .iter()
        .map(|s| (s.subset.iter().cloned().collect(), s.chi.clone()))
        .collect()
}
