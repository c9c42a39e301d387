//! Exact-arithmetic computation of motivic and stringy singularity invariants
//! from resolution/stratification data, together with the brute-force counting
//! oracles (congruence counts, jet-scheme point counts) that validate them.
//!
//! The crate is organised around five subsystems:
//!
//! - [`exactalg`]: rationals, sparse multivariate polynomials, reduced rational
//!   functions, truncated power series, and the sum-over-strata normal form
//!   ([`TermSum`]) that every closed-form invariant shares.
//! - [`strata`]: the resolution-data document model (components with
//!   multiplicities, strata with Euler/Hodge/class data), parsing, validation
//!   and singularity classification.
//! - [`invariants`]: the closed-form invariants themselves — normal-crossings
//!   integrals, motivic volume, motivic and topological zeta functions with
//!   pole extraction and the monodromy check, stringy invariants, the stringy
//!   zeta function, and the Seifert-data formula.
//! - [`jets`]: equations of the jet spaces of an affine variety by truncated
//!   power-series substitution.
//! - [`counting`]: exact point counting over finite rings, series assembly,
//!   and rational-function fitting/verification.

pub mod counting;
pub mod exactalg;
pub mod invariants;
pub mod jets;
pub mod strata;

pub use exactalg::{Factor, Level, MPoly, RatFunc, Rational, Term, TermSum, TruncSeries, Var};
pub use strata::{ComponentRecord, Context, ResolutionData, SingularityClass, StratumRecord};
