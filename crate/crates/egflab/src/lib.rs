//! Exact computer algebra for tangent-type polynomial families.
//!
//! The crate builds classical and generalized polynomial families —
//! Bernoulli, Euler, Genocchi and tangent polynomials of any order, the
//! two-variable Hermite polynomials, their Hermite-based combinations,
//! Carlitz-style and modified degenerate variants, and the polylogarithm
//! ("poly-") extensions — as truncated exponential generating functions
//! over exact rationals, then mechanically verifies a catalog of
//! identities relating them, coefficient by coefficient.
//!
//! Everything is exact: scalars are arbitrary-precision rationals,
//! coefficients are sparse multivariate polynomials in `x`, `y`, `u`, `λ`
//! (`u` Laurent), and equality claims are decided by term-set comparison at
//! a fixed truncation order. There is no floating point anywhere.
//!
//! Layering, bottom up:
//!
//! - [`rat`]: exact scalars and binomial coefficients
//! - [`poly`]: sparse multivariate polynomials (graded-lex canonical form)
//! - [`series`]: truncated EGF arithmetic (Cauchy products, unit and
//!   valuation-shift division, exponentials, outer composition)
//! - [`families`]: named constructors for every family, plus recurrence
//!   and closed-form oracles
//! - [`identity`]: the identity catalog, the exact checker, and reports
//! - [`cli`]: the `egflab` command-line front end
//!
//! The `examples/` directory demonstrates each capability as a runnable
//! program; `egflab --help` covers the CLI.

pub mod cli;
pub mod families;
pub mod identity;
pub mod poly;
pub mod rat;
pub mod series;

pub use families::{build, extract_polynomial, Family, FamilyError, FamilySpec};
pub use identity::{run_all, run_case, Registry, Report};
pub use poly::{Monomial, MultiPoly, SubstituteZeroIntoLaurent, Var};
pub use rat::{binomial, parse_rat, Rat};
pub use series::{EgfSeries, SeriesError};
