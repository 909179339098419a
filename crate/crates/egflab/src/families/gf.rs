//! Generating-function constructors for every polynomial family.
//!
//! Each builder returns the truncated EGF of the family at the requested
//! order, with the polynomial argument slots (`x`, and `y` where present)
//! taking arbitrary polynomials. That is what lets the identity checker
//! form shifted or rescaled instances like `T_n(2x+2)` or
//! `_H T_n(x+u, y+v)` without any substitution machinery.
//!
//! Naming of the denominators follows the classical recipes:
//!
//! - Bernoulli-type: `(t/(e^t - 1))^r`
//! - Euler-type: `(2/(e^t + 1))^r`
//! - Genocchi-type: `(2t/(e^t + 1))^r`
//! - tangent-type: `(2/(e^{2t} + 1))^r`
//! - Hermite factor: `e^{xt + yt^2}`
//! - modified degenerate: replace `e^t` by `e^{ut}` (and the Hermite factor
//!   by `e^{u(xt + yt^2)}`), where `u` is a formal variable standing for
//!   `ln(1+λ)/λ`; the classical limit is the substitution `u := 1`
//! - Carlitz degenerate: replace `e^t` by `(1+λt)^{1/λ}`, whose EGF
//!   coefficients are the step-λ falling factorials
//! - poly-type: compose `Li_k` with `1 - e^{-t}` and divide as the recipe
//!   dictates; divisions by `t` are valuation shifts, so those builders
//!   work internally at order `N+1` to return order `N`

use crate::poly::{MultiPoly, Var};
use crate::rat::rint;
use crate::series::{EgfSeries, SeriesError};

use super::combinatorics::{falling_factorial_of, polylog_coeffs};

fn cpoly(n: i64) -> MultiPoly {
    MultiPoly::constant(rint(n))
}

fn u_poly() -> MultiPoly {
    MultiPoly::var(Var::U)
}

/// `e^{p t}`: the n-th coefficient is `p^n`.
pub fn exp_linear(order: usize, p: &MultiPoly) -> EgfSeries {
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut acc = MultiPoly::one();
    for n in 0..=order {
        if n > 0 {
            acc = acc.mul(p);
        }
        coeffs.push(acc.clone());
    }
    EgfSeries::from_coeffs(coeffs)
}

/// `e^{a t + b t^2}` through the series exponential.
pub fn exp_quadratic(order: usize, a: &MultiPoly, b: &MultiPoly) -> Result<EgfSeries, SeriesError> {
    let mut f = EgfSeries::zero(order);
    if order >= 1 {
        f = EgfSeries::linear_t(order, a.clone());
    }
    if order >= 2 {
        let mut coeffs = f.coeffs().to_vec();
        coeffs[2] = b.scale(&rint(2)); // b t^2 = 2b · t^2/2!
        f = EgfSeries::from_coeffs(coeffs);
    }
    f.exp()
}

/// `e^{c t} + 1` for an integer multiple `c` of a polynomial exponent.
fn exp_plus_one(order: usize, p: &MultiPoly) -> Result<EgfSeries, SeriesError> {
    exp_linear(order, p).add(&EgfSeries::one(order))
}

/// `e^{p t} - 1`.
fn exp_minus_one(order: usize, p: &MultiPoly) -> Result<EgfSeries, SeriesError> {
    exp_linear(order, p).sub(&EgfSeries::one(order))
}

/// `1 - e^{-t}`.
pub fn one_minus_exp_neg(order: usize) -> EgfSeries {
    EgfSeries::one(order)
        .sub(&exp_linear(order, &cpoly(-1)))
        .expect("orders agree")
}

/// Truncated `Li_k(1 - e^{-t})`; the outer sum runs to the truncation
/// order, which is exact because `(1 - e^{-t})^m` has valuation `m`.
pub fn polylog_series(order: usize, k: u32) -> Result<EgfSeries, SeriesError> {
    EgfSeries::compose_outer(&polylog_coeffs(k, order), &one_minus_exp_neg(order))
}

/// `(t/(e^t - 1))^r`, the order-r Bernoulli factor.
pub fn bernoulli_base(order: usize, r: u32) -> Result<EgfSeries, SeriesError> {
    let num = EgfSeries::linear_t(order + 1, MultiPoly::one());
    let den = exp_minus_one(order + 1, &MultiPoly::one())?;
    Ok(num.div_shift(&den)?.pow(r))
}

/// `(2/(e^{2t} + 1))^r`, the order-r tangent factor.
pub fn tangent_base(order: usize, r: u32) -> Result<EgfSeries, SeriesError> {
    let den = exp_plus_one(order, &cpoly(2))?;
    Ok(EgfSeries::constant(order, cpoly(2)).div_unit(&den)?.pow(r))
}

/// Order-r Bernoulli polynomials: `(t/(e^t-1))^r e^{xt}`.
pub fn bernoulli(order: usize, r: u32, x: &MultiPoly) -> Result<EgfSeries, SeriesError> {
    bernoulli_base(order, r)?.mul(&exp_linear(order, x))
}

/// Order-r Euler polynomials: `(2/(e^t+1))^r e^{xt}`.
pub fn euler(order: usize, r: u32, x: &MultiPoly) -> Result<EgfSeries, SeriesError> {
    let den = exp_plus_one(order, &MultiPoly::one())?;
    let base = EgfSeries::constant(order, cpoly(2)).div_unit(&den)?.pow(r);
    base.mul(&exp_linear(order, x))
}

/// Order-r Genocchi polynomials: `(2t/(e^t+1))^r e^{xt}`.
pub fn genocchi(order: usize, r: u32, x: &MultiPoly) -> Result<EgfSeries, SeriesError> {
    let den = exp_plus_one(order, &MultiPoly::one())?;
    let base = EgfSeries::linear_t(order, cpoly(2)).div_unit(&den)?.pow(r);
    base.mul(&exp_linear(order, x))
}

/// Order-r tangent polynomials: `(2/(e^{2t}+1))^r e^{xt}`.
pub fn tangent(order: usize, r: u32, x: &MultiPoly) -> Result<EgfSeries, SeriesError> {
    tangent_base(order, r)?.mul(&exp_linear(order, x))
}

/// Two-variable Hermite polynomials: `e^{xt + yt^2}`.
pub fn hermite(order: usize, x: &MultiPoly, y: &MultiPoly) -> Result<EgfSeries, SeriesError> {
    exp_quadratic(order, x, y)
}

/// Hermite-based Bernoulli polynomials of order r:
/// `(t/(e^t-1))^r e^{xt+yt^2}`.
pub fn hermite_bernoulli(
    order: usize,
    r: u32,
    x: &MultiPoly,
    y: &MultiPoly,
) -> Result<EgfSeries, SeriesError> {
    bernoulli_base(order, r)?.mul(&exp_quadratic(order, x, y)?)
}

/// Hermite-based Euler polynomials: `(2/(e^t+1)) e^{xt+yt^2}`.
pub fn hermite_euler(order: usize, x: &MultiPoly, y: &MultiPoly) -> Result<EgfSeries, SeriesError> {
    let den = exp_plus_one(order, &MultiPoly::one())?;
    let base = EgfSeries::constant(order, cpoly(2)).div_unit(&den)?;
    base.mul(&exp_quadratic(order, x, y)?)
}

/// Hermite-based tangent polynomials of order r:
/// `(2/(e^{2t}+1))^r e^{xt+yt^2}`.
pub fn hermite_tangent(
    order: usize,
    r: u32,
    x: &MultiPoly,
    y: &MultiPoly,
) -> Result<EgfSeries, SeriesError> {
    tangent_base(order, r)?.mul(&exp_quadratic(order, x, y)?)
}

/// `(1+λt)^{p/λ}`: the n-th coefficient is the step-λ falling factorial
/// `(p|λ)_n`.
pub fn carlitz_power(order: usize, p: &MultiPoly) -> EgfSeries {
    let lambda = MultiPoly::var(Var::L);
    let coeffs = (0..=order).map(|n| falling_factorial_of(p, n, &lambda)).collect();
    EgfSeries::from_coeffs(coeffs)
}

/// Carlitz degenerate Bernoulli polynomials:
/// `t/((1+λt)^{1/λ} - 1) · (1+λt)^{x/λ}`.
pub fn carlitz_deg_bernoulli(order: usize, x: &MultiPoly) -> Result<EgfSeries, SeriesError> {
    let num = EgfSeries::linear_t(order + 1, MultiPoly::one());
    let den = carlitz_power(order + 1, &MultiPoly::one()).sub(&EgfSeries::one(order + 1))?;
    num.div_shift(&den)?.mul(&carlitz_power(order, x))
}

/// Modified degenerate Bernoulli polynomials: `t/(e^{ut} - 1) · e^{uxt}`.
pub fn mod_deg_bernoulli(order: usize, x: &MultiPoly) -> Result<EgfSeries, SeriesError> {
    let num = EgfSeries::linear_t(order + 1, MultiPoly::one());
    let den = exp_minus_one(order + 1, &u_poly())?;
    num.div_shift(&den)?.mul(&exp_linear(order, &u_poly().mul(x)))
}

/// Modified degenerate Euler polynomials: `2/(e^{ut} + 1) · e^{uxt}`.
pub fn mod_deg_euler(order: usize, x: &MultiPoly) -> Result<EgfSeries, SeriesError> {
    let den = exp_plus_one(order, &u_poly())?;
    let base = EgfSeries::constant(order, cpoly(2)).div_unit(&den)?;
    base.mul(&exp_linear(order, &u_poly().mul(x)))
}

/// Modified degenerate Genocchi polynomials: `2t/(e^{ut} + 1) · e^{uxt}`.
pub fn mod_deg_genocchi(order: usize, x: &MultiPoly) -> Result<EgfSeries, SeriesError> {
    let den = exp_plus_one(order, &u_poly())?;
    let base = EgfSeries::linear_t(order, cpoly(2)).div_unit(&den)?;
    base.mul(&exp_linear(order, &u_poly().mul(x)))
}

/// Modified degenerate Hermite polynomials: `e^{u(xt + yt^2)}`.
pub fn mod_deg_hermite(order: usize, x: &MultiPoly, y: &MultiPoly) -> Result<EgfSeries, SeriesError> {
    exp_quadratic(order, &u_poly().mul(x), &u_poly().mul(y))
}

/// Modified degenerate Hermite-based tangent polynomials of order r:
/// `(2/(e^{2ut} + 1))^r e^{u(xt + yt^2)}`.
pub fn mod_deg_hermite_tangent(
    order: usize,
    r: u32,
    x: &MultiPoly,
    y: &MultiPoly,
) -> Result<EgfSeries, SeriesError> {
    let den = exp_plus_one(order, &u_poly().scale(&rint(2)))?;
    let base = EgfSeries::constant(order, cpoly(2)).div_unit(&den)?.pow(r);
    base.mul(&mod_deg_hermite(order, x, y)?)
}

/// Modified Hermite-based Bernoulli polynomials:
/// `t/(e^{ut} - 1) · e^{u(xt + yt^2)}`.
pub fn mod_hermite_bernoulli(
    order: usize,
    x: &MultiPoly,
    y: &MultiPoly,
) -> Result<EgfSeries, SeriesError> {
    let num = EgfSeries::linear_t(order + 1, MultiPoly::one());
    let den = exp_minus_one(order + 1, &u_poly())?;
    num.div_shift(&den)?.mul(&mod_deg_hermite(order, x, y)?)
}

/// Modified Hermite-based Euler polynomials:
/// `2/(e^{ut} + 1) · e^{u(xt + yt^2)}`.
pub fn mod_hermite_euler(
    order: usize,
    x: &MultiPoly,
    y: &MultiPoly,
) -> Result<EgfSeries, SeriesError> {
    let den = exp_plus_one(order, &u_poly())?;
    let base = EgfSeries::constant(order, cpoly(2)).div_unit(&den)?;
    base.mul(&mod_deg_hermite(order, x, y)?)
}

/// Poly-Bernoulli polynomials: `Li_k(1-e^{-t})/(1-e^{-t}) · e^{xt}`.
pub fn poly_bernoulli(order: usize, k: u32, x: &MultiPoly) -> Result<EgfSeries, SeriesError> {
    let num = polylog_series(order + 1, k)?;
    let den = one_minus_exp_neg(order + 1);
    num.div_shift(&den)?.mul(&exp_linear(order, x))
}

/// Poly-Euler polynomials: `2 Li_k(1-e^{-t}) / (t(e^t+1)) · e^{xt}`.
pub fn poly_euler(order: usize, k: u32, x: &MultiPoly) -> Result<EgfSeries, SeriesError> {
    let num = polylog_series(order + 1, k)?.scale_rat(&rint(2));
    let shifted = num.div_shift(&EgfSeries::linear_t(order + 1, MultiPoly::one()))?;
    let den = exp_plus_one(order, &MultiPoly::one())?;
    shifted.div_unit(&den)?.mul(&exp_linear(order, x))
}

/// Poly-Genocchi polynomials: `2 Li_k(1-e^{-t}) / (e^t+1) · e^{xt}`.
pub fn poly_genocchi(order: usize, k: u32, x: &MultiPoly) -> Result<EgfSeries, SeriesError> {
    let num = polylog_series(order, k)?.scale_rat(&rint(2));
    let den = exp_plus_one(order, &MultiPoly::one())?;
    num.div_unit(&den)?.mul(&exp_linear(order, x))
}

/// Hermite-based poly-tangent polynomials:
/// `2 Li_k(1-e^{-t}) / (t(e^{2t}+1)) · e^{xt+yt^2}`.
pub fn hermite_poly_tangent(
    order: usize,
    k: u32,
    x: &MultiPoly,
    y: &MultiPoly,
) -> Result<EgfSeries, SeriesError> {
    let num = polylog_series(order + 1, k)?.scale_rat(&rint(2));
    let shifted = num.div_shift(&EgfSeries::linear_t(order + 1, MultiPoly::one()))?;
    let den = exp_plus_one(order, &cpoly(2))?;
    shifted.div_unit(&den)?.mul(&exp_quadratic(order, x, y)?)
}
