//! Truncated exponential-generating-function arithmetic.
//!
//! An [`EgfSeries`] of order `N` stores polynomials `P_0 .. P_N` and stands
//! for `f(t) = Σ_{n=0}^{N} P_n t^n/n! + O(t^{N+1})`. Coefficients are kept
//! EGF-normalized (`P_n`, not `P_n/n!`) because every family built on top
//! of this module is defined against `t^n/n!`, so extracting the n-th
//! polynomial of a family is a direct read.
//!
//! Binary operations insist on equal truncation order on both operands;
//! mixing orders silently is how wrong identity verdicts happen, so it is
//! an error here. Division by a series of valuation `v` cancels `t^v` from
//! both sides and returns a series of the *reduced* order `N - v` — callers
//! that need order `N` must start from order `N + v`.

use num_traits::{One, Zero};

use crate::poly::{Monomial, MultiPoly};
use crate::rat::{binomial, Rat};

/// Errors from series arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SeriesError {
    #[error("series truncation orders differ: {0} vs {1}")]
    OrderMismatch(usize, usize),
    #[error("constant term `{0}` is not a unit (nonzero rational times a power of u)")]
    NonUnitConstantTerm(String),
    #[error("leading coefficient `{coeff}` at t^{valuation} is not a unit")]
    NonUnitLeadingTerm { valuation: usize, coeff: String },
    #[error("numerator valuation {numerator} is below divisor valuation {divisor}")]
    ValuationError { numerator: usize, divisor: usize },
    #[error("exponential requires a zero constant term, found `{0}`")]
    NonzeroConstantTerm(String),
    #[error("coefficient index {index} is beyond truncation order {order}")]
    IndexBeyondTruncation { index: usize, order: usize },
}

/// Truncated EGF with [`MultiPoly`] coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EgfSeries {
    coeffs: Vec<MultiPoly>,
}

impl EgfSeries {
    /// The zero series of the given order.
    pub fn zero(order: usize) -> EgfSeries {
        EgfSeries { coeffs: vec![MultiPoly::zero(); order + 1] }
    }

    /// The constant series `P_0 = c`.
    pub fn constant(order: usize, c: MultiPoly) -> EgfSeries {
        let mut s = EgfSeries::zero(order);
        s.coeffs[0] = c;
        s
    }

    pub fn one(order: usize) -> EgfSeries {
        EgfSeries::constant(order, MultiPoly::one())
    }

    /// `p * t` (so `P_1 = p`); the zero series when `order == 0`.
    pub fn linear_t(order: usize, p: MultiPoly) -> EgfSeries {
        let mut s = EgfSeries::zero(order);
        if order >= 1 {
            s.coeffs[1] = p;
        }
        s
    }

    /// Build from explicit coefficients `P_0..P_N`. Panics on empty input.
    pub fn from_coeffs(coeffs: Vec<MultiPoly>) -> EgfSeries {
        assert!(!coeffs.is_empty(), "a series has at least P_0");
        EgfSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// `P_n`, or an error past the truncation order.
    pub fn coeff(&self, n: usize) -> Result<&MultiPoly, SeriesError> {
        self.coeffs
            .get(n)
            .ok_or(SeriesError::IndexBeyondTruncation { index: n, order: self.order() })
    }

    pub fn coeffs(&self) -> &[MultiPoly] {
        &self.coeffs
    }

    /// Index of the first nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|p| !p.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.valuation().is_none()
    }

    fn check_same_order(&self, other: &EgfSeries) -> Result<(), SeriesError> {
        if self.order() != other.order() {
            Err(SeriesError::OrderMismatch(self.order(), other.order()))
        } else {
            Ok(())
        }
    }

    pub fn add(&self, other: &EgfSeries) -> Result<EgfSeries, SeriesError> {
        self.check_same_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.add(b))
            .collect();
        Ok(EgfSeries { coeffs })
    }

    pub fn sub(&self, other: &EgfSeries) -> Result<EgfSeries, SeriesError> {
        self.check_same_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.sub(b))
            .collect();
        Ok(EgfSeries { coeffs })
    }

    pub fn neg(&self) -> EgfSeries {
        EgfSeries { coeffs: self.coeffs.iter().map(MultiPoly::neg).collect() }
    }

    /// Termwise product with a single polynomial.
    pub fn scale_poly(&self, p: &MultiPoly) -> EgfSeries {
        EgfSeries { coeffs: self.coeffs.iter().map(|c| c.mul(p)).collect() }
    }

    /// EGF (binomial) convolution: `(f·g)_n = Σ_k C(n,k) f_k g_{n-k}`.
    pub fn mul(&self, other: &EgfSeries) -> Result<EgfSeries, SeriesError> {
        self.check_same_order(other)?;
        let n_max = self.order();
        let mut coeffs = Vec::with_capacity(n_max + 1);
        for n in 0..=n_max {
            let mut acc = MultiPoly::zero();
            for k in 0..=n {
                let (fk, gnk) = (&self.coeffs[k], &other.coeffs[n - k]);
                if fk.is_zero() || gnk.is_zero() {
                    continue;
                }
                acc = acc.add(&fk.mul(gnk).scale(&binomial(n, k as i64)));
            }
            coeffs.push(acc);
        }
        Ok(EgfSeries { coeffs })
    }

    /// `f^r` by repeated multiplication; `f^0 = 1`.
    pub fn pow(&self, r: u32) -> EgfSeries {
        let mut acc = EgfSeries::one(self.order());
        for _ in 0..r {
            acc = acc.mul(self).expect("orders agree by construction");
        }
        acc
    }

    /// Divide by a series whose constant term is a unit
    /// (a nonzero rational times a power of `u`), by forward substitution:
    /// `q_n = g_0^{-1} (f_n - Σ_{k<n} C(n,k) q_k g_{n-k})`.
    pub fn div_unit(&self, g: &EgfSeries) -> Result<EgfSeries, SeriesError> {
        self.check_same_order(g)?;
        let (c0, k0) = g.coeffs[0]
            .as_unit_u_power()
            .ok_or_else(|| SeriesError::NonUnitConstantTerm(g.coeffs[0].render()))?;
        let g0_inv = MultiPoly::term(Monomial { ex: 0, ey: 0, eu: -k0, el: 0 }, c0.recip());
        let n_max = self.order();
        let mut q: Vec<MultiPoly> = Vec::with_capacity(n_max + 1);
        for n in 0..=n_max {
            let mut acc = self.coeffs[n].clone();
            for (k, qk) in q.iter().enumerate() {
                let gnk = &g.coeffs[n - k];
                if qk.is_zero() || gnk.is_zero() {
                    continue;
                }
                acc = acc.sub(&qk.mul(gnk).scale(&binomial(n, k as i64)));
            }
            q.push(acc.mul(&g0_inv));
        }
        Ok(EgfSeries { coeffs: q })
    }

    /// Divide by a series of positive valuation `v`: cancel `t^v` from both
    /// operands and delegate to [`EgfSeries::div_unit`]. The ordinary
    /// `t^v`-coefficient of `g` must be a unit. The result has order `N - v`.
    pub fn div_shift(&self, g: &EgfSeries) -> Result<EgfSeries, SeriesError> {
        self.check_same_order(g)?;
        let v = match g.valuation() {
            Some(v) => v,
            None => {
                return Err(SeriesError::NonUnitLeadingTerm {
                    valuation: 0,
                    coeff: "0".to_string(),
                })
            }
        };
        match self.valuation() {
            Some(fv) if fv < v => {
                return Err(SeriesError::ValuationError { numerator: fv, divisor: v })
            }
            _ => {}
        }
        if v > self.order() {
            return Err(SeriesError::ValuationError { numerator: self.order(), divisor: v });
        }
        let f_shift = self.shift_down(v);
        let g_shift = g.shift_down(v);
        if g_shift.coeffs[0].as_unit_u_power().is_none() {
            return Err(SeriesError::NonUnitLeadingTerm {
                valuation: v,
                coeff: g_shift.coeffs[0].render(),
            });
        }
        f_shift.div_unit(&g_shift)
    }

    /// `f(t)/t^v` for a series with valuation >= v. In EGF normalization the
    /// shifted coefficient is `P_{m+v} * m!/(m+v)!`.
    fn shift_down(&self, v: usize) -> EgfSeries {
        debug_assert!(self.valuation().is_none_or(|fv| fv >= v));
        let new_order = self.order() - v;
        let mut coeffs = Vec::with_capacity(new_order + 1);
        for m in 0..=new_order {
            // m!/(m+v)! = 1 / ((m+1)(m+2)...(m+v))
            let mut den = Rat::one();
            for i in 1..=v {
                den *= Rat::from_integer((m + i).into());
            }
            coeffs.push(self.coeffs[m + v].scale(&den.recip()));
        }
        EgfSeries { coeffs }
    }

    /// `exp(f)` for a series with zero constant term, via the recurrence
    /// `E_0 = 1`, `E_n = Σ_{k=1}^{n} C(n-1,k-1) f_k E_{n-k}` (from
    /// `(exp f)' = f' · exp f`).
    pub fn exp(&self) -> Result<EgfSeries, SeriesError> {
        if !self.coeffs[0].is_zero() {
            return Err(SeriesError::NonzeroConstantTerm(self.coeffs[0].render()));
        }
        let n_max = self.order();
        let mut e: Vec<MultiPoly> = Vec::with_capacity(n_max + 1);
        e.push(MultiPoly::one());
        for n in 1..=n_max {
            let mut acc = MultiPoly::zero();
            for k in 1..=n {
                let (fk, enk) = (&self.coeffs[k], &e[n - k]);
                if fk.is_zero() || enk.is_zero() {
                    continue;
                }
                acc = acc.add(&fk.mul(enk).scale(&binomial(n - 1, k as i64 - 1)));
            }
            e.push(acc);
        }
        Ok(EgfSeries { coeffs: e })
    }

    /// Outer composition `Σ_{m=1}^{M} c_m g^m` for `g` with zero constant
    /// term. Each `g^m` has valuation >= m, so the sum is exact once
    /// `M >= order`.
    pub fn compose_outer(outer: &[Rat], g: &EgfSeries) -> Result<EgfSeries, SeriesError> {
        if !g.coeffs[0].is_zero() {
            return Err(SeriesError::ValuationError { numerator: 0, divisor: 1 });
        }
        let n_max = g.order();
        let mut acc = EgfSeries::zero(n_max);
        let mut power = g.clone();
        for (m, c) in outer.iter().enumerate() {
            if m + 1 > n_max {
                break;
            }
            if !c.is_zero() {
                acc = acc.add(&power.scale_rat(c))?;
            }
            if m + 2 <= n_max {
                power = power.mul(g)?;
            }
        }
        Ok(acc)
    }

    /// Termwise rational scaling of every coefficient.
    pub fn scale_rat(&self, c: &Rat) -> EgfSeries {
        EgfSeries { coeffs: self.coeffs.iter().map(|p| p.scale(c)).collect() }
    }

    /// Substitute `t -> a t`, i.e. `P_n -> a^n P_n`.
    pub fn scale_t(&self, a: &Rat) -> EgfSeries {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        let mut an = Rat::one();
        for (n, p) in self.coeffs.iter().enumerate() {
            if n > 0 {
                an *= a;
            }
            coeffs.push(p.scale(&an));
        }
        EgfSeries { coeffs }
    }
}
