//! Sparse multivariate polynomials over the exact rationals.
//!
//! The variable set is fixed: `x`, `y`, `u`, `λ` (see [`Var`]). `u` is
//! Laurent — negative exponents are allowed — because the modified
//! degenerate families carry constant terms like `u^-1`. The other three
//! exponents are non-negative.
//!
//! Terms are kept in a `BTreeMap` keyed by [`Monomial`] under graded
//! lexicographic order with `x > y > u > λ`, so iteration, printing and
//! "first differing monomial" reports are all deterministic.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::rat::{pow_rat, Rat};

/// The four formal variables.
///
/// `U` stands for the reparameterization `u = ln(1+λ)/λ` used by the
/// modified degenerate families; `L` is `λ` itself (Carlitz-style
/// degenerate coefficients are polynomial in `λ` directly). Identity
/// checks reuse free slots for auxiliary shift symbols.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Var {
    X,
    Y,
    U,
    L,
}

impl Var {
    pub const ALL: [Var; 4] = [Var::X, Var::Y, Var::U, Var::L];

    pub fn symbol(self) -> &'static str {
        match self {
            Var::X => "x",
            Var::Y => "y",
            Var::U => "u",
            Var::L => "λ",
        }
    }
}

/// Exponent vector of a single term. Only `eu` may be negative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub ex: u32,
    pub ey: u32,
    pub eu: i32,
    pub el: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { ex: 0, ey: 0, eu: 0, el: 0 };

    pub fn var(v: Var) -> Monomial {
        let mut m = Monomial::ONE;
        match v {
            Var::X => m.ex = 1,
            Var::Y => m.ey = 1,
            Var::U => m.eu = 1,
            Var::L => m.el = 1,
        }
        m
    }

    pub fn exponent(self, v: Var) -> i64 {
        match v {
            Var::X => self.ex as i64,
            Var::Y => self.ey as i64,
            Var::U => self.eu as i64,
            Var::L => self.el as i64,
        }
    }

    fn with_exponent_zeroed(mut self, v: Var) -> Monomial {
        match v {
            Var::X => self.ex = 0,
            Var::Y => self.ey = 0,
            Var::U => self.eu = 0,
            Var::L => self.el = 0,
        }
        self
    }

    /// Total degree; `u^-1` counts as -1.
    pub fn degree(self) -> i64 {
        self.ex as i64 + self.ey as i64 + self.eu as i64 + self.el as i64
    }

    pub fn is_one(self) -> bool {
        self == Monomial::ONE
    }

    /// Canonical text form, e.g. `x^2*u^-1`; the unit monomial is `1`.
    pub fn render(self) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        for v in Var::ALL {
            let e = self.exponent(v);
            if e == 1 {
                parts.push(v.symbol().to_string());
            } else if e != 0 {
                parts.push(format!("{}^{}", v.symbol(), e));
            }
        }
        parts.join("*")
    }
}

/// Product of monomials: componentwise exponent sum.
impl std::ops::Mul for Monomial {
    type Output = Monomial;

    fn mul(self, other: Monomial) -> Monomial {
        Monomial {
            ex: self.ex + other.ex,
            ey: self.ey + other.ey,
            eu: self.eu + other.eu,
            el: self.el + other.el,
        }
    }
}

/// Graded lexicographic order with `x > y > u > λ`: compare total degree
/// first, then the exponent vectors in variable order.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.degree(), self.ex, self.ey, self.eu, self.el)
            .cmp(&(other.degree(), other.ex, other.ey, other.eu, other.el))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Substituting 0 for `u` where a negative power of `u` is present.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("substituting zero into a negative power of u")]
pub struct SubstituteZeroIntoLaurent;

/// Sparse multivariate polynomial with [`Rat`] coefficients.
///
/// Canonical form is an invariant, not a normalization pass: no stored
/// coefficient is zero, and equality is term-set equality.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, Rat>,
}

impl MultiPoly {
    pub fn zero() -> MultiPoly {
        MultiPoly::default()
    }

    pub fn one() -> MultiPoly {
        MultiPoly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> MultiPoly {
        let mut p = MultiPoly::zero();
        if !c.is_zero() {
            p.terms.insert(Monomial::ONE, c);
        }
        p
    }

    pub fn var(v: Var) -> MultiPoly {
        MultiPoly::term(Monomial::var(v), Rat::one())
    }

    /// Single term `c * m` (drops to zero if `c == 0`).
    pub fn term(m: Monomial, c: Rat) -> MultiPoly {
        let mut p = MultiPoly::zero();
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    /// Coefficient of `m` (zero if absent).
    pub fn coeff(&self, m: Monomial) -> Rat {
        self.terms.get(&m).cloned().unwrap_or_else(Rat::zero)
    }

    /// The polynomial as a constant, if it is one (zero counts).
    pub fn as_constant(&self) -> Option<Rat> {
        match self.terms.len() {
            0 => Some(Rat::zero()),
            1 => self.terms.get(&Monomial::ONE).cloned(),
            _ => None,
        }
    }

    /// If the polynomial is exactly `c * u^k` with `c != 0`, return `(c, k)`.
    pub fn as_unit_u_power(&self) -> Option<(Rat, i32)> {
        if self.terms.len() != 1 {
            return None;
        }
        let (m, c) = self.terms.iter().next().unwrap();
        if m.ex == 0 && m.ey == 0 && m.el == 0 {
            Some((c.clone(), m.eu))
        } else {
            None
        }
    }

    fn add_term(&mut self, m: Monomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }

    pub fn neg(&self) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            out.terms.insert(*m, -c.clone());
        }
        out
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(*ma * *mb, ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        let mut out = MultiPoly::zero();
        for (m, a) in &self.terms {
            out.terms.insert(*m, a * c);
        }
        out
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut acc = MultiPoly::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Replace `var` by the rational `value`; other variables untouched.
    ///
    /// Substituting `value == 0` into a negative power of `u` is rejected.
    pub fn substitute(&self, var: Var, value: &Rat) -> Result<MultiPoly, SubstituteZeroIntoLaurent> {
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let e = m.exponent(var);
            if value.is_zero() && e < 0 {
                return Err(SubstituteZeroIntoLaurent);
            }
            let factor = if e == 0 {
                Rat::one()
            } else if value.is_zero() {
                // 0^positive: the term vanishes
                continue;
            } else {
                pow_rat(value, e)
            };
            out.add_term(m.with_exponent_zeroed(var), c * factor);
        }
        Ok(out)
    }

    /// Exact value at a rational point. `u != 0` is required whenever a
    /// negative power of `u` occurs.
    pub fn eval(&self, x: &Rat, y: &Rat, u: &Rat, l: &Rat) -> Result<Rat, SubstituteZeroIntoLaurent> {
        let mut acc = Rat::zero();
        for (m, c) in &self.terms {
            if u.is_zero() && m.eu < 0 {
                return Err(SubstituteZeroIntoLaurent);
            }
            let mut v = c.clone();
            for (var, point) in [(Var::X, x), (Var::Y, y), (Var::U, u), (Var::L, l)] {
                let e = m.exponent(var);
                if e == 0 {
                    continue;
                }
                if point.is_zero() {
                    v = Rat::zero();
                    break;
                }
                v *= pow_rat(point, e);
            }
            acc += v;
        }
        Ok(acc)
    }

    /// Smallest term in graded-lex order, if any.
    pub fn min_term(&self) -> Option<(Monomial, Rat)> {
        self.terms.iter().next().map(|(m, c)| (*m, c.clone()))
    }

    /// Canonical text form: terms in descending graded-lex order,
    /// coefficients as `p/q`. The zero polynomial renders as `0`.
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if m.is_one() {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&m.render());
            } else {
                out.push_str(&format!("{}*{}", mag, m.render()));
            }
        }
        out
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rint};
    use proptest::prelude::*;

    fn x() -> MultiPoly {
        MultiPoly::var(Var::X)
    }
    fn y() -> MultiPoly {
        MultiPoly::var(Var::Y)
    }
    fn u() -> MultiPoly {
        MultiPoly::var(Var::U)
    }
    fn l() -> MultiPoly {
        MultiPoly::var(Var::L)
    }
    fn c(n: i64) -> MultiPoly {
        MultiPoly::constant(rint(n))
    }

    #[test]
    fn add_identity_and_inverse() {
        let p = x().mul(&x()).add(&y().scale(&rint(2)));
        assert_eq!(p.add(&MultiPoly::zero()), p);
        assert!(x().add(&x().neg()).is_zero());
    }

    #[test]
    fn add_cancels_middle_terms() {
        // (x^2 - 3x) + (3x + 2) = x^2 + 2
        let a = x().mul(&x()).sub(&x().scale(&rint(3)));
        let b = x().scale(&rint(3)).add(&c(2));
        let s = a.add(&b);
        assert_eq!(s.render(), "x^2 + 2");
        assert_eq!(s.eval(&rint(2), &rint(0), &rint(1), &rint(0)).unwrap(), rint(6));
    }

    #[test]
    fn mul_exponents_add() {
        assert_eq!(x().mul(&x()).render(), "x^2");
        // Laurent cancellation: u^-1 * u = 1
        let uinv = MultiPoly::term(Monomial { ex: 0, ey: 0, eu: -1, el: 0 }, rint(1));
        assert_eq!(uinv.mul(&u()), MultiPoly::one());
        // (x - λ) * x = x^2 - λx, i.e. the two-step falling factorial
        let p = x().sub(&l()).mul(&x());
        assert_eq!(p, x().mul(&x()).sub(&l().mul(&x())));
    }

    #[test]
    fn substitute_unit_and_zero() {
        let unm1 = MultiPoly::term(Monomial { ex: 1, ey: 0, eu: 3, el: 0 }, rint(1));
        assert_eq!(unm1.substitute(Var::U, &rint(1)).unwrap(), x());

        let p = x().mul(&x()).add(&y().scale(&rint(2)));
        assert_eq!(p.substitute(Var::X, &rint(0)).unwrap(), y().scale(&rint(2)));

        let uinv = MultiPoly::term(Monomial { ex: 0, ey: 0, eu: -1, el: 0 }, rint(1));
        assert_eq!(uinv.substitute(Var::U, &rint(0)), Err(SubstituteZeroIntoLaurent));
    }

    #[test]
    fn eval_examples() {
        let p = x().mul(&x()).add(&y().scale(&rint(2)));
        assert_eq!(p.eval(&rint(2), &rint(3), &rint(1), &rint(0)).unwrap(), rint(10));
        assert_eq!(MultiPoly::one().eval(&rat(7, 3), &rint(-4), &rat(1, 2), &rint(9)).unwrap(), rint(1));
        // (x)_3 = x^3 - 3x^2 + 2x at x = 5 equals 5 * 4 * 3
        let falling3 = x().pow(3).sub(&x().pow(2).scale(&rint(3))).add(&x().scale(&rint(2)));
        assert_eq!(falling3.eval(&rint(5), &rint(0), &rint(1), &rint(0)).unwrap(), rint(60));
        let uinv = MultiPoly::term(Monomial { ex: 0, ey: 0, eu: -2, el: 0 }, rint(1));
        assert_eq!(uinv.eval(&rint(0), &rint(0), &rint(0), &rint(0)), Err(SubstituteZeroIntoLaurent));
        assert_eq!(uinv.eval(&rint(0), &rint(0), &rat(1, 2), &rint(0)).unwrap(), rint(4));
    }

    #[test]
    fn graded_lex_order() {
        // degree dominates, then x > y > u > λ
        let m_x = Monomial::var(Var::X);
        let m_y = Monomial::var(Var::Y);
        let m_x2 = m_x * m_x;
        let m_uinv = Monomial { ex: 0, ey: 0, eu: -1, el: 0 };
        assert!(m_x2 > m_x);
        assert!(m_x > m_y);
        assert!(m_y > Monomial::var(Var::U));
        assert!(Monomial::var(Var::U) > Monomial::var(Var::L));
        assert!(Monomial::ONE > m_uinv);
        // xy (degree 2) beats x (degree 1)
        assert!(m_x * m_y > m_x);
    }

    #[test]
    fn render_canonical() {
        let p = x().pow(3).sub(&x().pow(2).scale(&rint(3))).add(&c(2));
        assert_eq!(p.render(), "x^3 - 3*x^2 + 2");
        assert_eq!(MultiPoly::zero().render(), "0");
        assert_eq!(c(-1).render(), "-1");
        let q = x().pow(2).add(&y().scale(&rint(2)));
        assert_eq!(q.render(), "x^2 + 2*y");
        let uinv = MultiPoly::term(Monomial { ex: 0, ey: 0, eu: -1, el: 0 }, rat(1, 2));
        assert_eq!(uinv.render(), "1/2*u^-1");
        let r = y().mul(&l()).sub(&x());
        assert_eq!(r.render(), "y*λ - x");
    }

    fn arb_rat() -> impl Strategy<Value = Rat> {
        (-9i64..=9, 1i64..=9).prop_map(|(p, q)| rat(p, q))
    }

    fn arb_monomial() -> impl Strategy<Value = Monomial> {
        (0u32..=2, 0u32..=2, -2i32..=2, 0u32..=2)
            .prop_map(|(ex, ey, eu, el)| Monomial { ex, ey, eu, el })
    }

    prop_compose! {
        fn arb_poly()(terms in prop::collection::vec((arb_monomial(), arb_rat()), 0..4)) -> MultiPoly {
            let mut p = MultiPoly::zero();
            for (m, c) in terms {
                p.add_term(m, c);
            }
            p
        }
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(a.add(&b), b.add(&a));
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        }

        #[test]
        fn eval_is_ring_homomorphism(a in arb_poly(), b in arb_poly()) {
            let (x, y, u, l) = (rat(2, 3), rat(-1, 2), rat(3, 5), rat(1, 7));
            let va = a.eval(&x, &y, &u, &l).unwrap();
            let vb = b.eval(&x, &y, &u, &l).unwrap();
            prop_assert_eq!(a.mul(&b).eval(&x, &y, &u, &l).unwrap(), &va * &vb);
            prop_assert_eq!(a.add(&b).eval(&x, &y, &u, &l).unwrap(), va + vb);
        }

        #[test]
        fn canonical_no_zero_coefficients(a in arb_poly(), b in arb_poly()) {
            for p in [a.add(&b), a.sub(&b), a.mul(&b)] {
                prop_assert!(p.terms().all(|(_, c)| !c.is_zero()));
            }
        }

        #[test]
        fn canonical_rebuild_is_identity(a in arb_poly(), b in arb_poly()) {
            // re-canonicalizing an operation result changes nothing
            let p = a.mul(&b);
            let rebuilt = p
                .terms()
                .fold(MultiPoly::zero(), |acc, (m, c)| acc.add(&MultiPoly::term(*m, c.clone())));
            prop_assert_eq!(rebuilt, p);
        }
    }
}
