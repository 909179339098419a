//! Stirling numbers, falling factorials, the closed-form two-variable
//! Hermite polynomials, and polylogarithm weights.
//!
//! These are recurrence/product constructions, deliberately independent of
//! the series engine so they can cross-check it.

use num_traits::{One, Zero};

use crate::poly::{MultiPoly, Var};
use crate::rat::{factorial, Rat};

/// Stirling numbers of the second kind via
/// `S2(n,k) = k·S2(n-1,k) + S2(n-1,k-1)`, `S2(0,0) = 1`; zero out of range.
pub fn stirling2(n: usize, k: usize) -> Rat {
    if k > n {
        return Rat::zero();
    }
    // row-by-row table, rows indexed 0..=n
    let mut row = vec![Rat::one()]; // S2(0, 0)
    for m in 1..=n {
        let mut next = Vec::with_capacity(m + 1);
        for j in 0..=m {
            let mut v = Rat::zero();
            if j >= 1 {
                v += &row[j - 1];
            }
            if j < row.len() {
                v += row[j].clone() * Rat::from_integer(j.into());
            }
            next.push(v);
        }
        row = next;
    }
    row[k].clone()
}

/// Signed Stirling numbers of the first kind via
/// `S1(n,k) = S1(n-1,k-1) - (n-1)·S1(n-1,k)`, `S1(0,0) = 1`.
pub fn stirling1(n: usize, k: usize) -> Rat {
    if k > n {
        return Rat::zero();
    }
    let mut row = vec![Rat::one()];
    for m in 1..=n {
        let mut next = Vec::with_capacity(m + 1);
        for j in 0..=m {
            let mut v = Rat::zero();
            if j >= 1 {
                v += &row[j - 1];
            }
            if j < row.len() {
                v -= row[j].clone() * Rat::from_integer((m - 1).into());
            }
            next.push(v);
        }
        row = next;
    }
    row[k].clone()
}

/// Step size for a falling factorial.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FallingStep {
    /// `(x)_n = x(x-1)···(x-n+1)`
    Unit,
    /// `(x|λ)_n = x(x-λ)···(x-(n-1)λ)`
    Lambda,
}

/// `(x)_n` or `(x|λ)_n` as a polynomial; the empty product is 1.
pub fn falling_factorial(n: usize, step: FallingStep) -> MultiPoly {
    let step_poly = match step {
        FallingStep::Unit => MultiPoly::one(),
        FallingStep::Lambda => MultiPoly::var(Var::L),
    };
    falling_factorial_of(&MultiPoly::var(Var::X), n, &step_poly)
}

/// Generalized falling factorial `Π_{i=0}^{n-1} (arg - i·step)`.
pub fn falling_factorial_of(arg: &MultiPoly, n: usize, step: &MultiPoly) -> MultiPoly {
    let mut acc = MultiPoly::one();
    for i in 0..n {
        let factor = arg.sub(&step.scale(&Rat::from_integer(i.into())));
        acc = acc.mul(&factor);
    }
    acc
}

/// Two-variable Hermite polynomial in closed form:
/// `H_n(x,y) = n! Σ_{k=0}^{⌊n/2⌋} x^{n-2k} y^k / (k!(n-2k)!)`.
pub fn hermite_closed(n: usize) -> MultiPoly {
    let x = MultiPoly::var(Var::X);
    let y = MultiPoly::var(Var::Y);
    let nf = Rat::from_integer(factorial(n));
    let mut acc = MultiPoly::zero();
    for k in 0..=n / 2 {
        let den = Rat::from_integer(factorial(k) * factorial(n - 2 * k));
        let coeff = nf.clone() / den;
        let term = x.pow((n - 2 * k) as u32).mul(&y.pow(k as u32)).scale(&coeff);
        acc = acc.add(&term);
    }
    acc
}

/// Polylogarithm weights `(1, 1/2^k, ..., 1/M^k)` for `Li_k`.
pub fn polylog_coeffs(k: u32, m: usize) -> Vec<Rat> {
    (1..=m as i64)
        .map(|i| Rat::from_integer(i.into()).pow(k as i32).recip())
        .collect()
}

/// `Σ_k S2(n,k) (x)_k`, the Stirling inversion of `x^n`; used by tests.
pub fn stirling2_falling_sum(n: usize) -> MultiPoly {
    let mut acc = MultiPoly::zero();
    for k in 0..=n {
        acc = acc.add(&falling_factorial(k, FallingStep::Unit).scale(&stirling2(n, k)));
    }
    acc
}

/// Coefficient of `x^k` in `(x)_n` must be `S1(n,k)`; used by tests.
pub fn falling_factorial_coeff(n: usize, k: usize) -> Rat {
    let p = falling_factorial(n, FallingStep::Unit);
    p.coeff(crate::poly::Monomial { ex: k as u32, ey: 0, eu: 0, el: 0 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rint};

    #[test]
    fn stirling2_examples() {
        assert_eq!(stirling2(0, 0), rint(1));
        assert_eq!(stirling2(4, 2), rint(7));
        assert_eq!(stirling2(3, 5), rint(0));
        assert_eq!(stirling2(5, 1), rint(1));
        assert_eq!(stirling2(6, 3), rint(90));
    }

    #[test]
    fn stirling1_examples() {
        assert_eq!(stirling1(3, 3), rint(1));
        assert_eq!(stirling1(3, 2), rint(-3));
        assert_eq!(stirling1(3, 1), rint(2));
        assert_eq!(stirling1(2, 0), rint(0));
        assert_eq!(stirling1(4, 2), rint(11));
    }

    #[test]
    fn falling_factorial_examples() {
        assert_eq!(falling_factorial(0, FallingStep::Lambda), MultiPoly::one());
        let x = MultiPoly::var(Var::X);
        let l = MultiPoly::var(Var::L);
        assert_eq!(
            falling_factorial(2, FallingStep::Lambda),
            x.pow(2).sub(&l.mul(&x))
        );
        assert_eq!(falling_factorial(4, FallingStep::Unit).render(), "x^4 - 6*x^3 + 11*x^2 - 6*x");
    }

    #[test]
    fn falling_factorial_matches_stirling1() {
        for n in 0..=20 {
            for k in 0..=n {
                assert_eq!(falling_factorial_coeff(n, k), stirling1(n, k), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn stirling2_inverts_falling_factorials() {
        let x = MultiPoly::var(Var::X);
        for n in 0..=20usize {
            assert_eq!(stirling2_falling_sum(n), x.pow(n as u32), "n={n}");
        }
    }

    #[test]
    fn hermite_closed_examples() {
        let x = MultiPoly::var(Var::X);
        let y = MultiPoly::var(Var::Y);
        assert_eq!(hermite_closed(0), MultiPoly::one());
        assert_eq!(hermite_closed(1), x);
        assert_eq!(hermite_closed(3), x.pow(3).add(&x.mul(&y).scale(&rint(6))));
    }

    #[test]
    fn polylog_coeffs_examples() {
        assert_eq!(polylog_coeffs(1, 3), vec![rint(1), rat(1, 2), rat(1, 3)]);
        assert_eq!(polylog_coeffs(2, 2), vec![rint(1), rat(1, 4)]);
        for k in 1..=4 {
            assert_eq!(polylog_coeffs(k, 5)[0], rint(1));
        }
    }
}
