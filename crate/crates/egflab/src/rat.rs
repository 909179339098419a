//! Exact scalar arithmetic: arbitrary-precision rationals and binomial
//! coefficients.
//!
//! Every coefficient in this crate is a [`Rat`]. The backing type keeps
//! fractions canonical by construction: the denominator is positive, the
//! fraction is fully reduced, and zero is `0/1`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational number, always in canonical form.
pub type Rat = num_rational::BigRational;

/// `p/q` as a [`Rat`]. Panics if `q == 0`.
pub fn rat(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// Integer `n` as a [`Rat`].
pub fn rint(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// `n!` as a big integer.
pub fn factorial(n: usize) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= BigInt::from(i);
    }
    acc
}

/// Binomial coefficient `C(n, k)`, exactly; zero when `k < 0` or `k > n`.
pub fn binomial(n: usize, k: i64) -> Rat {
    if k < 0 || k as u128 > n as u128 {
        return Rat::zero();
    }
    let k = (k as usize).min(n - k as usize);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= BigInt::from(n - i);
        den *= BigInt::from(i + 1);
    }
    Rat::new(num, den)
}

/// Exact integer power with negative exponents allowed.
///
/// `base == 0` with a negative exponent is the caller's error; this panics,
/// callers guard it (see `MultiPoly::substitute`).
pub fn pow_rat(base: &Rat, exp: i64) -> Rat {
    if exp == 0 {
        return Rat::one();
    }
    let mag = base.pow(exp.unsigned_abs().try_into().expect("exponent fits i32"));
    if exp < 0 {
        mag.recip()
    } else {
        mag
    }
}

/// Parse `"p"` or `"p/q"` (optional leading sign on `p`) into a [`Rat`].
pub fn parse_rat(s: &str) -> Result<Rat, ParseRatError> {
    let s = s.trim();
    let mk_err = || ParseRatError(s.to_string());
    match s.split_once('/') {
        None => {
            let p: BigInt = s.parse().map_err(|_| mk_err())?;
            Ok(Rat::from_integer(p))
        }
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| mk_err())?;
            let q: BigInt = q.trim().parse().map_err(|_| mk_err())?;
            if q.is_zero() || q.is_negative() {
                return Err(mk_err());
            }
            Ok(Rat::new(p, q))
        }
    }
}

/// Error for a malformed rational literal.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("not a rational literal (expected `p` or `p/q` with q > 0): `{0}`")]
pub struct ParseRatError(pub String);
