//! Named polynomial families and number sequences.
//!
//! [`build`] turns a [`FamilySpec`] into the family's truncated EGF with
//! the default symbolic arguments (`x`, and `y` for the Hermite-based
//! families). The [`gf`] submodule exposes the same constructors with
//! arbitrary polynomial arguments; [`combinatorics`] holds the recurrence
//! and closed-form oracles that cross-check the series route.

pub mod combinatorics;
pub mod gf;

use crate::poly::{MultiPoly, Var};
use crate::series::{EgfSeries, SeriesError};

/// Every family this crate constructs, with its stable string id.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Bernoulli,
    Euler,
    Genocchi,
    Tangent,
    Hermite,
    HermiteBernoulli,
    HermiteEuler,
    HermiteTangent,
    CarlitzDegBernoulli,
    ModDegBernoulli,
    ModDegEuler,
    ModDegGenocchi,
    ModDegHermite,
    ModDegHermiteTangent,
    ModHermiteBernoulli,
    ModHermiteEuler,
    PolyBernoulli,
    PolyEuler,
    PolyGenocchi,
    HermitePolyTangent,
}

impl Family {
    pub const ALL: [Family; 20] = [
        Family::Bernoulli,
        Family::Euler,
        Family::Genocchi,
        Family::Tangent,
        Family::Hermite,
        Family::HermiteBernoulli,
        Family::HermiteEuler,
        Family::HermiteTangent,
        Family::CarlitzDegBernoulli,
        Family::ModDegBernoulli,
        Family::ModDegEuler,
        Family::ModDegGenocchi,
        Family::ModDegHermite,
        Family::ModDegHermiteTangent,
        Family::ModHermiteBernoulli,
        Family::ModHermiteEuler,
        Family::PolyBernoulli,
        Family::PolyEuler,
        Family::PolyGenocchi,
        Family::HermitePolyTangent,
    ];

    /// Kebab-case identifier, the contract for the CLI and reports.
    pub fn id(self) -> &'static str {
        match self {
            Family::Bernoulli => "bernoulli",
            Family::Euler => "euler",
            Family::Genocchi => "genocchi",
            Family::Tangent => "tangent",
            Family::Hermite => "hermite",
            Family::HermiteBernoulli => "hermite-bernoulli",
            Family::HermiteEuler => "hermite-euler",
            Family::HermiteTangent => "hermite-tangent",
            Family::CarlitzDegBernoulli => "carlitz-deg-bernoulli",
            Family::ModDegBernoulli => "mod-deg-bernoulli",
            Family::ModDegEuler => "mod-deg-euler",
            Family::ModDegGenocchi => "mod-deg-genocchi",
            Family::ModDegHermite => "mod-deg-hermite",
            Family::ModDegHermiteTangent => "mod-deg-hermite-tangent",
            Family::ModHermiteBernoulli => "mod-hermite-bernoulli",
            Family::ModHermiteEuler => "mod-hermite-euler",
            Family::PolyBernoulli => "poly-bernoulli",
            Family::PolyEuler => "poly-euler",
            Family::PolyGenocchi => "poly-genocchi",
            Family::HermitePolyTangent => "hermite-poly-tangent",
        }
    }

    pub fn parse(id: &str) -> Option<Family> {
        Family::ALL.into_iter().find(|f| f.id() == id)
    }

    /// Families defined with a polylogarithm index `k`.
    pub fn is_poly(self) -> bool {
        matches!(
            self,
            Family::PolyBernoulli | Family::PolyEuler | Family::PolyGenocchi | Family::HermitePolyTangent
        )
    }

    /// Families that carry an order parameter `r` (including `r = 0`,
    /// where the defining factor collapses to 1).
    pub fn supports_order(self) -> bool {
        matches!(
            self,
            Family::Bernoulli
                | Family::Euler
                | Family::Genocchi
                | Family::Tangent
                | Family::HermiteBernoulli
                | Family::HermiteTangent
                | Family::ModDegHermiteTangent
        )
    }
}

/// A named, parameterized recipe for one family at one truncation order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilySpec {
    pub family: Family,
    /// Order `r`; meaningful only for [`Family::supports_order`] families,
    /// must be 1 elsewhere.
    pub order_r: u32,
    /// Polylogarithm index; present exactly for the poly-families.
    pub polylog_k: Option<u32>,
    /// Truncation order `N` of the resulting series.
    pub truncation: usize,
}

impl FamilySpec {
    pub fn new(family: Family, truncation: usize) -> FamilySpec {
        FamilySpec {
            family,
            order_r: 1,
            polylog_k: if family.is_poly() { Some(1) } else { None },
            truncation,
        }
    }

    pub fn with_order(mut self, r: u32) -> FamilySpec {
        self.order_r = r;
        self
    }

    pub fn with_polylog(mut self, k: u32) -> FamilySpec {
        self.polylog_k = Some(k);
        self
    }

    pub fn validate(&self) -> Result<(), FamilyError> {
        if self.family.is_poly() {
            match self.polylog_k {
                None => {
                    return Err(FamilyError::InvalidSpec(format!(
                        "family `{}` requires a polylogarithm index k >= 1",
                        self.family.id()
                    )))
                }
                Some(0) => {
                    return Err(FamilyError::InvalidSpec(format!(
                        "family `{}` requires k >= 1, got 0",
                        self.family.id()
                    )))
                }
                Some(_) => {}
            }
        } else if self.polylog_k.is_some() {
            return Err(FamilyError::InvalidSpec(format!(
                "family `{}` does not take a polylogarithm index",
                self.family.id()
            )));
        }
        if !self.family.supports_order() && self.order_r != 1 {
            return Err(FamilyError::InvalidSpec(format!(
                "family `{}` is defined at order 1 only, got r = {}",
                self.family.id(),
                self.order_r
            )));
        }
        Ok(())
    }
}

/// Errors from family construction.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FamilyError {
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("invalid family parameters: {0}")]
    InvalidSpec(String),
    #[error(transparent)]
    Series(#[from] SeriesError),
}

/// Build the family's EGF at its default symbolic arguments.
pub fn build(spec: &FamilySpec) -> Result<EgfSeries, FamilyError> {
    spec.validate()?;
    let n = spec.truncation;
    let r = spec.order_r;
    let k = spec.polylog_k.unwrap_or(1);
    let x = MultiPoly::var(Var::X);
    let y = MultiPoly::var(Var::Y);
    let series = match spec.family {
        Family::Bernoulli => gf::bernoulli(n, r, &x)?,
        Family::Euler => gf::euler(n, r, &x)?,
        Family::Genocchi => gf::genocchi(n, r, &x)?,
        Family::Tangent => gf::tangent(n, r, &x)?,
        Family::Hermite => gf::hermite(n, &x, &y)?,
        Family::HermiteBernoulli => gf::hermite_bernoulli(n, r, &x, &y)?,
        Family::HermiteEuler => gf::hermite_euler(n, &x, &y)?,
        Family::HermiteTangent => gf::hermite_tangent(n, r, &x, &y)?,
        Family::CarlitzDegBernoulli => gf::carlitz_deg_bernoulli(n, &x)?,
        Family::ModDegBernoulli => gf::mod_deg_bernoulli(n, &x)?,
        Family::ModDegEuler => gf::mod_deg_euler(n, &x)?,
        Family::ModDegGenocchi => gf::mod_deg_genocchi(n, &x)?,
        Family::ModDegHermite => gf::mod_deg_hermite(n, &x, &y)?,
        Family::ModDegHermiteTangent => gf::mod_deg_hermite_tangent(n, r, &x, &y)?,
        Family::ModHermiteBernoulli => gf::mod_hermite_bernoulli(n, &x, &y)?,
        Family::ModHermiteEuler => gf::mod_hermite_euler(n, &x, &y)?,
        Family::PolyBernoulli => gf::poly_bernoulli(n, k, &x)?,
        Family::PolyEuler => gf::poly_euler(n, k, &x)?,
        Family::PolyGenocchi => gf::poly_genocchi(n, k, &x)?,
        Family::HermitePolyTangent => gf::hermite_poly_tangent(n, k, &x, &y)?,
    };
    debug_assert_eq!(series.order(), n);
    Ok(series)
}

/// Read `P_n` out of a built series.
pub fn extract_polynomial(series: &EgfSeries, n: usize) -> Result<&MultiPoly, SeriesError> {
    series.coeff(n)
}

#[cfg(test)]
mod tests {
    use super::combinatorics::hermite_closed;
    use super::*;
    use crate::rat::{rat, rint, Rat};

    fn x() -> MultiPoly {
        MultiPoly::var(Var::X)
    }
    fn y() -> MultiPoly {
        MultiPoly::var(Var::Y)
    }
    fn build_ok(spec: FamilySpec) -> EgfSeries {
        build(&spec).expect("family builds")
    }
    fn subst_u1(p: &MultiPoly) -> MultiPoly {
        p.substitute(Var::U, &rint(1)).unwrap()
    }

    #[test]
    fn tangent_first_rows() {
        let s = build_ok(FamilySpec::new(Family::Tangent, 3));
        assert_eq!(s.coeff(0).unwrap().render(), "1");
        assert_eq!(s.coeff(1).unwrap().render(), "x - 1");
        assert_eq!(s.coeff(2).unwrap().render(), "x^2 - 2*x");
        assert_eq!(s.coeff(3).unwrap().render(), "x^3 - 3*x^2 + 2");
    }

    #[test]
    fn hermite_tangent_order_zero_is_hermite() {
        let ht = build_ok(FamilySpec::new(Family::HermiteTangent, 8).with_order(0));
        let h = build_ok(FamilySpec::new(Family::Hermite, 8));
        assert_eq!(ht, h);
    }

    #[test]
    fn hermite_tangent_second_polynomial() {
        let ht = build_ok(FamilySpec::new(Family::HermiteTangent, 4));
        let expect = x().pow(2).sub(&x().scale(&rint(2))).add(&y().scale(&rint(2)));
        assert_eq!(ht.coeff(2).unwrap(), &expect);
    }

    #[test]
    fn mod_deg_euler_first_polynomial() {
        let s = build_ok(FamilySpec::new(Family::ModDegEuler, 4));
        let u = MultiPoly::var(Var::U);
        let expect = u.mul(&x().sub(&MultiPoly::constant(rat(1, 2))));
        assert_eq!(s.coeff(1).unwrap(), &expect);
        assert_eq!(subst_u1(s.coeff(1).unwrap()).render(), "x - 1/2");
    }

    #[test]
    fn poly_bernoulli_constant_term() {
        for k in 1..=4 {
            let s = build_ok(FamilySpec::new(Family::PolyBernoulli, 6).with_polylog(k));
            assert_eq!(s.coeff(0).unwrap(), &MultiPoly::one(), "k={k}");
        }
    }

    #[test]
    fn poly_genocchi_k1_is_genocchi() {
        let pg = build_ok(FamilySpec::new(Family::PolyGenocchi, 10).with_polylog(1));
        let g = build_ok(FamilySpec::new(Family::Genocchi, 10));
        assert_eq!(pg, g);
    }

    #[test]
    fn poly_euler_k1_is_euler() {
        let pe = build_ok(FamilySpec::new(Family::PolyEuler, 10).with_polylog(1));
        let e = build_ok(FamilySpec::new(Family::Euler, 10));
        assert_eq!(pe, e);
    }

    #[test]
    fn hermite_poly_tangent_k1_is_hermite_tangent() {
        let hpt = build_ok(FamilySpec::new(Family::HermitePolyTangent, 10).with_polylog(1));
        let ht = build_ok(FamilySpec::new(Family::HermiteTangent, 10));
        assert_eq!(hpt, ht);
    }

    #[test]
    fn hermite_series_matches_closed_form() {
        let h = build_ok(FamilySpec::new(Family::Hermite, 12));
        for n in 0..=12 {
            assert_eq!(extract_polynomial(&h, n).unwrap(), &hermite_closed(n), "H_{n}");
        }
    }

    #[test]
    fn unit_substitution_recovers_classical_families() {
        let n = 10;
        let pairs = [
            (Family::ModDegBernoulli, Family::Bernoulli),
            (Family::ModDegEuler, Family::Euler),
            (Family::ModDegGenocchi, Family::Genocchi),
            (Family::ModDegHermite, Family::Hermite),
            (Family::ModDegHermiteTangent, Family::HermiteTangent),
            (Family::ModHermiteBernoulli, Family::HermiteBernoulli),
            (Family::ModHermiteEuler, Family::HermiteEuler),
        ];
        for (degenerate, classical) in pairs {
            let d = build_ok(FamilySpec::new(degenerate, n));
            let c = build_ok(FamilySpec::new(classical, n));
            for i in 0..=n {
                assert_eq!(
                    subst_u1(d.coeff(i).unwrap()),
                    c.coeff(i).unwrap().clone(),
                    "{} -> {} at n={i}",
                    degenerate.id(),
                    classical.id()
                );
            }
        }
    }

    #[test]
    fn lambda_zero_recovers_bernoulli_from_carlitz() {
        let n = 10;
        let c = build_ok(FamilySpec::new(Family::CarlitzDegBernoulli, n));
        let b = build_ok(FamilySpec::new(Family::Bernoulli, n));
        for i in 0..=n {
            assert_eq!(
                c.coeff(i).unwrap().substitute(Var::L, &rint(0)).unwrap(),
                b.coeff(i).unwrap().clone(),
                "n={i}"
            );
        }
    }

    #[test]
    fn y_zero_collapses_hermite_tangent_to_tangent() {
        let n = 10;
        for r in 1..=3 {
            let ht = build_ok(FamilySpec::new(Family::HermiteTangent, n).with_order(r));
            let t = build_ok(FamilySpec::new(Family::Tangent, n).with_order(r));
            for i in 0..=n {
                assert_eq!(
                    ht.coeff(i).unwrap().substitute(Var::Y, &rint(0)).unwrap(),
                    t.coeff(i).unwrap().clone(),
                    "r={r} n={i}"
                );
            }
        }
    }

    #[test]
    fn mod_deg_bernoulli_constant_is_u_inverse() {
        let s = build_ok(FamilySpec::new(Family::ModDegBernoulli, 3));
        assert_eq!(s.coeff(0).unwrap().render(), "u^-1");
    }

    #[test]
    fn spec_validation() {
        assert!(FamilySpec::new(Family::Hermite, 4).with_order(2).validate().is_err());
        assert!(FamilySpec::new(Family::Tangent, 4).with_order(0).validate().is_ok());
        assert!(FamilySpec::new(Family::Tangent, 4).with_polylog(2).validate().is_err());
        assert!(FamilySpec::new(Family::PolyGenocchi, 4).with_polylog(0).validate().is_err());
        let mut no_k = FamilySpec::new(Family::PolyGenocchi, 4);
        no_k.polylog_k = None;
        assert!(no_k.validate().is_err());
        assert_eq!(Family::parse("mod-deg-hermite-tangent"), Some(Family::ModDegHermiteTangent));
        assert_eq!(Family::parse("nosuch"), None);
    }

    #[test]
    fn genocchi_numbers_table() {
        let g = build_ok(FamilySpec::new(Family::Genocchi, 8));
        let expect = [0i64, 1, -1, 0, 1, 0, -3, 0, 17];
        for (n, v) in expect.iter().enumerate() {
            assert_eq!(
                g.coeff(n).unwrap().substitute(Var::X, &rint(0)).unwrap(),
                MultiPoly::constant(rint(*v)),
                "G_{n}"
            );
        }
    }

    #[test]
    fn euler_polynomial_table() {
        let e = build_ok(FamilySpec::new(Family::Euler, 3));
        assert_eq!(e.coeff(0).unwrap().render(), "1");
        assert_eq!(e.coeff(1).unwrap().render(), "x - 1/2");
        assert_eq!(e.coeff(2).unwrap().render(), "x^2 - x");
        assert_eq!(e.coeff(3).unwrap().render(), "x^3 - 3/2*x^2 + 1/4");
    }

    #[test]
    fn poly_bernoulli_numbers_match_stirling_closed_form() {
        // independent route for the whole polylog pipeline:
        // B_n^(k)(0) = sum_{m=0}^{n} (-1)^(m+n) m! S2(n,m) / (m+1)^k
        use super::combinatorics::stirling2;
        use crate::rat::{factorial, pow_rat};
        let n_max = 12;
        for k in 1..=3u32 {
            let series = build_ok(FamilySpec::new(Family::PolyBernoulli, n_max).with_polylog(k));
            for n in 0..=n_max {
                let mut closed = Rat::from_integer(0.into());
                for m in 0..=n {
                    let sign = if (m + n) % 2 == 0 { rint(1) } else { rint(-1) };
                    closed += sign
                        * Rat::from_integer(factorial(m))
                        * stirling2(n, m)
                        * pow_rat(&rint(m as i64 + 1), -(k as i64));
                }
                let from_series = series
                    .coeff(n)
                    .unwrap()
                    .substitute(Var::X, &rint(0))
                    .unwrap();
                assert_eq!(from_series, MultiPoly::constant(closed), "k={k} n={n}");
            }
        }
    }

    #[test]
    fn carlitz_coefficients_expand_over_step_falling_factorials() {
        // the x-dependence of the Carlitz family factors through (x|λ)_l
        use super::combinatorics::{falling_factorial, FallingStep};
        use crate::rat::binomial;
        let n_max = 8;
        let with_x = build_ok(FamilySpec::new(Family::CarlitzDegBernoulli, n_max));
        let numbers = build_ok(FamilySpec::new(Family::CarlitzDegBernoulli, n_max));
        for n in 0..=n_max {
            let mut expansion = MultiPoly::zero();
            for l in 0..=n {
                let number = numbers
                    .coeff(n - l)
                    .unwrap()
                    .substitute(Var::X, &rint(0))
                    .unwrap();
                let term = number
                    .mul(&falling_factorial(l, FallingStep::Lambda))
                    .scale(&binomial(n, l as i64));
                expansion = expansion.add(&term);
            }
            assert_eq!(with_x.coeff(n).unwrap(), &expansion, "n={n}");
        }
    }

    #[test]
    fn extract_beyond_truncation_errors() {
        let s = build_ok(FamilySpec::new(Family::Tangent, 4));
        assert!(extract_polynomial(&s, 4).is_ok());
        assert!(matches!(
            extract_polynomial(&s, 5),
            Err(SeriesError::IndexBeyondTruncation { index: 5, order: 4 })
        ));
    }

    #[test]
    fn every_family_builds_at_default_spec() {
        for family in Family::ALL {
            let s = build_ok(FamilySpec::new(family, 6));
            assert_eq!(s.order(), 6, "{}", family.id());
        }
    }

    #[test]
    fn stirling2_generating_function_consistency() {
        use super::combinatorics::stirling2;
        use crate::rat::factorial;
        let n = 12;
        for m in 0..=n {
            // (e^t - 1)^m / m!
            let em1 = gf::exp_linear(n, &MultiPoly::one())
                .sub(&EgfSeries::one(n))
                .unwrap();
            let s = em1.pow(m as u32).scale_rat(&Rat::from_integer(factorial(m)).recip());
            for i in 0..=n {
                assert_eq!(
                    s.coeff(i).unwrap().as_constant().unwrap(),
                    stirling2(i, m),
                    "S2({i},{m})"
                );
            }
        }
    }
}
