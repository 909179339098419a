//! The series toolkit underneath the families: EGF products, unit
//! division (forward substitution) and valuation-shift division.
//!
//! Run with: `cargo run --example series_division`

use egflab::families::gf;
use egflab::poly::MultiPoly;
use egflab::series::EgfSeries;
use egflab::rat::rint;

fn main() {
    let order = 8;

    // tangent numbers from 2/(e^{2t} + 1): divide by a series whose
    // constant term is a unit
    let den = gf::exp_linear(order, &MultiPoly::constant(rint(2)))
        .add(&EgfSeries::one(order))
        .unwrap();
    let tangent = EgfSeries::constant(order, MultiPoly::constant(rint(2)))
        .div_unit(&den)
        .unwrap();
    println!("tangent numbers:   {:?}", scalar_rows(&tangent));

    // Bernoulli numbers from t/(e^t - 1): both sides have valuation 1, so
    // the division cancels t and returns order N-1
    let num = EgfSeries::linear_t(order, MultiPoly::one());
    let em1 = gf::exp_linear(order, &MultiPoly::one())
        .sub(&EgfSeries::one(order))
        .unwrap();
    let bernoulli = num.div_shift(&em1).unwrap();
    println!("Bernoulli numbers: {:?}", scalar_rows(&bernoulli));
    println!("(orders: divisor {} -> quotient {})", order, bernoulli.order());

    // division round trip: q = f/g, then q*g = f exactly
    let f = gf::exp_linear(order, &MultiPoly::var(egflab::Var::X));
    let q = f.div_unit(&den).unwrap();
    assert_eq!(q.mul(&den).unwrap(), f);
    println!("round trip (e^(xt) / (e^(2t)+1)) * (e^(2t)+1) = e^(xt): exact");
}

fn scalar_rows(series: &EgfSeries) -> Vec<String> {
    series.coeffs().iter().map(MultiPoly::render).collect()
}
