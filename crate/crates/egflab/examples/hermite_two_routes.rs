//! Cross-check the two independent routes to the two-variable Hermite
//! polynomials: the series exponential of `xt + yt^2` versus the closed
//! double-sum formula.
//!
//! Run with: `cargo run --example hermite_two_routes`

use egflab::families::combinatorics::hermite_closed;
use egflab::{build, Family, FamilySpec};

fn main() {
    let order = 12;
    let series = build(&FamilySpec::new(Family::Hermite, order)).unwrap();
    for n in 0..=order {
        let from_series = series.coeff(n).unwrap();
        let from_closed_form = hermite_closed(n);
        assert_eq!(from_series, &from_closed_form, "H_{n} routes disagree");
        println!("H_{n}(x,y) = {from_series}");
    }
    println!("\nseries exponential and closed form agree up to n = {order}");
}
