//! The polylogarithm-based families: compose a truncated `Li_k` with
//! `1 - e^{-t}`, divide per the defining recipe, and reduce back to the
//! classical families at k = 1 (where `Li_1(1-e^{-t}) = t` exactly).
//!
//! Run with: `cargo run --example polylog_families`

use egflab::families::gf;
use egflab::poly::MultiPoly;
use egflab::{build, Family, FamilySpec};

fn main() {
    let order = 8;

    // the composed polylog itself: at k = 1 it collapses to t
    let li1 = gf::polylog_series(order, 1).unwrap();
    println!("Li_1(1 - e^-t) coefficients: {:?}", rows(&li1));
    let li2 = gf::polylog_series(order, 2).unwrap();
    println!("Li_2(1 - e^-t) coefficients: {:?}", rows(&li2));

    for k in 1..=3 {
        let pg = build(&FamilySpec::new(Family::PolyGenocchi, order).with_polylog(k)).unwrap();
        println!("\npoly-Genocchi numbers, k={k}:");
        for (n, p) in pg.coeffs().iter().enumerate() {
            let at_zero = p.substitute(egflab::Var::X, &egflab::rat::rint(0)).unwrap();
            print!(" {at_zero}");
            let _ = n;
        }
        println!();
    }

    // k = 1 reductions are exact equalities of whole series
    let reductions = [
        (Family::PolyGenocchi, Family::Genocchi),
        (Family::PolyEuler, Family::Euler),
        (Family::HermitePolyTangent, Family::HermiteTangent),
    ];
    println!();
    for (poly, classical) in reductions {
        let p = build(&FamilySpec::new(poly, order).with_polylog(1)).unwrap();
        let c = build(&FamilySpec::new(classical, order)).unwrap();
        assert_eq!(p, c);
        println!("{:<22} at k=1 equals {}", poly.id(), classical.id());
    }
}

fn rows(series: &egflab::EgfSeries) -> Vec<String> {
    series.coeffs().iter().map(MultiPoly::render).collect()
}
