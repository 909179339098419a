//! Evaluate family polynomials at exact rational points.
//!
//! Run with: `cargo run --example exact_evaluation`

use egflab::rat::{rat, rint};
use egflab::{build, Family, FamilySpec};

fn main() {
    // T_1(x) = x - 1, so T_1(3) = 2
    let tangent = build(&FamilySpec::new(Family::Tangent, 4)).unwrap();
    let t1 = tangent.coeff(1).unwrap();
    println!("T_1(x) = {t1}");
    println!("T_1(3) = {}", t1.eval(&rint(3), &rint(0), &rint(1), &rint(0)).unwrap());

    // Bernoulli polynomials vanish at 1/2 for odd n
    let bernoulli = build(&FamilySpec::new(Family::Bernoulli, 7)).unwrap();
    for n in [1usize, 3, 5, 7] {
        let v = bernoulli
            .coeff(n)
            .unwrap()
            .eval(&rat(1, 2), &rint(0), &rint(1), &rint(0))
            .unwrap();
        println!("B_{n}(1/2) = {v}");
    }

    // modified degenerate constant terms carry u^-1, so u must be nonzero
    let moddeg = build(&FamilySpec::new(Family::ModDegBernoulli, 3)).unwrap();
    let p0 = moddeg.coeff(0).unwrap();
    println!("modified degenerate Bernoulli P_0 = {p0}");
    println!(
        "P_0 at u=2/3: {}",
        p0.eval(&rint(0), &rint(0), &rat(2, 3), &rint(0)).unwrap()
    );
    println!(
        "P_0 at u=0:   {:?}",
        p0.eval(&rint(0), &rint(0), &rint(0), &rint(0)).unwrap_err()
    );
}
