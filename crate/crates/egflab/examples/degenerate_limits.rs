//! The degenerate families and their classical limits, realized as exact
//! substitutions: `u := 1` for the modified degenerate families (where `u`
//! stands for `ln(1+λ)/λ`) and `λ := 0` for the Carlitz-style family.
//!
//! Run with: `cargo run --example degenerate_limits`

use egflab::rat::rint;
use egflab::{build, Family, FamilySpec, Var};

fn main() {
    let order = 6;

    let pairs = [
        (Family::ModDegBernoulli, Family::Bernoulli),
        (Family::ModDegEuler, Family::Euler),
        (Family::ModDegGenocchi, Family::Genocchi),
        (Family::ModDegHermite, Family::Hermite),
        (Family::ModDegHermiteTangent, Family::HermiteTangent),
    ];
    for (degenerate, classical) in pairs {
        let d = build(&FamilySpec::new(degenerate, order)).unwrap();
        let c = build(&FamilySpec::new(classical, order)).unwrap();
        for n in 0..=order {
            let reduced = d.coeff(n).unwrap().substitute(Var::U, &rint(1)).unwrap();
            assert_eq!(&reduced, c.coeff(n).unwrap());
        }
        println!("{:<28} --u:=1--> {}", degenerate.id(), classical.id());
    }

    let carlitz = build(&FamilySpec::new(Family::CarlitzDegBernoulli, order)).unwrap();
    let bernoulli = build(&FamilySpec::new(Family::Bernoulli, order)).unwrap();
    for n in 0..=order {
        let reduced = carlitz.coeff(n).unwrap().substitute(Var::L, &rint(0)).unwrap();
        assert_eq!(&reduced, bernoulli.coeff(n).unwrap());
    }
    println!("{:<28} --λ:=0--> {}", Family::CarlitzDegBernoulli.id(), Family::Bernoulli.id());

    println!("\nsample row before/after the u := 1 substitution:");
    let d = build(&FamilySpec::new(Family::ModDegGenocchi, 3)).unwrap();
    let p3 = d.coeff(3).unwrap();
    println!("  modified degenerate G_3: {p3}");
    println!("  at u = 1:                {}", p3.substitute(Var::U, &rint(1)).unwrap());
}
