//! Build coefficient tables for a few families and print them.
//!
//! Run with: `cargo run --example coefficient_tables`

use egflab::{build, Family, FamilySpec};

fn print_table(spec: &FamilySpec) {
    let series = build(spec).expect("family builds");
    let k = spec.polylog_k.map(|k| format!(", k={k}")).unwrap_or_default();
    println!("{} (r={}{k})", spec.family.id(), spec.order_r);
    for (n, p) in series.coeffs().iter().enumerate() {
        println!("  P_{n} = {p}");
    }
    println!();
}

fn main() {
    print_table(&FamilySpec::new(Family::Tangent, 5));
    print_table(&FamilySpec::new(Family::Tangent, 5).with_order(2));
    print_table(&FamilySpec::new(Family::Genocchi, 5));
    print_table(&FamilySpec::new(Family::HermiteTangent, 5));
    // Carlitz-style degenerate coefficients are polynomial in λ
    print_table(&FamilySpec::new(Family::CarlitzDegBernoulli, 4));
    // modified degenerate coefficients are Laurent in u
    print_table(&FamilySpec::new(Family::ModDegBernoulli, 4));
}
