//! Run the complete identity catalog and print the verdict table.
//!
//! Statements are checked exactly as printed in their source alongside
//! named variant readings; a failed-as-printed verdict carries the first
//! mismatching coefficient (smallest n, then graded-lex smallest monomial,
//! with both exact values).
//!
//! Run with: `cargo run --example verify_catalog`

use egflab::identity::{run_all, Registry};

fn main() {
    let order = 10;
    let registry = Registry::builtin();
    let report = run_all(&registry, order);

    print!("{}", report.to_text());

    println!("\nfailed-as-printed details:");
    for (case, grid, form) in report.failed_entries() {
        let m = form.mismatch.as_ref().unwrap();
        let grid = if grid.grid.is_empty() { "-" } else { &grid.grid };
        println!(
            "  {} [{}] {}: n={}, monomial {}, lhs {} vs rhs {}",
            case.id, grid, form.form, m.n, m.monomial, m.lhs, m.rhs
        );
    }

    std::process::exit(report.exit_code());
}
