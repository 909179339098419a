//! Suite-level invariants of the identity checker: soundness of both
//! verdicts against independent point evaluation, determinism of the
//! report bytes, and monotonicity of `verified` in the truncation order.

use egflab::identity::{run_all, run_case, Registry, Status};
use egflab::rat::{rat, rint, Rat};

/// Exact evaluation points (u nonzero throughout, for Laurent terms).
fn sample_points() -> [(Rat, Rat, Rat, Rat); 3] {
    [
        (rat(2, 3), rat(-1, 2), rat(3, 5), rat(1, 7)),
        (rint(2), rint(-3), rint(1), rint(2)),
        (rat(-7, 4), rat(5, 6), rat(-4, 3), rat(-2, 9)),
    ]
}

#[test]
fn verified_and_failed_verdicts_are_sound_at_sample_points() {
    let order = 8;
    let registry = Registry::builtin();
    for case in registry.cases() {
        for gp in &case.grid {
            for form in case.forms() {
                let comparisons = (form.eval)(gp, order).expect("evaluator runs");
                let mut any_mismatch = false;
                for comp in &comparisons {
                    for n in 0..comp.lhs.len().min(comp.rhs.len()) {
                        let (lhs, rhs) = (&comp.lhs[n], &comp.rhs[n]);
                        if lhs == rhs {
                            // verified coefficients agree at every sample point
                            for (x, y, u, l) in sample_points() {
                                assert_eq!(
                                    lhs.eval(&x, &y, &u, &l).unwrap(),
                                    rhs.eval(&x, &y, &u, &l).unwrap(),
                                    "{}/{} n={n}: equal polynomials, unequal values",
                                    case.id,
                                    form.id
                                );
                            }
                        } else {
                            any_mismatch = true;
                            let separated = sample_points().iter().any(|(x, y, u, l)| {
                                lhs.eval(x, y, u, l).unwrap() != rhs.eval(x, y, u, l).unwrap()
                            });
                            assert!(
                                separated,
                                "{}/{} n={n}: unequal polynomials, no separating point",
                                case.id,
                                form.id
                            );
                        }
                    }
                }
                let outcome = run_case_single(case, gp, form.id, order);
                match outcome {
                    Status::Verified => assert!(!any_mismatch, "{}/{}", case.id, form.id),
                    Status::FailedAsPrinted => assert!(any_mismatch, "{}/{}", case.id, form.id),
                    Status::Error => panic!("{}/{} errored", case.id, form.id),
                }
            }
        }
    }
}

/// Status of one form at one grid point, through the public checker.
fn run_case_single(
    case: &egflab::identity::IdentityCase,
    gp: &egflab::identity::GridPoint,
    form_id: &str,
    order: usize,
) -> Status {
    let outcome = run_case(case, order);
    let label = gp.label();
    for grid in &outcome.results {
        if grid.grid == label {
            for form in &grid.forms {
                if form.form == form_id {
                    return form.status;
                }
            }
        }
    }
    panic!("outcome missing for {}/{form_id} at `{label}`", case.id);
}

#[test]
fn report_bytes_are_deterministic() {
    let registry = Registry::builtin();
    let a = run_all(&registry, 6).to_json();
    let b = run_all(&registry, 6).to_json();
    assert_eq!(a, b);
    let ta = run_all(&registry, 6).to_text();
    let tb = run_all(&registry, 6).to_text();
    assert_eq!(ta, tb);
}

#[test]
fn verified_is_monotone_in_truncation_order() {
    let registry = Registry::builtin();
    let high = run_all(&registry, 8);
    let low = run_all(&registry, 5);
    for (case_high, case_low) in high.cases.iter().zip(&low.cases) {
        assert_eq!(case_high.id, case_low.id);
        for (grid_high, grid_low) in case_high.results.iter().zip(&case_low.results) {
            for (form_high, form_low) in grid_high.forms.iter().zip(&grid_low.forms) {
                assert_eq!(form_high.form, form_low.form);
                if form_high.status == "verified" {
                    assert_eq!(
                        form_low.status, "verified",
                        "{}/{}/{} verified at 8 but not at 5",
                        case_high.id, grid_high.grid, form_high.form
                    );
                }
            }
        }
    }
}

#[test]
fn run_all_at_order_one_covers_indices_zero_and_one() {
    let registry = Registry::builtin();
    let report = run_all(&registry, 1);
    assert_eq!(report.summary.errors, 0);
    for case in &report.cases {
        for grid in &case.results {
            for form in &grid.forms {
                if let Some(m) = &form.mismatch {
                    assert!(m.n <= 1, "{}: mismatch index {} beyond order 1", case.id, m.n);
                }
            }
        }
    }
}
