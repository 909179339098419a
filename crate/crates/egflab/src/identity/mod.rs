//! Registry and exact checker for the identity catalog.
//!
//! An [`IdentityCase`] owns a finite parameter grid and one or more
//! *forms*: the statement as printed, plus named variant readings where
//! the printed statement is ill-formed or provably off by a factor. The
//! checker evaluates every form at every grid point, compares the two
//! sides' coefficient polynomials with exact term-set equality for all
//! `n` up to the truncation order, and reports either `Verified` or the
//! first mismatch (smallest `n`, then graded-lex smallest monomial, with
//! both coefficient values).
//!
//! The checker never substitutes a corrected reading for the printed one;
//! both verdicts appear side by side in the report.

pub mod catalog;
pub mod report;

use crate::families::FamilyError;
use crate::poly::MultiPoly;
use crate::rat::Rat;

pub use report::{Report, ReportError};

/// One coordinate of a grid point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GridValue {
    Int(i64),
    Rat(Rat),
}

impl std::fmt::Display for GridValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GridValue::Int(v) => write!(f, "{v}"),
            GridValue::Rat(v) => write!(f, "{v}"),
        }
    }
}

/// A single point of a case's parameter grid, e.g. `r1=2, r2=3`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GridPoint {
    entries: Vec<(&'static str, GridValue)>,
}

impl GridPoint {
    pub fn empty() -> GridPoint {
        GridPoint::default()
    }

    pub fn with_int(mut self, name: &'static str, value: i64) -> GridPoint {
        self.entries.push((name, GridValue::Int(value)));
        self
    }

    pub fn with_rat(mut self, name: &'static str, value: Rat) -> GridPoint {
        self.entries.push((name, GridValue::Rat(value)));
        self
    }

    /// Integer parameter by name; the catalog only asks for names it set.
    pub fn int(&self, name: &str) -> i64 {
        match self.entries.iter().find(|(n, _)| *n == name) {
            Some((_, GridValue::Int(v))) => *v,
            _ => panic!("grid point has no integer parameter `{name}`"),
        }
    }

    pub fn rat(&self, name: &str) -> Rat {
        match self.entries.iter().find(|(n, _)| *n == name) {
            Some((_, GridValue::Rat(v))) => v.clone(),
            _ => panic!("grid point has no rational parameter `{name}`"),
        }
    }

    /// Canonical label, `""` for the empty grid point.
    pub fn label(&self) -> String {
        self.entries
            .iter()
            .map(|(n, v)| format!("{n}={v}"))
            .collect::<Vec<_>>()
            .join(", ")
    }
}

/// One labeled pair of coefficient sequences to compare index by index.
/// Multi-clause statements (e.g. a pair of reductions stated together)
/// produce one comparison per clause.
#[derive(Debug, Clone)]
pub struct Comparison {
    pub part: &'static str,
    pub lhs: Vec<MultiPoly>,
    pub rhs: Vec<MultiPoly>,
}

impl Comparison {
    pub fn whole(lhs: Vec<MultiPoly>, rhs: Vec<MultiPoly>) -> Comparison {
        Comparison { part: "", lhs, rhs }
    }

    pub fn part(part: &'static str, lhs: Vec<MultiPoly>, rhs: Vec<MultiPoly>) -> Comparison {
        Comparison { part, lhs, rhs }
    }
}

/// Evaluator: grid point + truncation order -> comparisons.
pub type EvalFn = fn(&GridPoint, usize) -> Result<Vec<Comparison>, FamilyError>;

/// One reading of a statement: the printed form or a named variant.
#[derive(Debug, Clone)]
pub struct Form {
    pub id: &'static str,
    pub formula: &'static str,
    pub eval: EvalFn,
}

/// A check that must come out `Verified` for the suite to pass,
/// addressed by form id and, for multi-clause forms, clause label.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MandatoryCheck {
    pub form: &'static str,
    pub part: &'static str,
}

/// A registered identity: a printed reading, optional variants, a grid.
pub struct IdentityCase {
    pub id: &'static str,
    /// Stable provenance key; unique across the registry.
    pub anchor: &'static str,
    pub description: &'static str,
    pub note: Option<&'static str>,
    pub grid: Vec<GridPoint>,
    pub printed: Form,
    pub variants: Vec<Form>,
    pub mandatory: &'static [MandatoryCheck],
}

impl IdentityCase {
    pub fn forms(&self) -> impl Iterator<Item = &Form> {
        std::iter::once(&self.printed).chain(self.variants.iter())
    }

    pub fn form(&self, id: &str) -> Option<&Form> {
        self.forms().find(|f| f.id == id)
    }
}

/// Registration-time validation failures.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RegistryError {
    #[error("case `{0}` has an empty parameter grid")]
    EmptyGrid(String),
    #[error("duplicate case id `{0}`")]
    DuplicateId(String),
    #[error("duplicate anchor `{0}`")]
    DuplicateAnchor(String),
}

/// The ordered collection of identity cases.
#[derive(Default)]
pub struct Registry {
    cases: Vec<IdentityCase>,
}

impl Registry {
    pub fn new() -> Registry {
        Registry::default()
    }

    /// The full built-in catalog.
    pub fn builtin() -> Registry {
        let mut reg = Registry::new();
        for case in catalog::builtin_cases() {
            reg.add(case).expect("built-in catalog is well-formed");
        }
        reg
    }

    pub fn add(&mut self, case: IdentityCase) -> Result<(), RegistryError> {
        if case.grid.is_empty() {
            return Err(RegistryError::EmptyGrid(case.id.to_string()));
        }
        if self.cases.iter().any(|c| c.id == case.id) {
            return Err(RegistryError::DuplicateId(case.id.to_string()));
        }
        if self.cases.iter().any(|c| c.anchor == case.anchor) {
            return Err(RegistryError::DuplicateAnchor(case.anchor.to_string()));
        }
        self.cases.push(case);
        Ok(())
    }

    pub fn cases(&self) -> &[IdentityCase] {
        &self.cases
    }

    pub fn find(&self, id: &str) -> Option<&IdentityCase> {
        self.cases.iter().find(|c| c.id == id)
    }

    pub fn len(&self) -> usize {
        self.cases.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cases.is_empty()
    }
}

/// Verdict for one form at one grid point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Verified,
    FailedAsPrinted,
    Error,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Verified => "verified",
            Status::FailedAsPrinted => "failed-as-printed",
            Status::Error => "error",
        }
    }
}

/// First mismatching coefficient: smallest `n`, then graded-lex smallest
/// monomial, with both exact values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub part: String,
    pub n: usize,
    pub monomial: String,
    pub lhs: String,
    pub rhs: String,
}

/// Verdict for one clause of a form.
#[derive(Debug, Clone)]
pub struct PartOutcome {
    pub part: String,
    pub status: Status,
}

/// Verdict for one form at one grid point.
#[derive(Debug, Clone)]
pub struct FormOutcome {
    pub form: String,
    pub formula: String,
    pub status: Status,
    pub parts: Vec<PartOutcome>,
    pub mismatch: Option<Mismatch>,
    pub error: Option<String>,
}

/// All verdicts for one grid point.
#[derive(Debug, Clone)]
pub struct GridOutcome {
    pub grid: String,
    pub forms: Vec<FormOutcome>,
}

/// All verdicts for one case.
#[derive(Debug, Clone)]
pub struct CaseOutcome {
    pub id: String,
    pub anchor: String,
    pub description: String,
    pub note: Option<String>,
    pub results: Vec<GridOutcome>,
}

impl CaseOutcome {
    /// Status of a (form, part) pair across the whole grid: `Verified`
    /// only if it verified at every grid point.
    pub fn status_of(&self, form: &str, part: &str) -> Status {
        let mut status = Status::Verified;
        for grid in &self.results {
            for fo in grid.forms.iter().filter(|f| f.form == form) {
                let s = if part.is_empty() {
                    fo.status
                } else {
                    fo.parts
                        .iter()
                        .find(|p| p.part == part)
                        .map(|p| p.status)
                        .unwrap_or(Status::Error)
                };
                match s {
                    Status::Verified => {}
                    Status::FailedAsPrinted if status == Status::Verified => {
                        status = Status::FailedAsPrinted
                    }
                    Status::FailedAsPrinted => {}
                    Status::Error => return Status::Error,
                }
            }
        }
        status
    }
}

/// Compare one form's comparisons; clause order, then ascending `n`.
fn check_comparisons(comparisons: &[Comparison]) -> (Status, Vec<PartOutcome>, Option<Mismatch>) {
    let mut parts = Vec::with_capacity(comparisons.len());
    let mut first_mismatch: Option<Mismatch> = None;
    for comp in comparisons {
        let upto = comp.lhs.len().min(comp.rhs.len());
        let mut part_status = Status::Verified;
        for n in 0..upto {
            let (lhs_n, rhs_n) = (&comp.lhs[n], &comp.rhs[n]);
            if lhs_n == rhs_n {
                continue;
            }
            // Re-derive the mismatch through subtraction, independently of
            // the term-set comparison that found it.
            let diff = lhs_n.sub(rhs_n);
            let (monomial, delta) = diff
                .min_term()
                .expect("unequal polynomials have a nonzero difference");
            let lhs_c = lhs_n.coeff(monomial);
            let rhs_c = rhs_n.coeff(monomial);
            assert_eq!(&lhs_c - &rhs_c, delta, "mismatch cross-check");
            assert_ne!(lhs_c, rhs_c, "mismatch cross-check");
            part_status = Status::FailedAsPrinted;
            if first_mismatch.is_none() {
                first_mismatch = Some(Mismatch {
                    part: comp.part.to_string(),
                    n,
                    monomial: monomial.render(),
                    lhs: lhs_c.to_string(),
                    rhs: rhs_c.to_string(),
                });
            }
            break;
        }
        parts.push(PartOutcome { part: comp.part.to_string(), status: part_status });
    }
    let status = if parts.iter().any(|p| p.status == Status::FailedAsPrinted) {
        Status::FailedAsPrinted
    } else {
        Status::Verified
    };
    (status, parts, first_mismatch)
}

/// Evaluate every form of `case` at every grid point at truncation `order`.
pub fn run_case(case: &IdentityCase, order: usize) -> CaseOutcome {
    let mut results = Vec::with_capacity(case.grid.len());
    for gp in &case.grid {
        let mut forms = Vec::new();
        for form in case.forms() {
            let outcome = match (form.eval)(gp, order) {
                Ok(comparisons) => {
                    let (status, parts, mismatch) = check_comparisons(&comparisons);
                    FormOutcome {
                        form: form.id.to_string(),
                        formula: form.formula.to_string(),
                        status,
                        parts,
                        mismatch,
                        error: None,
                    }
                }
                Err(e) => FormOutcome {
                    form: form.id.to_string(),
                    formula: form.formula.to_string(),
                    status: Status::Error,
                    parts: Vec::new(),
                    mismatch: None,
                    error: Some(e.to_string()),
                },
            };
            forms.push(outcome);
        }
        results.push(GridOutcome { grid: gp.label(), forms });
    }
    CaseOutcome {
        id: case.id.to_string(),
        anchor: case.anchor.to_string(),
        description: case.description.to_string(),
        note: case.note.map(str::to_string),
        results,
    }
}

/// Run the whole registry in registration order and assemble the report.
pub fn run_all(registry: &Registry, order: usize) -> Report {
    let outcomes: Vec<CaseOutcome> =
        registry.cases().iter().map(|case| run_case(case, order)).collect();
    Report::assemble(registry, order, outcomes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Var;
    use crate::rat::rint;

    fn x_pows(gp: &GridPoint, order: usize) -> Result<Vec<Comparison>, FamilyError> {
        let _ = gp;
        let x = MultiPoly::var(Var::X);
        let lhs: Vec<MultiPoly> = (0..=order).map(|n| x.pow(n as u32)).collect();
        let rhs = lhs.clone();
        Ok(vec![Comparison::whole(lhs, rhs)])
    }

    fn x_pows_broken(gp: &GridPoint, order: usize) -> Result<Vec<Comparison>, FamilyError> {
        let _ = gp;
        let x = MultiPoly::var(Var::X);
        let lhs: Vec<MultiPoly> = (0..=order).map(|n| x.pow(n as u32)).collect();
        let mut rhs = lhs.clone();
        if order >= 2 {
            rhs[2] = rhs[2].add(&MultiPoly::var(Var::Y).scale(&rint(3)));
        }
        Ok(vec![Comparison::whole(lhs, rhs)])
    }

    fn fixture_case(id: &'static str, eval: EvalFn, grid: Vec<GridPoint>) -> IdentityCase {
        IdentityCase {
            id,
            anchor: id,
            description: "fixture",
            note: None,
            grid,
            printed: Form { id: "printed", formula: "fixture", eval },
            variants: vec![],
            mandatory: &[],
        }
    }

    #[test]
    fn empty_grid_rejected_at_registration() {
        let mut reg = Registry::new();
        let err = reg.add(fixture_case("empty", x_pows, vec![])).unwrap_err();
        assert_eq!(err, RegistryError::EmptyGrid("empty".to_string()));
    }

    #[test]
    fn duplicate_ids_rejected() {
        let mut reg = Registry::new();
        reg.add(fixture_case("a", x_pows, vec![GridPoint::empty()])).unwrap();
        let mut dup = fixture_case("a", x_pows, vec![GridPoint::empty()]);
        dup.anchor = "other";
        assert_eq!(reg.add(dup).unwrap_err(), RegistryError::DuplicateId("a".to_string()));
    }

    #[test]
    fn verified_and_first_mismatch() {
        let ok = fixture_case("ok", x_pows, vec![GridPoint::empty()]);
        let outcome = run_case(&ok, 5);
        assert_eq!(outcome.status_of("printed", ""), Status::Verified);

        let bad = fixture_case("bad", x_pows_broken, vec![GridPoint::empty()]);
        let outcome = run_case(&bad, 5);
        assert_eq!(outcome.status_of("printed", ""), Status::FailedAsPrinted);
        let mm = outcome.results[0].forms[0].mismatch.clone().unwrap();
        assert_eq!(mm.n, 2);
        assert_eq!(mm.monomial, "y");
        assert_eq!(mm.lhs, "0");
        assert_eq!(mm.rhs, "3");
    }

    #[test]
    fn cases_and_values_are_shareable_across_threads() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<MultiPoly>();
        assert_send_sync::<crate::series::EgfSeries>();
        assert_send_sync::<IdentityCase>();
        assert_send_sync::<Registry>();
        assert_send_sync::<Report>();
    }

    #[test]
    fn grid_labels() {
        let gp = GridPoint::empty()
            .with_int("r1", 2)
            .with_int("r2", 3)
            .with_rat("v", crate::rat::rat(-1, 2));
        assert_eq!(gp.label(), "r1=2, r2=3, v=-1/2");
        assert_eq!(gp.int("r1"), 2);
        assert_eq!(gp.rat("v"), crate::rat::rat(-1, 2));
        assert_eq!(GridPoint::empty().label(), "");
    }
}
