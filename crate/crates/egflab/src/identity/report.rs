//! Structured verification reports: JSON (machine-readable, byte-stable),
//! plain-text table, and CSV.
//!
//! Serialization order follows registration order everywhere, and no
//! timestamps or environment data are embedded, so two runs at the same
//! truncation order produce byte-identical output.

use serde::{Deserialize, Serialize};

use super::{CaseOutcome, Registry, Status};

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct MismatchReport {
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub part: String,
    pub n: usize,
    pub monomial: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct PartReport {
    pub part: String,
    pub status: String,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct FormReport {
    pub form: String,
    pub formula: String,
    pub status: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub parts: Vec<PartReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mismatch: Option<MismatchReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct GridReport {
    pub grid: String,
    pub forms: Vec<FormReport>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct CaseReport {
    pub id: String,
    pub anchor: String,
    pub description: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    pub results: Vec<GridReport>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct Summary {
    /// Total (case, grid point, form) verdicts.
    pub checks: usize,
    pub verified: usize,
    pub failed_as_printed: usize,
    pub errors: usize,
    /// Mandatory checks, as `case/form` or `case/form/part`.
    pub mandatory_total: usize,
    pub mandatory_failed: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct Report {
    pub order: usize,
    pub case_count: usize,
    pub summary: Summary,
    pub cases: Vec<CaseReport>,
}

/// Failures reading a serialized report back.
#[derive(Debug, thiserror::Error)]
#[error("malformed report: {0}")]
pub struct ReportError(#[from] serde_json::Error);

impl Report {
    pub(crate) fn assemble(registry: &Registry, order: usize, outcomes: Vec<CaseOutcome>) -> Report {
        let mut checks = 0;
        let mut verified = 0;
        let mut failed = 0;
        let mut errors = 0;
        let mut mandatory_total = 0;
        let mut mandatory_failed = Vec::new();

        for outcome in &outcomes {
            for grid in &outcome.results {
                for form in &grid.forms {
                    checks += 1;
                    match form.status {
                        Status::Verified => verified += 1,
                        Status::FailedAsPrinted => failed += 1,
                        Status::Error => errors += 1,
                    }
                }
            }
            if let Some(case) = registry.find(&outcome.id) {
                for check in case.mandatory {
                    mandatory_total += 1;
                    if outcome.status_of(check.form, check.part) != Status::Verified {
                        let mut key = format!("{}/{}", outcome.id, check.form);
                        if !check.part.is_empty() {
                            key.push('/');
                            key.push_str(check.part);
                        }
                        mandatory_failed.push(key);
                    }
                }
            }
        }

        let cases: Vec<CaseReport> = outcomes
            .into_iter()
            .map(|outcome| CaseReport {
                id: outcome.id,
                anchor: outcome.anchor,
                description: outcome.description,
                note: outcome.note,
                results: outcome
                    .results
                    .into_iter()
                    .map(|grid| GridReport {
                        grid: grid.grid,
                        forms: grid
                            .forms
                            .into_iter()
                            .map(|fo| FormReport {
                                form: fo.form,
                                formula: fo.formula,
                                status: fo.status.as_str().to_string(),
                                // a single unlabeled clause adds nothing
                                parts: if fo.parts.len() > 1 {
                                    fo.parts
                                        .into_iter()
                                        .map(|p| PartReport {
                                            part: p.part,
                                            status: p.status.as_str().to_string(),
                                        })
                                        .collect()
                                } else {
                                    Vec::new()
                                },
                                mismatch: fo.mismatch.map(|m| MismatchReport {
                                    part: m.part,
                                    n: m.n,
                                    monomial: m.monomial,
                                    lhs: m.lhs,
                                    rhs: m.rhs,
                                }),
                                error: fo.error,
                            })
                            .collect(),
                    })
                    .collect(),
            })
            .collect();

        let case_count = cases.len();
        Report {
            order,
            case_count,
            summary: Summary {
                checks,
                verified,
                failed_as_printed: failed,
                errors,
                mandatory_total,
                mandatory_failed,
            },
            cases,
        }
    }

    /// Process exit code contract: 0 when every mandatory check verified,
    /// 1 otherwise. Failed-as-printed verdicts outside the mandatory set
    /// are findings, not tool failures.
    pub fn exit_code(&self) -> i32 {
        if self.summary.mandatory_failed.is_empty() {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> Result<Report, ReportError> {
        Ok(serde_json::from_str(s)?)
    }

    /// Human-readable fixed-order table.
    pub fn to_text(&self) -> String {
        let mut rows: Vec<[String; 4]> = Vec::new();
        rows.push(["case".into(), "grid".into(), "form".into(), "result".into()]);
        for case in &self.cases {
            for grid in &case.results {
                for form in &grid.forms {
                    let mut result = form.status.clone();
                    if let Some(m) = &form.mismatch {
                        let at = if m.part.is_empty() {
                            String::new()
                        } else {
                            format!("[{}] ", m.part)
                        };
                        result.push_str(&format!(
                            " ({}first mismatch at n={}, {}: lhs {} vs rhs {})",
                            at, m.n, m.monomial, m.lhs, m.rhs
                        ));
                    }
                    if let Some(e) = &form.error {
                        result.push_str(&format!(" ({e})"));
                    }
                    rows.push([
                        case.id.clone(),
                        if grid.grid.is_empty() { "-".into() } else { grid.grid.clone() },
                        form.form.clone(),
                        result,
                    ]);
                }
            }
        }
        let mut widths = [0usize; 4];
        for row in &rows {
            for (w, cell) in widths.iter_mut().zip(row.iter()) {
                *w = (*w).max(cell.chars().count());
            }
        }
        let mut out = String::new();
        out.push_str(&format!(
            "identity verification at truncation order {} — {} cases, {} checks\n",
            self.order, self.case_count, self.summary.checks
        ));
        out.push_str(&format!(
            "verified {} | failed-as-printed {} | errors {}\n",
            self.summary.verified, self.summary.failed_as_printed, self.summary.errors
        ));
        if self.summary.mandatory_failed.is_empty() {
            out.push_str(&format!(
                "mandatory checks: {}/{} verified\n\n",
                self.summary.mandatory_total, self.summary.mandatory_total
            ));
        } else {
            out.push_str(&format!(
                "mandatory checks FAILED: {}\n\n",
                self.summary.mandatory_failed.join(", ")
            ));
        }
        for (i, row) in rows.iter().enumerate() {
            let line: Vec<String> = row
                .iter()
                .enumerate()
                .map(|(j, cell)| format!("{:width$}", cell, width = widths[j]))
                .collect();
            out.push_str(line.join("  ").trim_end());
            out.push('\n');
            if i == 0 {
                out.push_str(&"-".repeat(widths.iter().sum::<usize>() + 6));
                out.push('\n');
            }
        }
        out
    }

    /// One CSV row per (case, grid, form) verdict.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("case,anchor,grid,form,status,part,n,monomial,lhs,rhs\n");
        for case in &self.cases {
            for grid in &case.results {
                for form in &grid.forms {
                    let (part, n, monomial, lhs, rhs) = match &form.mismatch {
                        Some(m) => (
                            m.part.clone(),
                            m.n.to_string(),
                            m.monomial.clone(),
                            m.lhs.clone(),
                            m.rhs.clone(),
                        ),
                        None => Default::default(),
                    };
                    let cells = [
                        case.id.as_str(),
                        case.anchor.as_str(),
                        grid.grid.as_str(),
                        form.form.as_str(),
                        form.status.as_str(),
                        part.as_str(),
                        n.as_str(),
                        monomial.as_str(),
                        lhs.as_str(),
                        rhs.as_str(),
                    ];
                    let row: Vec<String> = cells.iter().map(|c| csv_escape(c)).collect();
                    out.push_str(&row.join(","));
                    out.push('\n');
                }
            }
        }
        out
    }

    /// Every failed-as-printed (case, grid, form) triple.
    pub fn failed_entries(&self) -> Vec<(&CaseReport, &GridReport, &FormReport)> {
        let mut out = Vec::new();
        for case in &self.cases {
            for grid in &case.results {
                for form in &grid.forms {
                    if form.status == "failed-as-printed" {
                        out.push((case, grid, form));
                    }
                }
            }
        }
        out
    }
}

fn csv_escape(cell: &str) -> String {
    if cell.contains([',', '"', '\n']) {
        format!("\"{}\"", cell.replace('"', "\"\""))
    } else {
        cell.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_escaping() {
        assert_eq!(csv_escape("plain"), "plain");
        assert_eq!(csv_escape("r1=1, r2=2"), "\"r1=1, r2=2\"");
        assert_eq!(csv_escape("say \"hi\""), "\"say \"\"hi\"\"\"");
    }
}
