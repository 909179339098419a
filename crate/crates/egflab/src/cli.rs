//! Command-line front end.
//!
//! Verbs:
//!
//! - `expand`: coefficient table `P_0..P_N` of a family (text, JSON, CSV)
//! - `eval`: exact value of `P_n` at a rational point
//! - `verify`: run the identity catalog (all cases or one) and emit a report
//! - `report`: render a previously written JSON report as a table or CSV
//!
//! Exit codes: 0 on success (for `verify`: every mandatory check verified,
//! even if non-mandatory printed forms failed — those are findings), 1 when
//! a mandatory check fails or an evaluation is mathematically inadmissible
//! (e.g. `u = 0` against a `u^-1` term), 2 on usage errors such as unknown
//! families, unknown case ids, or bad flags.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::families::{build, Family, FamilyError, FamilySpec};
use crate::identity::{run_all, run_case, Registry, Report};
use crate::poly::{Monomial, MultiPoly};
use crate::rat::{parse_rat, Rat};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "egflab",
    version,
    about = "Exact polynomial-family tables and identity verification over truncated EGFs"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

// parsed once at startup; the size spread of the variants is irrelevant
#[allow(clippy::large_enum_variant)]
#[derive(Debug, Subcommand)]
enum Command {
    /// Print the coefficient polynomials P_0..P_N of a family
    Expand {
        /// Family id, e.g. `tangent`, `hermite`, `mod-deg-bernoulli`
        #[arg(long)]
        family: String,
        /// Truncation order N
        #[arg(long)]
        order: usize,
        /// Family order r (families defined at a single order require 1)
        #[arg(long, default_value_t = 1)]
        r: u32,
        /// Polylogarithm index k (poly-families only)
        #[arg(long)]
        k: Option<u32>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Write to a file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate the n-th polynomial of a family at an exact rational point
    Eval {
        #[arg(long)]
        family: String,
        /// Coefficient index n
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        r: u32,
        #[arg(long)]
        k: Option<u32>,
        /// Value for x, as `p/q` or an integer
        #[arg(long, value_parser = parse_rat_flag, default_value = "0")]
        x: Rat,
        /// Value for y
        #[arg(long, value_parser = parse_rat_flag, default_value = "0")]
        y: Rat,
        /// Value for u (must be nonzero for families with u^-1 terms)
        #[arg(long, value_parser = parse_rat_flag, default_value = "1")]
        u: Rat,
        /// Value for λ
        #[arg(long, value_parser = parse_rat_flag, default_value = "0")]
        lambda: Rat,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Verify the identity catalog and write a report
    #[command(group(ArgGroup::new("selection").required(true).args(["all", "case"])))]
    Verify {
        /// Run every registered case
        #[arg(long)]
        all: bool,
        /// Run a single case by id (e.g. `T1a`)
        #[arg(long)]
        case: Option<String>,
        /// Truncation order for the checks
        #[arg(long, default_value_t = 12)]
        order: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Render a JSON report produced by `verify`
    Report {
        /// Path to the JSON report
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn parse_rat_flag(s: &str) -> Result<Rat, String> {
    parse_rat(s).map_err(|e| e.to_string())
}

/// CLI-level failures with their exit codes.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("unknown family `{0}` (see `egflab expand --help` for ids)")]
    UnknownFamily(String),
    #[error("unknown case `{0}`")]
    UnknownCase(String),
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Math(String),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::UnknownFamily(_) | CliError::UnknownCase(_) | CliError::Usage(_) => 2,
            CliError::Math(_) | CliError::Io(_) => 1,
        }
    }
}

impl From<FamilyError> for CliError {
    fn from(e: FamilyError) -> CliError {
        match e {
            FamilyError::UnknownFamily(f) => CliError::UnknownFamily(f),
            FamilyError::InvalidSpec(m) => CliError::Usage(m),
            FamilyError::Series(s) => CliError::Math(s.to_string()),
        }
    }
}

// ------------------------------------------------------- JSON table schema

/// One sparse term: exponents plus the coefficient as decimal strings
/// (numerator/denominator exceed 64 bits at moderate orders).
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct TermJson {
    pub ex: i64,
    pub ey: i64,
    pub eu: i64,
    pub el: i64,
    pub num: String,
    pub den: String,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct RowJson {
    pub n: usize,
    pub terms: Vec<TermJson>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct ParamsJson {
    pub r: u32,
    pub k: Option<u32>,
    pub order: usize,
}

/// The `expand` output: family id, parameters, and one row per index.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct TableJson {
    pub family: String,
    pub params: ParamsJson,
    pub rows: Vec<RowJson>,
}

impl TableJson {
    pub fn from_series(spec: &FamilySpec, series: &crate::series::EgfSeries) -> TableJson {
        let rows = series
            .coeffs()
            .iter()
            .enumerate()
            .map(|(n, p)| RowJson {
                n,
                terms: p
                    .terms()
                    .map(|(m, c)| TermJson {
                        ex: m.ex as i64,
                        ey: m.ey as i64,
                        eu: m.eu as i64,
                        el: m.el as i64,
                        num: c.numer().to_string(),
                        den: c.denom().to_string(),
                    })
                    .collect(),
            })
            .collect();
        TableJson {
            family: spec.family.id().to_string(),
            params: ParamsJson { r: spec.order_r, k: spec.polylog_k, order: spec.truncation },
            rows,
        }
    }

    /// Rebuild the polynomial of one row; validates exponent signs and
    /// denominators.
    pub fn polynomial(&self, n: usize) -> Result<MultiPoly, String> {
        let row = self
            .rows
            .iter()
            .find(|r| r.n == n)
            .ok_or_else(|| format!("no row n={n}"))?;
        let mut p = MultiPoly::zero();
        for t in &row.terms {
            if t.ex < 0 || t.ey < 0 || t.el < 0 {
                return Err(format!("negative exponent outside u in row n={n}"));
            }
            let num: BigInt = t.num.parse().map_err(|_| format!("bad numerator `{}`", t.num))?;
            let den: BigInt = t.den.parse().map_err(|_| format!("bad denominator `{}`", t.den))?;
            if den.is_zero() || den.is_negative() {
                return Err(format!("bad denominator `{}`", t.den));
            }
            let m = Monomial {
                ex: t.ex as u32,
                ey: t.ey as u32,
                eu: t.eu as i32,
                el: t.el as u32,
            };
            p = p.add(&MultiPoly::term(m, Rat::new(num, den)));
        }
        Ok(p)
    }
}

// ----------------------------------------------------------------- verbs

fn family_spec(family: &str, order: usize, r: u32, k: Option<u32>) -> Result<FamilySpec, CliError> {
    let family = Family::parse(family).ok_or_else(|| CliError::UnknownFamily(family.to_string()))?;
    let mut spec = FamilySpec::new(family, order).with_order(r);
    if let Some(k) = k {
        spec = spec.with_polylog(k);
    }
    spec.validate().map_err(CliError::from)?;
    Ok(spec)
}

fn cmd_expand(
    family: &str,
    order: usize,
    r: u32,
    k: Option<u32>,
    format: Format,
) -> Result<String, CliError> {
    let spec = family_spec(family, order, r, k)?;
    let series = build(&spec)?;
    let table = TableJson::from_series(&spec, &series);
    Ok(match format {
        Format::Text => {
            let mut s = String::new();
            for (n, p) in series.coeffs().iter().enumerate() {
                writeln!(s, "{n}: {p}").unwrap();
            }
            s
        }
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&table).expect("table serializes");
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut s = String::from("n,ex,ey,eu,el,num,den\n");
            for row in &table.rows {
                for t in &row.terms {
                    writeln!(s, "{},{},{},{},{},{},{}", row.n, t.ex, t.ey, t.eu, t.el, t.num, t.den)
                        .unwrap();
                }
            }
            s
        }
    })
}

#[allow(clippy::too_many_arguments)]
fn cmd_eval(
    family: &str,
    n: usize,
    r: u32,
    k: Option<u32>,
    x: &Rat,
    y: &Rat,
    u: &Rat,
    lambda: &Rat,
    format: Format,
) -> Result<String, CliError> {
    let spec = family_spec(family, n, r, k)?;
    let series = build(&spec)?;
    let p = series.coeff(n).map_err(|e| CliError::Math(e.to_string()))?;
    let value = p
        .eval(x, y, u, lambda)
        .map_err(|e| CliError::Math(format!("{e} (family `{family}` requires u != 0)")))?;
    Ok(match format {
        Format::Text => format!("{value}\n"),
        Format::Json => {
            let obj = serde_json::json!({
                "family": spec.family.id(),
                "n": n,
                "params": { "r": spec.order_r, "k": spec.polylog_k },
                "point": {
                    "x": x.to_string(),
                    "y": y.to_string(),
                    "u": u.to_string(),
                    "lambda": lambda.to_string(),
                },
                "value": value.to_string(),
            });
            let mut s = serde_json::to_string_pretty(&obj).expect("value serializes");
            s.push('\n');
            s
        }
        Format::Csv => format!(
            "family,n,x,y,u,lambda,value\n{},{},{},{},{},{},{}\n",
            spec.family.id(),
            n,
            x,
            y,
            u,
            lambda,
            value
        ),
    })
}

fn cmd_verify(
    all: bool,
    case: Option<&str>,
    order: usize,
    format: Format,
) -> Result<(String, i32), CliError> {
    let registry = Registry::builtin();
    let report = if all {
        run_all(&registry, order)
    } else {
        let id = case.expect("clap enforces the selection group");
        let case = registry
            .find(id)
            .ok_or_else(|| CliError::UnknownCase(id.to_string()))?;
        Report::assemble(&registry, order, vec![run_case(case, order)])
    };
    let rendered = match format {
        Format::Json => report.to_json(),
        Format::Text => report.to_text(),
        Format::Csv => report.to_csv(),
    };
    Ok((rendered, report.exit_code()))
}

fn cmd_report(input: &PathBuf, format: Format) -> Result<String, CliError> {
    let raw = std::fs::read_to_string(input)?;
    let report = Report::from_json(&raw).map_err(|e| CliError::Usage(e.to_string()))?;
    Ok(match format {
        Format::Text => report.to_text(),
        Format::Csv => report.to_csv(),
        Format::Json => report.to_json(),
    })
}

fn emit(out: Option<&PathBuf>, content: &str) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, content)?,
        None => {
            // tolerate a closed pipe
            let _ = std::io::stdout().write_all(content.as_bytes());
        }
    }
    Ok(())
}

fn execute(cli: Cli) -> Result<i32, CliError> {
    match cli.command {
        Command::Expand { family, order, r, k, format, out } => {
            let rendered = cmd_expand(&family, order, r, k, format)?;
            emit(out.as_ref(), &rendered)?;
            Ok(0)
        }
        Command::Eval { family, n, r, k, x, y, u, lambda, format, out } => {
            let rendered = cmd_eval(&family, n, r, k, &x, &y, &u, &lambda, format)?;
            emit(out.as_ref(), &rendered)?;
            Ok(0)
        }
        Command::Verify { all, case, order, format, out } => {
            let (rendered, code) = cmd_verify(all, case.as_deref(), order, format)?;
            emit(out.as_ref(), &rendered)?;
            Ok(code)
        }
        Command::Report { input, format, out } => {
            let rendered = cmd_report(&input, format)?;
            emit(out.as_ref(), &rendered)?;
            Ok(0)
        }
    }
}

/// Parse `std::env::args`, run, and return the process exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    match execute(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
