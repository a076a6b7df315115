//! Command-line front end. [`run`] returns the exit code and the text for
//! stdout and stderr, so the binary is a thin wrapper and tests can drive
//! the interface in-process.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 input or usage error.

use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde::Serialize;

use crate::catalog::{self, CatalogError, CurveRef};
use crate::classifier::{self, CandidateVerdict};
use crate::combinatorics::{
    admissible_h_range, arnold_exponent, bezout_sides, hirzebruch_check, hirzebruch_integer_form, kobayashi_lhs_rhs,
    exponent_sum, poincare_split, total_tjurina, HirzebruchReport, PoincareSplit, WeakCombinatorics,
};
use crate::parse::parse;
use crate::poly::HomogeneousPolynomial;
use crate::syzygy::analyze;

#[derive(Debug, Parser)]
#[command(name = "conicsyz", version, about = "Jacobian syzygies and combinatorics of plane conic arrangements")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Full syzygy profile of a reduced plane curve.
    Analyze {
        /// Polynomial text, e.g. "(x^2+y^2-z^2)*(2*x^2+y^2-z^2)".
        polynomial: Option<String>,
        /// Read the polynomial from a UTF-8 file instead.
        #[arg(long, conflicts_with = "polynomial")]
        file: Option<PathBuf>,
        /// Census to compare the Tjurina number against.
        #[arg(long)]
        census: Option<String>,
    },
    /// Combinatorial tests on a census.
    Census {
        #[command(subcommand)]
        action: CensusAction,
    },
    /// Screen nodal-tacnodal censuses of k conics.
    Enumerate {
        #[arg(long, required_unless_present = "report")]
        k: Option<u32>,
        /// Labelled report over k = 2..5.
        #[arg(long)]
        report: bool,
    },
    /// Splitting of the candidate Poincare polynomial.
    Poincare {
        census: String,
        #[arg(long, required_unless_present = "all_h")]
        h: Option<i64>,
        /// Every h in the admissible range.
        #[arg(long)]
        all_h: bool,
    },
    /// Hirzebruch-type inequality for conic arrangements.
    Hirzebruch { census: String },
    /// Named curves and families.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Compare two catalog curves (name or name@value).
    Ziegler { left: String, right: String },
}

#[derive(Debug, Subcommand)]
enum CensusAction {
    Check { census: String },
}

#[derive(Debug, Subcommand)]
enum CatalogAction {
    List,
    Run {
        name: String,
        #[arg(long, allow_hyphen_values = true)]
        param: Option<String>,
        /// Polynomial file for entries without built-in equations.
        #[arg(long)]
        equation_file: Option<PathBuf>,
    },
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn json<T: Serialize>(value: &T, code: i32) -> Outcome {
        let mut stdout = serde_json::to_string_pretty(value).expect("serializable output");
        stdout.push('\n');
        Outcome { code, stdout, stderr: String::new() }
    }

    fn input_error(msg: impl std::fmt::Display) -> Outcome {
        Outcome { code: 2, stdout: String::new(), stderr: format!("error: {msg}\n") }
    }
}

#[derive(Serialize)]
struct Sides<T> {
    lhs: T,
    rhs: T,
    holds: bool,
}

#[derive(Serialize)]
struct PoincareRow {
    h: i64,
    split: Option<(i64, i64)>,
}

#[derive(Serialize)]
struct PoincareTable {
    census: String,
    h_range: (i64, i64),
    /// False when the Arnold-exponent bound does not apply and the range
    /// falls back to `[1, d-1]`.
    bound_applies: bool,
    rows: Vec<PoincareRow>,
}

#[derive(Serialize)]
struct CensusReport {
    census: String,
    degree: i64,
    total_tjurina: i64,
    bezout: Result<Sides<i64>, String>,
    arnold_exponent: Result<String, String>,
    h_range: Result<(i64, i64), String>,
    exponent_sum: Result<i64, String>,
    hirzebruch: HirzebruchReport,
    hirzebruch_integer_form: Option<bool>,
    kobayashi: Result<Sides<String>, String>,
    poincare: Result<PoincareTable, String>,
    pog_filter: Result<CandidateVerdict, String>,
}

#[derive(Serialize)]
struct EnumerateReport {
    k: u32,
    verdicts: Vec<CandidateVerdict>,
    candidates: Vec<String>,
}

fn parse_census(text: &str) -> Result<WeakCombinatorics, Outcome> {
    text.parse().map_err(Outcome::input_error)
}

fn poincare_table(wc: &WeakCombinatorics, only: Option<i64>) -> Result<PoincareTable, String> {
    let (range, bound_applies) = match admissible_h_range(wc) {
        Ok(r) => ((*r.start(), *r.end()), true),
        Err(_) => ((1, wc.degree() - 1), false),
    };
    let hs: Vec<i64> = match only {
        Some(h) => vec![h],
        None => (range.0.max(1)..=range.1).collect(),
    };
    let rows = hs
        .into_iter()
        .map(|h| {
            poincare_split(wc, h).map_err(|e| e.to_string()).map(|s| PoincareRow {
                h,
                split: match s {
                    PoincareSplit::Split { d1, d2 } => Some((d1, d2)),
                    PoincareSplit::NoRationalSplit => None,
                },
            })
        })
        .collect::<Result<Vec<_>, String>>()?;
    Ok(PoincareTable { census: wc.to_string(), h_range: range, bound_applies, rows })
}

fn census_report(wc: &WeakCombinatorics) -> CensusReport {
    let hz = hirzebruch_check(wc);
    let applicable = hz.lhs.is_some();
    CensusReport {
        census: wc.to_string(),
        degree: wc.degree(),
        total_tjurina: total_tjurina(wc),
        bezout: bezout_sides(wc).map(|(lhs, rhs)| Sides { lhs, rhs, holds: lhs == rhs }).map_err(|e| e.to_string()),
        arnold_exponent: arnold_exponent(wc).map(|q| q.to_string()).map_err(|e| e.to_string()),
        h_range: admissible_h_range(wc).map(|r| (*r.start(), *r.end())).map_err(|e| e.to_string()),
        exponent_sum: exponent_sum(wc).map_err(|e| e.to_string()),
        hirzebruch: hz,
        hirzebruch_integer_form: applicable.then(|| hirzebruch_integer_form(wc)),
        kobayashi: kobayashi_lhs_rhs(wc, wc.degree())
            .map(|(l, r)| Sides { holds: l <= r, lhs: l.to_string(), rhs: r.to_string() })
            .map_err(|e| e.to_string()),
        poincare: poincare_table(wc, None),
        pog_filter: classifier::pog_filter(wc).map_err(|e| e.to_string()),
    }
}

fn read_polynomial(path: &PathBuf) -> Result<HomogeneousPolynomial, Outcome> {
    let text = std::fs::read_to_string(path).map_err(|e| Outcome::input_error(format!("{}: {e}", path.display())))?;
    parse(text.trim()).map_err(Outcome::input_error)
}

fn catalog_error(e: CatalogError) -> Outcome {
    Outcome::input_error(e)
}

fn dispatch(cmd: Command) -> Result<Outcome, Outcome> {
    Ok(match cmd {
        Command::Analyze { polynomial, file, census } => {
            let f = match (polynomial, file) {
                (Some(text), None) => parse(&text).map_err(Outcome::input_error)?,
                (None, Some(path)) => read_polynomial(&path)?,
                _ => return Err(Outcome::input_error("give a polynomial or --file")),
            };
            let wc = census.as_deref().map(parse_census).transpose()?;
            let mut profile = analyze(&f).map_err(Outcome::input_error)?;
            profile.checks.tau_census = wc.map(|wc| profile.tau as i64 == total_tjurina(&wc));
            let c = &profile.checks;
            let ok = c.euler && c.hilbert_numerator && c.tau_census != Some(false);
            Outcome::json(&profile, if ok { 0 } else { 1 })
        }
        Command::Census { action: CensusAction::Check { census } } => {
            let wc = parse_census(&census)?;
            Outcome::json(&census_report(&wc), 0)
        }
        Command::Enumerate { report: true, .. } => Outcome::json(&classifier::classification_report(), 0),
        Command::Enumerate { k, .. } => {
            let k = k.expect("clap enforces --k");
            if k < 1 {
                return Err(Outcome::input_error("--k must be at least 1"));
            }
            let verdicts = classifier::enumerate_nodal_tacnodal(k);
            let candidates = verdicts.iter().filter(|v| v.is_candidate()).map(|v| v.census.clone()).collect();
            Outcome::json(&EnumerateReport { k, verdicts, candidates }, 0)
        }
        Command::Poincare { census, h, all_h } => {
            let wc = parse_census(&census)?;
            let table = poincare_table(&wc, if all_h { None } else { h }).map_err(Outcome::input_error)?;
            Outcome::json(&table, 0)
        }
        Command::Hirzebruch { census } => Outcome::json(&hirzebruch_check(&parse_census(&census)?), 0),
        Command::Catalog { action: CatalogAction::List } => Outcome::json(&catalog::entries(), 0),
        Command::Catalog { action: CatalogAction::Run { name, param, equation_file } } => {
            let entry = catalog::lookup(&name).map_err(catalog_error)?;
            let value = param.as_deref().map(catalog::parse_rational).transpose().map_err(catalog_error)?;
            let equation = equation_file.as_ref().map(read_polynomial).transpose()?;
            let result = catalog::run_entry(&entry, value.as_ref(), equation.as_ref()).map_err(catalog_error)?;
            let code = if result.verdict == catalog::RunVerdict::Pass { 0 } else { 1 };
            Outcome::json(&result, code)
        }
        Command::Ziegler { left, right } => {
            let a = CurveRef::parse(&left).map_err(catalog_error)?;
            let b = CurveRef::parse(&right).map_err(catalog_error)?;
            Outcome::json(&catalog::ziegler_compare(&a, &b).map_err(catalog_error)?, 0)
        }
    })
}

/// Runs the command line `args` (including the program name).
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => dispatch(cli.command).unwrap_or_else(|e| e),
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                Outcome { code: 2, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: 0, stdout: text, stderr: String::new() }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cli(args: &[&str]) -> Outcome {
        run(std::iter::once("conicsyz").chain(args.iter().copied()))
    }

    #[test]
    fn analyze_pencil() {
        let o = cli(&["analyze", "(x^2+y^2-z^2)*(2*x^2+y^2-z^2)*(x^2+2*y^2-z^2)", "--census", "k=3; n2=4, t3=4"]);
        assert_eq!(o.code, 0, "{}", o.stderr);
        let v: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
        assert_eq!(v["classification"], "plus_one_generated");
        assert_eq!(v["generator_degrees"], serde_json::json!([3, 3, 5]));
        assert_eq!(v["checks"]["tau_census"], true);
    }

    #[test]
    fn tau_mismatch_exits_one() {
        let o = cli(&["analyze", "x^2+y^2-z^2", "--census", "k=1; n2=1"]);
        assert_eq!(o.code, 1);
    }

    #[test]
    fn poincare_all_h() {
        let o = cli(&["poincare", "k=4; t3=12", "--all-h"]);
        assert_eq!(o.code, 0);
        let v: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
        let rows: Vec<_> = v["rows"].as_array().unwrap().iter().map(|r| (r["h"].clone(), r["split"].clone())).collect();
        use serde_json::json;
        assert_eq!(
            rows,
            vec![
                (json!(4), json!([4, 4])),
                (json!(5), json!([3, 5])),
                (json!(6), json!(null)),
                (json!(7), json!(null)),
            ]
        );
    }

    #[test]
    fn enumerate_five_is_empty() {
        let o = cli(&["enumerate", "--k", "5"]);
        let v: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
        assert_eq!(v["candidates"], serde_json::json!([]));
    }

    #[test]
    fn input_errors_exit_two() {
        assert_eq!(cli(&["analyze", "x^2+y"]).code, 2);
        assert_eq!(cli(&["census", "check", "k=2; q=1"]).code, 2);
        assert_eq!(cli(&["catalog", "run", "three_conics_pencil", "--param", "1"]).code, 2);
        assert_eq!(cli(&["catalog", "run", "nope"]).code, 2);
        assert_eq!(cli(&["frobnicate"]).code, 2);
        assert_eq!(cli(&[]).code, 2);
    }

    #[test]
    fn census_check_reports_everything() {
        let o = cli(&["census", "check", "k=5; t3=17, n3=2"]);
        assert_eq!(o.code, 0);
        let v: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
        assert_eq!(v["hirzebruch"]["status"], "violated");
        assert_eq!(v["hirzebruch"]["lhs"], "83/2");
        assert_eq!(v["pog_filter"]["Ok"]["status"], "excluded_hirzebruch");
    }

    #[test]
    fn negative_parameter_accepted() {
        let o = cli(&["catalog", "run", "three_conics_pencil", "--param", "-2"]);
        assert_eq!(o.code, 0, "{}", o.stderr);
    }
}
