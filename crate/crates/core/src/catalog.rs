//! Named conic(-line) arrangements with their declared singularity censuses
//! and expected syzygy profiles, plus the Ziegler-pair comparator.
//!
//! A parametric entry is a list of factor templates in which one letter
//! stands for a rational parameter. Specialization substitutes the value,
//! expands the product and audits the result: the Tjurina number computed by
//! the engine must equal the total Milnor number of the declared census.
//! A mismatch means the singularities degenerated at that value.

use std::fmt;

use num_traits::Signed;
use rayon::prelude::*;
use serde::Serialize;

use crate::combinatorics::{total_tjurina, WeakCombinatorics};
use crate::parse::{parse, ParseError};
use crate::poly::{HomogeneousPolynomial, Rational};
use crate::syzygy::{self, analyze_full, Classification, EngineError, JacobianData, SyzygyProfile};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CatalogError {
    #[error("unknown catalog entry {0:?}")]
    UnknownEntry(String),
    #[error("entry {0} needs a parameter value")]
    ParameterRequired(String),
    #[error("entry {0} takes no parameter")]
    UnexpectedParameter(String),
    #[error("entry {0} needs a user-supplied equation")]
    EquationRequired(String),
    #[error("parameter {value} is excluded for {entry}")]
    ExcludedParameter { entry: String, value: String },
    #[error("parameter {value} is degenerate for {entry}: {reason}")]
    DegenerateParameter { entry: String, value: String, expected_tau: i64, found_tau: Option<usize>, reason: String },
    #[error("curves have different degrees ({left} vs {right})")]
    DegreeMismatch { left: u32, right: u32 },
    #[error("malformed curve reference {0:?}; expected name or name@value")]
    BadCurveSpec(String),
    #[error("bad parameter value {0:?}")]
    BadParameter(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Engine(#[from] EngineError),
}

/// Profile a correct run must reproduce.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExpectedProfile {
    pub classification: Classification,
    pub generator_degrees: Vec<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub second_syzygy_degrees: Option<Vec<u32>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nu: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub delta_level: Option<u32>,
    pub citation: &'static str,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CatalogEntry {
    pub name: &'static str,
    /// Letter standing for the parameter in `factors`, if any.
    pub parameter: Option<char>,
    pub factors: Vec<&'static str>,
    #[serde(serialize_with = "ser_rationals")]
    pub excluded_params: Vec<Rational>,
    /// The family also degenerates at `±i`; irrelevant for rational input.
    pub excludes_imaginary_unit: bool,
    #[serde(serialize_with = "ser_display")]
    pub declared_wc: WeakCombinatorics,
    pub expected_profile: ExpectedProfile,
    #[serde(serialize_with = "ser_rationals")]
    pub sample_params: Vec<Rational>,
    /// The polynomial comes from a user-supplied file.
    pub user_equation: bool,
}

fn ser_rationals<S: serde::Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|q| q.to_string()))
}

fn ser_display<T: fmt::Display, S: serde::Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}

fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn census(s: &str) -> WeakCombinatorics {
    s.parse().expect("catalog census literal")
}

const BASE: [&str; 3] = ["x^2+y^2-z^2", "3*x^2+y^2-3*z^2", "x^2+3*y^2-3*z^2"];

/// All catalog entries, sorted by name.
pub fn entries() -> Vec<CatalogEntry> {
    let pog = |d: Vec<u32>, nu, dl, citation| ExpectedProfile {
        classification: Classification::PlusOneGenerated,
        generator_degrees: d,
        second_syzygy_degrees: None,
        nu: Some(nu),
        delta_level: Some(dl),
        citation,
    };
    let msyz = |d: Vec<u32>, second: Vec<u32>, citation| ExpectedProfile {
        classification: Classification::MSyzygy,
        generator_degrees: d,
        second_syzygy_degrees: Some(second),
        nu: None,
        delta_level: None,
        citation,
    };
    let mut out = vec![
        CatalogEntry {
            name: "four_conics_12_tacnodes",
            parameter: None,
            factors: vec![],
            excluded_params: vec![],
            excludes_imaginary_unit: false,
            declared_wc: census("k=4; t3=12"),
            expected_profile: ExpectedProfile {
                classification: Classification::NearlyFree,
                generator_degrees: vec![4, 4, 4],
                second_syzygy_degrees: None,
                nu: Some(4),
                delta_level: Some(0),
                citation: "four conics meeting pairwise in two tacnodes: nearly free with exponents (4,4,4)",
            },
            sample_params: vec![],
            user_equation: true,
        },
        CatalogEntry {
            name: "megyesi_family",
            parameter: Some('r'),
            factors: vec!["x^2+y^2-z^2", "x^2+r^2*y^2-r^2*z^2", "x^2+y^2-r^2*z^2", "r^2*x^2+y^2-r^2*z^2"],
            excluded_params: vec![q(0), q(1), q(-1)],
            excludes_imaginary_unit: true,
            declared_wc: census("k=4; n2=4, t3=10"),
            expected_profile: msyz(vec![4, 5, 5, 5], vec![13, 13], "4-syzygy curve with exponents (4,5,5,5)"),
            sample_params: vec![q(2), q(3)],
            user_equation: false,
        },
        CatalogEntry {
            name: "t_family",
            parameter: Some('r'),
            factors: vec!["x^2+y^2+4*r*x*z", "x^2+y^2-4*r*x*z", "x^2+3*y^2-18*r^2*z^2", "x^2+3*y^2-16*r^2*z^2"],
            excluded_params: vec![q(0)],
            excludes_imaginary_unit: false,
            declared_wc: census("k=4; n2=6, t3=9"),
            expected_profile: msyz(vec![5; 5], vec![13, 13, 13], "5-syzygy curve with exponents (5,5,5,5,5)"),
            sample_params: vec![q(1), q(2)],
            user_equation: false,
        },
        CatalogEntry {
            name: "three_conics_pencil",
            parameter: Some('l'),
            factors: vec!["x^2+y^2-z^2", "l*x^2+y^2-z^2", "x^2+l*y^2-z^2"],
            excluded_params: vec![q(0), q(1), q(-1)],
            excludes_imaginary_unit: false,
            declared_wc: census("k=3; n2=4, t3=4"),
            expected_profile: pog(vec![3, 3, 5], 3, 2, "plus-one generated with exponents (3,3,5)"),
            sample_params: vec![q(2), q(3), q(5)],
            user_equation: false,
        },
        CatalogEntry {
            name: "ziegler_base",
            parameter: None,
            factors: BASE.to_vec(),
            excluded_params: vec![],
            excludes_imaginary_unit: false,
            declared_wc: census("k=3; n2=4, t3=4"),
            expected_profile: pog(vec![3, 3, 5], 3, 2, "plus-one generated conic arrangement with census (3;4,4)"),
            sample_params: vec![],
            user_equation: false,
        },
        CatalogEntry {
            name: "ziegler_C1",
            parameter: None,
            factors: [&BASE[..], &["y-x-2*z", "y+x+2*z"]].concat(),
            excluded_params: vec![],
            excludes_imaginary_unit: false,
            declared_wc: census("k=3; lines=2, n2=9, t3=8"),
            expected_profile: msyz(vec![5; 5], vec![13, 13, 13], "resolution 0 -> S(-13)^3 -> S(-12)^5 -> S(-7)^3"),
            sample_params: vec![],
            user_equation: false,
        },
        CatalogEntry {
            name: "ziegler_C2",
            parameter: None,
            factors: [&BASE[..], &["y-x-2*z", "y-x+2*z"]].concat(),
            excluded_params: vec![],
            excludes_imaginary_unit: false,
            declared_wc: census("k=3; lines=2, n2=9, t3=8"),
            expected_profile: msyz(
                vec![4, 5, 5, 6],
                vec![13, 14],
                "resolution 0 -> S(-14)+S(-13) -> S(-13)+S(-12)^2+S(-11) -> S(-7)^3",
            ),
            sample_params: vec![],
            user_equation: false,
        },
    ];
    out.sort_by_key(|e| e.name);
    out
}

pub fn lookup(name: &str) -> Result<CatalogEntry, CatalogError> {
    entries().into_iter().find(|e| e.name == name).ok_or_else(|| CatalogError::UnknownEntry(name.to_string()))
}

pub fn parse_rational(text: &str) -> Result<Rational, CatalogError> {
    text.trim().parse::<Rational>().map_err(|_| CatalogError::BadParameter(text.to_string()))
}

impl CatalogEntry {
    pub fn is_parametric(&self) -> bool {
        self.parameter.is_some()
    }

    pub fn is_excluded(&self, value: &Rational) -> bool {
        self.excluded_params.contains(value)
    }

    pub fn declared_tau(&self) -> i64 {
        total_tjurina(&self.declared_wc)
    }

    /// Factor texts with the parameter substituted.
    fn factor_texts(&self, value: Option<&Rational>) -> Result<Vec<String>, CatalogError> {
        if self.user_equation {
            return Err(CatalogError::EquationRequired(self.name.into()));
        }
        match (self.parameter, value) {
            (Some(sym), Some(v)) => {
                let sub = format!("({v})");
                Ok(self.factors.iter().map(|f| f.replace(sym, &sub)).collect())
            }
            (Some(_), None) => Err(CatalogError::ParameterRequired(self.name.into())),
            (None, Some(_)) => Err(CatalogError::UnexpectedParameter(self.name.into())),
            (None, None) => Ok(self.factors.iter().map(|f| f.to_string()).collect()),
        }
    }

    /// Expanded product without the exclusion gate or the audit.
    pub fn expand(&self, value: Option<&Rational>) -> Result<HomogeneousPolynomial, CatalogError> {
        let factors = self.factor_texts(value)?;
        let mut f: Option<HomogeneousPolynomial> = None;
        for text in factors {
            let g = parse(&text)?;
            f = Some(match f {
                None => g,
                Some(acc) => acc.mul(&g),
            });
        }
        Ok(f.expect("catalog entries have factors"))
    }

    fn gate(&self, value: Option<&Rational>) -> Result<(), CatalogError> {
        match value {
            Some(v) if self.is_excluded(v) => {
                Err(CatalogError::ExcludedParameter { entry: self.name.into(), value: v.to_string() })
            }
            _ => Ok(()),
        }
    }

    fn degenerate(&self, value: Option<&Rational>, found: Option<usize>, reason: String) -> CatalogError {
        CatalogError::DegenerateParameter {
            entry: self.name.into(),
            value: value.map(|v| v.to_string()).unwrap_or_default(),
            expected_tau: self.declared_tau(),
            found_tau: found,
            reason,
        }
    }

    /// Tjurina audit of an already expanded polynomial.
    fn audit(&self, value: Option<&Rational>, f: &HomogeneousPolynomial) -> Result<usize, CatalogError> {
        match syzygy::tjurina(f) {
            Ok(tau) if tau as i64 == self.declared_tau() => Ok(tau),
            Ok(tau) => {
                Err(self.degenerate(value, Some(tau), format!("tau = {tau}, census gives {}", self.declared_tau())))
            }
            Err(e @ (EngineError::NotStabilized { .. } | EngineError::SearchExhausted(_))) => {
                Err(self.degenerate(value, None, format!("curve is not reduced ({e})")))
            }
            Err(e) => Err(e.into()),
        }
    }
}

/// Substitutes `value`, expands the product and checks that the Tjurina
/// number matches the declared census.
pub fn specialize(entry: &CatalogEntry, value: &Rational) -> Result<HomogeneousPolynomial, CatalogError> {
    entry.gate(Some(value))?;
    let f = entry.expand(Some(value))?;
    entry.audit(Some(value), &f)?;
    Ok(f)
}

/// Runs the Tjurina audit at `value` without consulting the exclusion list;
/// used to locate degenerate parameters.
pub fn audit_parameter(entry: &CatalogEntry, value: &Rational) -> Result<usize, CatalogError> {
    let f = entry.expand(Some(value))?;
    entry.audit(Some(value), &f)
}

/// Small rationals `p/q` with `|p| <= max_num`, `1 <= q <= max_den`, in a
/// fixed order (by height, then value).
pub fn small_rationals(max_num: i64, max_den: i64) -> Vec<Rational> {
    let mut out: Vec<Rational> = Vec::new();
    for den in 1..=max_den {
        for num in -max_num..=max_num {
            let v = Rational::new(num.into(), den.into());
            if *v.denom() == den.into() && !out.contains(&v) {
                out.push(v);
            }
        }
    }
    out.sort_by(|a, b| {
        let h = |v: &Rational| (v.numer().abs().max(v.denom().clone()), v.clone());
        h(a).cmp(&h(b))
    });
    out
}

/// Audits every candidate in parallel and returns the degenerate ones with
/// the error that exposed them, in input order.
pub fn scan_degenerate(entry: &CatalogEntry, candidates: &[Rational]) -> Vec<(Rational, CatalogError)> {
    candidates
        .par_iter()
        .filter_map(|v| match audit_parameter(entry, v) {
            Ok(_) => None,
            Err(e) => Some((v.clone(), e)),
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RunVerdict {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RunResult {
    pub entry: String,
    pub parameter: Option<String>,
    pub polynomial: String,
    pub declared_census: String,
    pub profile: SyzygyProfile,
    pub expected: ExpectedProfile,
    pub verdict: RunVerdict,
    pub mismatches: Vec<String>,
}

fn compare<T: PartialEq + fmt::Debug>(out: &mut Vec<String>, what: &str, found: &T, expected: &T) {
    if found != expected {
        out.push(format!("{what}: found {found:?}, expected {expected:?}"));
    }
}

/// Full profile of the entry compared against its expected profile.
/// `equation` supplies the polynomial for entries without factor templates.
pub fn run_entry(
    entry: &CatalogEntry,
    value: Option<&Rational>,
    equation: Option<&HomogeneousPolynomial>,
) -> Result<RunResult, CatalogError> {
    let f = match (entry.user_equation, equation) {
        (true, Some(f)) => {
            if value.is_some() {
                return Err(CatalogError::UnexpectedParameter(entry.name.into()));
            }
            f.clone()
        }
        (true, None) => return Err(CatalogError::EquationRequired(entry.name.into())),
        (false, _) => {
            entry.gate(value)?;
            entry.expand(value)?
        }
    };
    let analysis = match analyze_full(&f) {
        Ok(a) => a,
        Err(e @ (EngineError::NotStabilized { .. } | EngineError::SearchExhausted(_))) if entry.is_parametric() => {
            return Err(entry.degenerate(value, None, format!("curve is not reduced ({e})")));
        }
        Err(e) => return Err(e.into()),
    };
    let mut profile = analysis.profile();
    let tau_ok = profile.tau as i64 == entry.declared_tau();
    if entry.is_parametric() && !tau_ok {
        return Err(entry.degenerate(
            value,
            Some(profile.tau),
            format!("tau = {}, census gives {}", profile.tau, entry.declared_tau()),
        ));
    }
    profile.checks.tau_census = Some(tau_ok);
    let exp = &entry.expected_profile;
    let mut mismatches = Vec::new();
    compare(&mut mismatches, "classification", &profile.classification, &exp.classification);
    compare(&mut mismatches, "generator_degrees", &profile.generator_degrees, &exp.generator_degrees);
    if let Some(second) = &exp.second_syzygy_degrees {
        compare(&mut mismatches, "second_syzygy_degrees", &profile.second_syzygy_degrees, second);
    }
    if exp.nu.is_some() {
        compare(&mut mismatches, "nu", &profile.nu, &exp.nu);
    }
    if exp.delta_level.is_some() {
        compare(&mut mismatches, "delta_level", &profile.delta_level, &exp.delta_level);
    }
    compare(&mut mismatches, "tau", &(profile.tau as i64), &entry.declared_tau());
    if !profile.checks.euler {
        mismatches.push("euler relation not in the syzygy module".into());
    }
    if !profile.checks.hilbert_numerator {
        mismatches.push("Hilbert numerator identity fails".into());
    }
    let verdict = if mismatches.is_empty() { RunVerdict::Pass } else { RunVerdict::Fail };
    Ok(RunResult {
        entry: entry.name.into(),
        parameter: value.map(|v| v.to_string()),
        polynomial: f.to_string(),
        declared_census: entry.declared_wc.to_string(),
        profile,
        expected: exp.clone(),
        verdict,
        mismatches,
    })
}

/// Runs every entry at each of its sample parameters (once for fixed
/// entries), in parallel; results are ordered by entry name, then sample.
pub fn run_samples() -> Vec<(String, Option<String>, Result<RunResult, CatalogError>)> {
    let jobs: Vec<(CatalogEntry, Option<Rational>)> = entries()
        .into_iter()
        .filter(|e| !e.user_equation)
        .flat_map(|e| {
            if e.is_parametric() {
                e.sample_params.iter().map(|v| (e.clone(), Some(v.clone()))).collect::<Vec<_>>()
            } else {
                vec![(e, None)]
            }
        })
        .collect();
    jobs.into_par_iter()
        .map(|(e, v)| (e.name.to_string(), v.as_ref().map(|x| x.to_string()), run_entry(&e, v.as_ref(), None)))
        .collect()
}

/// A curve named by catalog entry and, for parametric entries, `@value`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveRef {
    pub entry: CatalogEntry,
    pub value: Option<Rational>,
}

impl CurveRef {
    pub fn parse(text: &str) -> Result<CurveRef, CatalogError> {
        let (name, value) = match text.split_once('@') {
            Some((n, v)) => (n.trim(), Some(parse_rational(v)?)),
            None => (text.trim(), None),
        };
        if name.is_empty() {
            return Err(CatalogError::BadCurveSpec(text.to_string()));
        }
        Ok(CurveRef { entry: lookup(name)?, value })
    }

    pub fn label(&self) -> String {
        match &self.value {
            Some(v) => format!("{}@{v}", self.entry.name),
            None => self.entry.name.to_string(),
        }
    }

    pub fn polynomial(&self) -> Result<HomogeneousPolynomial, CatalogError> {
        match &self.value {
            Some(v) => specialize(&self.entry, v),
            None => self.entry.expand(None),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ZieglerVerdict {
    StrongZieglerCandidate,
    NotAPair,
    IdenticalModulesUpToCheckedDegree,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ZieglerComparison {
    pub left: String,
    pub right: String,
    pub same_weak_combinatorics: bool,
    pub ar_hilbert_left: Vec<usize>,
    pub ar_hilbert_right: Vec<usize>,
    pub differing_degrees: Vec<u32>,
    pub verdict: ZieglerVerdict,
}

impl ZieglerComparison {
    pub fn swapped(&self) -> ZieglerComparison {
        ZieglerComparison {
            left: self.right.clone(),
            right: self.left.clone(),
            ar_hilbert_left: self.ar_hilbert_right.clone(),
            ar_hilbert_right: self.ar_hilbert_left.clone(),
            ..self.clone()
        }
    }
}

/// `dim AR(f)_r` for `r = 0..d-1`.
pub fn ar_hilbert_below_degree(f: &HomogeneousPolynomial) -> Result<Vec<usize>, CatalogError> {
    let data = JacobianData::new(f)?;
    let d = data.degree();
    Ok((0..d).into_par_iter().map(|r| syzygy::ar_dim_exact(&data, r)).collect())
}

/// Compares declared censuses and the low-degree part of the syzygy modules.
pub fn ziegler_compare(a: &CurveRef, b: &CurveRef) -> Result<ZieglerComparison, CatalogError> {
    let (fa, fb) = rayon::join(|| a.polynomial(), || b.polynomial());
    let (fa, fb) = (fa?, fb?);
    if fa.degree() != fb.degree() {
        return Err(CatalogError::DegreeMismatch { left: fa.degree(), right: fb.degree() });
    }
    let (ha, hb) = rayon::join(|| ar_hilbert_below_degree(&fa), || ar_hilbert_below_degree(&fb));
    let (ha, hb) = (ha?, hb?);
    let same = a.entry.declared_wc == b.entry.declared_wc;
    let differing: Vec<u32> = (0..ha.len()).filter(|&r| ha[r] != hb[r]).map(|r| r as u32).collect();
    let verdict = match (same, differing.is_empty()) {
        (false, _) => ZieglerVerdict::NotAPair,
        (true, true) => ZieglerVerdict::IdenticalModulesUpToCheckedDegree,
        (true, false) => ZieglerVerdict::StrongZieglerCandidate,
    };
    Ok(ZieglerComparison {
        left: a.label(),
        right: b.label(),
        same_weak_combinatorics: same,
        ar_hilbert_left: ha,
        ar_hilbert_right: hb,
        differing_degrees: differing,
        verdict,
    })
}

/// A census with a known realization, used to label enumeration output.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Realization {
    pub census: WeakCombinatorics,
    pub plus_one_generated: bool,
    pub label: &'static str,
    /// Catalog entry realizing the census, or a description of the source.
    pub source: &'static str,
}

/// Known realizations of the nodal-tacnodal candidates with `k <= 4`.
pub fn realizations() -> Vec<Realization> {
    let r =
        |c: &str, pog: bool, label, source| Realization { census: census(c), plus_one_generated: pog, label, source };
    vec![
        r("k=2; n2=2, t3=1", true, "plus-one generated (2,2,3)", "known classification of conic pairs"),
        r("k=3; n2=2, t3=5", true, "plus-one generated (3,3,4)", "known classification of conic triples"),
        r("k=3; n2=4, t3=4", true, "plus-one generated (3,3,5)", "catalog:three_conics_pencil"),
        r("k=4; n2=2, t3=11", true, "plus-one generated (4,4,5)", "known arrangement of four conics"),
        r("k=4; n2=4, t3=10", false, "4-syzygy (4,5,5,5) at sampled parameters", "catalog:megyesi_family"),
        r("k=4; n2=6, t3=9", false, "5-syzygy (5,5,5,5,5) at sampled parameters", "catalog:t_family"),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn entries_sorted_and_consistent() {
        let es = entries();
        let names: Vec<_> = es.iter().map(|e| e.name).collect();
        let mut sorted = names.clone();
        sorted.sort();
        assert_eq!(names, sorted);
        for e in &es {
            assert_eq!(e.is_parametric(), !e.sample_params.is_empty());
            for v in &e.sample_params {
                assert!(!e.is_excluded(v));
            }
        }
    }

    #[test]
    fn substitution_and_degree() {
        let e = lookup("megyesi_family").unwrap();
        let f = e.expand(Some(&q(2))).unwrap();
        assert_eq!(f.degree(), 8);
        let g = parse("(x^2+y^2-z^2)*(x^2+4*y^2-4*z^2)*(x^2+y^2-4*z^2)*(4*x^2+y^2-4*z^2)").unwrap();
        assert_eq!(f, g);
        let half = Rational::new(1.into(), 2.into());
        let f = lookup("t_family").unwrap().expand(Some(&-half)).unwrap();
        let g = parse("(x^2+y^2-2*x*z)*(x^2+y^2+2*x*z)*(x^2+3*y^2-9/2*z^2)*(x^2+3*y^2-4*z^2)").unwrap();
        assert_eq!(f, g);
    }

    #[test]
    fn parameter_errors() {
        let e = lookup("three_conics_pencil").unwrap();
        for v in [0, 1, -1] {
            assert!(matches!(specialize(&e, &q(v)), Err(CatalogError::ExcludedParameter { .. })));
        }
        assert!(matches!(e.expand(None), Err(CatalogError::ParameterRequired(_))));
        let z = lookup("ziegler_C1").unwrap();
        assert!(matches!(z.expand(Some(&q(2))), Err(CatalogError::UnexpectedParameter(_))));
        assert!(matches!(lookup("nope"), Err(CatalogError::UnknownEntry(_))));
        let four = lookup("four_conics_12_tacnodes").unwrap();
        assert!(matches!(run_entry(&four, None, None), Err(CatalogError::EquationRequired(_))));
    }

    #[test]
    fn pencil_specializes() {
        let e = lookup("three_conics_pencil").unwrap();
        let f = specialize(&e, &q(2)).unwrap();
        assert_eq!(f.degree(), 6);
        let r = run_entry(&e, Some(&q(2)), None).unwrap();
        assert_eq!(r.verdict, RunVerdict::Pass, "{:?}", r.mismatches);
        assert_eq!(r.profile.checks.tau_census, Some(true));
    }

    #[test]
    fn audit_finds_non_reduced_members() {
        let e = lookup("megyesi_family").unwrap();
        let bad = audit_parameter(&e, &q(-1)).unwrap_err();
        assert!(matches!(bad, CatalogError::DegenerateParameter { found_tau: None, .. }));
    }

    #[test]
    fn curve_refs() {
        let c = CurveRef::parse("three_conics_pencil@3/2").unwrap();
        assert_eq!(c.label(), "three_conics_pencil@3/2");
        assert!(CurveRef::parse("@2").is_err());
        assert!(matches!(CurveRef::parse("ziegler_C1@x"), Err(CatalogError::BadParameter(_))));
        let a = CurveRef::parse("three_conics_pencil@2").unwrap();
        let b = CurveRef::parse("ziegler_C1").unwrap();
        assert_eq!(ziegler_compare(&a, &b), Err(CatalogError::DegreeMismatch { left: 6, right: 8 }));
    }

    #[test]
    fn small_rationals_order() {
        let v = small_rationals(2, 2);
        let s: Vec<String> = v.iter().map(|x| x.to_string()).collect();
        assert_eq!(s, ["-1", "0", "1", "-2", "-1/2", "1/2", "2"]);
    }
}
