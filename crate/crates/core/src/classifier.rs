//! Combinatorial screening of censuses that could belong to plus-one
//! generated conic arrangements.
//!
//! A census survives [`pog_filter`] when it passes the intersection count,
//! the Hirzebruch-type inequality (where it applies) and admits at least one
//! triple `(d1, d2, h)` with `1 + 2k t + C(h) t^2 = (1 + d1 t)(1 + d2 t)` and
//! `d1` above the Arnold-exponent bound.

use rayon::prelude::*;
use serde::Serialize;

use crate::catalog;
use crate::combinatorics::{
    admissible_h_range, bezout_sides, hirzebruch_check, exponent_sum, poincare_split, CombinatoricsError,
    HirzebruchStatus, PoincareSplit, WeakCombinatorics,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum VerdictStatus {
    ExcludedBezout,
    ExcludedHirzebruch,
    ExcludedNoSplit,
    ExcludedD1Bound,
    Candidate,
}

/// Admissible exponent triple `(d1, d2, h)`, `h` playing the role of `d3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub d1: i64,
    pub d2: i64,
    pub h: i64,
}

/// The numbers behind an exclusion.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "test", rename_all = "snake_case")]
pub enum Exclusion {
    Bezout {
        lhs: i64,
        rhs: i64,
    },
    Hirzebruch {
        lhs: String,
        rhs: String,
    },
    NoSplit {
        h_range: (i64, i64),
    },
    /// Every split was rejected by the degree bounds in force.
    DegreeBound {
        d1_min: i64,
        rejected: Vec<Witness>,
        rule: String,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CandidateVerdict {
    pub census: String,
    #[serde(skip)]
    pub wc: WeakCombinatorics,
    pub status: VerdictStatus,
    pub witnesses: Vec<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exclusion: Option<Exclusion>,
}

impl CandidateVerdict {
    fn excluded(wc: &WeakCombinatorics, status: VerdictStatus, why: Exclusion) -> Self {
        CandidateVerdict { census: wc.to_string(), wc: wc.clone(), status, witnesses: vec![], exclusion: Some(why) }
    }

    pub fn is_candidate(&self) -> bool {
        self.status == VerdictStatus::Candidate
    }
}

/// `h` range and the lower bound for `d1`; falls back to `[1, d-1]` when the
/// Arnold-exponent bound does not apply.
fn h_window(wc: &WeakCombinatorics) -> (i64, i64) {
    let d = wc.degree();
    match admissible_h_range(wc) {
        Ok(r) => (*r.start(), *r.end()),
        Err(_) => (1, d - 1),
    }
}

/// Extra per-witness constraint with a description for the report.
type WitnessRule<'a> = (&'a dyn Fn(&Witness) -> bool, &'a str);

/// Runs the combinatorial tests in order and reports the first exclusion,
/// or the surviving witnesses. `extra` may reject individual witnesses.
fn filter_with(wc: &WeakCombinatorics, extra: Option<WitnessRule<'_>>) -> Result<CandidateVerdict, CombinatoricsError> {
    let (lhs, rhs) = bezout_sides(wc)?;
    if lhs != rhs {
        return Ok(CandidateVerdict::excluded(wc, VerdictStatus::ExcludedBezout, Exclusion::Bezout { lhs, rhs }));
    }
    let hz = hirzebruch_check(wc);
    if hz.status == HirzebruchStatus::Violated {
        let (l, r) = (hz.lhs.expect("applicable"), hz.rhs.expect("applicable"));
        return Ok(CandidateVerdict::excluded(
            wc,
            VerdictStatus::ExcludedHirzebruch,
            Exclusion::Hirzebruch { lhs: l.to_string(), rhs: r.to_string() },
        ));
    }
    let (low, high) = h_window(wc);
    let mut splits = Vec::new();
    for h in low.max(1)..=high {
        if let PoincareSplit::Split { d1, d2 } = poincare_split(wc, h)? {
            splits.push(Witness { d1, d2, h });
        }
    }
    if splits.is_empty() {
        return Ok(CandidateVerdict::excluded(
            wc,
            VerdictStatus::ExcludedNoSplit,
            Exclusion::NoSplit { h_range: (low, high) },
        ));
    }
    let mut rule = format!("d1 >= {low}");
    let keep = |w: &Witness| w.d1 >= low && extra.as_ref().is_none_or(|(f, _)| f(w));
    if let Some((_, text)) = &extra {
        rule = format!("{rule}; {text}");
    }
    let (witnesses, rejected): (Vec<Witness>, Vec<Witness>) = splits.into_iter().partition(keep);
    if witnesses.is_empty() {
        return Ok(CandidateVerdict::excluded(
            wc,
            VerdictStatus::ExcludedD1Bound,
            Exclusion::DegreeBound { d1_min: low, rejected, rule },
        ));
    }
    Ok(CandidateVerdict {
        census: wc.to_string(),
        wc: wc.clone(),
        status: VerdictStatus::Candidate,
        witnesses,
        exclusion: None,
    })
}

/// Combinatorial screen for a pure conic census.
pub fn pog_filter(wc: &WeakCombinatorics) -> Result<CandidateVerdict, CombinatoricsError> {
    filter_with(wc, None)
}

/// All censuses `(k; n2, t3)` with `n2 + 2 t3 = 2k(k-1)`, in ascending `t3`,
/// screened with the extra plus-one generated constraints `d1 <= k` and
/// `d2 < h`.
pub fn enumerate_nodal_tacnodal(k: u32) -> Vec<CandidateVerdict> {
    let kk = k as u64;
    let pairs = kk * kk.saturating_sub(1);
    let pog = |w: &Witness| w.d1 <= k as i64 && w.d2 < w.h;
    let rule = format!("d1 <= {k}; d2 < h");
    (0..=pairs)
        .into_par_iter()
        .map(|t3| {
            let wc = WeakCombinatorics::conics(k).with_nodes(2 * pairs - 2 * t3).with_t3(t3);
            filter_with(&wc, Some((&pog, &rule))).expect("pure conic census")
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MinimalPogCriterion {
    pub k: i64,
    pub t3: i64,
    pub discriminant: i64,
    pub n2: i64,
    /// `Some(0)` or `Some(2)` when the census can be minimal plus-one
    /// generated, `None` when it cannot.
    pub n2_forced: Option<i64>,
}

/// `Delta = -4k^2 + 4k + 4 t3 + 5` together with `n2 = 2k(k-1) - 2 t3`.
/// A minimal plus-one generated nodal-tacnodal arrangement needs
/// `Delta >= 0`, which leaves only `n2 in {0, 2}`.
pub fn minimal_pog_nodal_criterion(k: i64, t3: i64) -> MinimalPogCriterion {
    let discriminant = -4 * k * k + 4 * k + 4 * t3 + 5;
    let n2 = 2 * k * (k - 1) - 2 * t3;
    let n2_forced = (discriminant >= 0 && (n2 == 0 || n2 == 2)).then_some(n2);
    MinimalPogCriterion { k, t3, discriminant, n2, n2_forced }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LabelledCandidate {
    pub census: String,
    pub witness: Witness,
    pub label: String,
    pub source: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KRow {
    pub k: u32,
    pub candidates: Vec<CandidateVerdict>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub rows: Vec<KRow>,
    /// Candidates with a known plus-one generated realization.
    pub realized: Vec<LabelledCandidate>,
    /// Candidates whose known realizations have more generators.
    pub higher_syzygy: Vec<LabelledCandidate>,
    /// Candidates with no entry in the realization table.
    pub unlabelled: Vec<String>,
    pub k5_empty: bool,
}

/// Runs the enumeration for `k = 2..=5` and splits the candidates using the
/// realization table in [`catalog::realizations`].
pub fn classification_report() -> ClassificationReport {
    let table = catalog::realizations();
    let mut rows = Vec::new();
    let mut realized = Vec::new();
    let mut higher = Vec::new();
    let mut unlabelled = Vec::new();
    for k in 2..=5 {
        let candidates: Vec<CandidateVerdict> =
            enumerate_nodal_tacnodal(k).into_iter().filter(CandidateVerdict::is_candidate).collect();
        for c in &candidates {
            match table.iter().find(|r| r.census == c.wc) {
                Some(r) => {
                    let item = LabelledCandidate {
                        census: c.census.clone(),
                        witness: c.witnesses[0],
                        label: r.label.to_string(),
                        source: r.source.to_string(),
                    };
                    if r.plus_one_generated {
                        realized.push(item);
                    } else {
                        higher.push(item);
                    }
                }
                None => unlabelled.push(c.census.clone()),
            }
        }
        rows.push(KRow { k, candidates });
    }
    let k5_empty = rows.iter().find(|r| r.k == 5).is_some_and(|r| r.candidates.is_empty());
    ClassificationReport { rows, realized, higher_syzygy: higher, unlabelled, k5_empty }
}

/// `d1 d2 + h` equals the right-hand side of the exponent identity for
/// every witness.
pub fn witness_identity_holds(v: &CandidateVerdict) -> bool {
    match exponent_sum(&v.wc) {
        Ok(rhs) => v.witnesses.iter().all(|w| w.d1 * w.d2 + w.h == rhs),
        Err(_) => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::bezout_check;

    fn wc(s: &str) -> WeakCombinatorics {
        s.parse().unwrap()
    }

    fn candidates(k: u32) -> Vec<(String, Vec<Witness>)> {
        enumerate_nodal_tacnodal(k).into_iter().filter(|v| v.is_candidate()).map(|v| (v.census, v.witnesses)).collect()
    }

    #[test]
    fn filter_examples() {
        assert_eq!(pog_filter(&wc("k=5; t3=17, n3=2")).unwrap().status, VerdictStatus::ExcludedHirzebruch);
        let v = pog_filter(&wc("k=4; t3=12")).unwrap();
        assert_eq!(v.status, VerdictStatus::Candidate);
        assert_eq!(v.witnesses, vec![Witness { d1: 4, d2: 4, h: 4 }]);
        let v = pog_filter(&wc("k=5; t3=17, n2=3, n3=1")).unwrap();
        assert_eq!(v.status, VerdictStatus::Candidate);
        assert_eq!(v.witnesses, vec![Witness { d1: 5, d2: 5, h: 7 }]);
        assert_eq!(pog_filter(&wc("k=2; n2=1, t3=1")).unwrap().status, VerdictStatus::ExcludedBezout);
        assert!(pog_filter(&wc("k=3; lines=1")).is_err());
    }

    #[test]
    fn enumeration_by_k() {
        let w = |d1, d2, h| Witness { d1, d2, h };
        assert_eq!(candidates(2), vec![("k=2; n2=2, t3=1".to_string(), vec![w(2, 2, 3)])]);
        assert_eq!(
            candidates(3),
            vec![("k=3; n2=4, t3=4".to_string(), vec![w(3, 3, 5)]), ("k=3; n2=2, t3=5".to_string(), vec![w(3, 3, 4)]),]
        );
        assert_eq!(
            candidates(4),
            vec![
                ("k=4; n2=6, t3=9".to_string(), vec![w(4, 4, 7)]),
                ("k=4; n2=4, t3=10".to_string(), vec![w(4, 4, 6)]),
                ("k=4; n2=2, t3=11".to_string(), vec![w(4, 4, 5)]),
            ]
        );
        assert!(candidates(5).is_empty());
    }

    #[test]
    fn enumeration_invariants() {
        for k in 2..=7u32 {
            for v in enumerate_nodal_tacnodal(k) {
                let kk = k as i64;
                assert_eq!(v.wc.n(2) + 2 * v.wc.t3 as i64, 2 * kk * (kk - 1));
                if v.is_candidate() {
                    assert_eq!(bezout_check(&v.wc), Ok(true));
                    assert!(witness_identity_holds(&v));
                    for w in &v.witnesses {
                        assert_eq!(w.d1 + w.d2, 2 * kk);
                        assert!(w.d1 <= w.d2 && w.h > 0);
                    }
                }
                if k >= 5 {
                    assert!(!v.is_candidate());
                }
            }
        }
    }

    #[test]
    fn minimal_pog_examples() {
        let c = minimal_pog_nodal_criterion(3, 5);
        assert_eq!((c.discriminant, c.n2_forced), (1, Some(2)));
        let c = minimal_pog_nodal_criterion(4, 12);
        assert_eq!((c.discriminant, c.n2_forced), (5, Some(0)));
        let c = minimal_pog_nodal_criterion(5, 10);
        assert_eq!((c.n2, c.n2_forced), (20, None));
        assert!(c.discriminant < 0);
        for k in 2..12 {
            for t3 in 0..=k * (k - 1) {
                let c = minimal_pog_nodal_criterion(k, t3);
                assert!(matches!(c.n2_forced, None | Some(0) | Some(2)));
            }
        }
    }
}
