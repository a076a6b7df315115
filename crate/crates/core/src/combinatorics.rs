//! Singularity censuses of conic arrangements and the numerical tests on them.
//!
//! A census records the number of smooth conics `k`, optional lines, and the
//! counts of admissible singularities: ordinary `r`-fold points, `A_3`, `A_5`,
//! `A_7` and `J_{2,0}`. All arithmetic is exact (`i64` and `Ratio<i64>`).

use std::collections::BTreeMap;
use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use num_integer::Roots;
use num_rational::Ratio;
use serde::{Deserialize, Serialize};

pub type Q = Ratio<i64>;

fn q(n: i64, d: i64) -> Q {
    Ratio::new(n, d)
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CombinatoricsError {
    #[error("census has no singular points")]
    NoSingularities,
    #[error("degree bound needs ADE singularities only; census contains {0}")]
    BoundInapplicable(String),
    #[error("unsupported singularity type {0}")]
    UnsupportedType(String),
    #[error("identity is stated for pure conic arrangements; census has {0} lines")]
    ConicOnly(u32),
    #[error("curve degree {0} is below 7")]
    DegreeTooSmall(i64),
}

/// Singularity types that may occur in a census.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Singularity {
    /// Ordinary point of multiplicity `r >= 2`.
    Ordinary(u32),
    A3,
    A5,
    A7,
    J20,
}

impl Singularity {
    /// Milnor number.
    pub fn milnor(self) -> i64 {
        match self {
            Singularity::Ordinary(r) => (r as i64 - 1).pow(2),
            Singularity::A3 => 3,
            Singularity::A5 => 5,
            Singularity::A7 => 7,
            Singularity::J20 => 10,
        }
    }

    /// Log canonical threshold. `A_5`, `A_7` and `J_{2,0}` use `1/a + 1/b` for
    /// the quasi-homogeneous normal forms `x^2 + y^6`, `x^2 + y^8`, `x^3 + y^6`.
    pub fn lct(self) -> Q {
        match self {
            Singularity::Ordinary(r) => q(2, r as i64),
            Singularity::A3 => q(3, 4),
            Singularity::A5 => q(2, 3),
            Singularity::A7 => q(5, 8),
            Singularity::J20 => q(1, 2),
        }
    }

    /// Order of the group attached to an ADE point; `None` for the rest.
    pub fn gamma_order(self) -> Option<i64> {
        match self {
            Singularity::Ordinary(2) => Some(4),
            Singularity::Ordinary(3) => Some(16),
            Singularity::A3 => Some(8),
            Singularity::A5 => Some(12),
            Singularity::A7 => Some(16),
            _ => None,
        }
    }

    /// ADE in the sense used by the `d_1` lower bound: nodes, ordinary triple
    /// points and the `A_k` points.
    pub fn is_ade(self) -> bool {
        self.gamma_order().is_some()
    }

    /// Simple elliptic: ordinary quadruple points and `J_{2,0}`.
    pub fn is_simple_elliptic(self) -> bool {
        matches!(self, Singularity::Ordinary(4) | Singularity::J20)
    }
}

impl fmt::Display for Singularity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Singularity::Ordinary(r) => write!(f, "ordinary {r}-fold point"),
            Singularity::A3 => write!(f, "A3"),
            Singularity::A5 => write!(f, "A5"),
            Singularity::A7 => write!(f, "A7"),
            Singularity::J20 => write!(f, "J(2,0)"),
        }
    }
}

/// Census `(k; n_r, t_3, t_5, t_7, j)` of an arrangement of smooth conics,
/// optionally with lines.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeakCombinatorics {
    pub k: u32,
    #[serde(default)]
    pub lines: u32,
    /// `r -> n_r`, zero counts omitted.
    #[serde(default)]
    pub ordinary: BTreeMap<u32, u64>,
    #[serde(default)]
    pub t3: u64,
    #[serde(default)]
    pub t5: u64,
    #[serde(default)]
    pub t7: u64,
    #[serde(default)]
    pub j: u64,
}

impl WeakCombinatorics {
    pub fn conics(k: u32) -> Self {
        WeakCombinatorics { k, ..Default::default() }
    }

    pub fn with_ordinary(mut self, r: u32, count: u64) -> Self {
        if count == 0 {
            self.ordinary.remove(&r);
        } else {
            self.ordinary.insert(r, count);
        }
        self
    }

    pub fn with_nodes(self, n2: u64) -> Self {
        self.with_ordinary(2, n2)
    }

    pub fn with_t3(mut self, t3: u64) -> Self {
        self.t3 = t3;
        self
    }

    pub fn n(&self, r: u32) -> i64 {
        self.ordinary.get(&r).copied().unwrap_or(0) as i64
    }

    /// Curve degree `2k + lines`.
    pub fn degree(&self) -> i64 {
        2 * self.k as i64 + self.lines as i64
    }

    /// `(type, count)` for every type with positive count.
    pub fn singularities(&self) -> Vec<(Singularity, i64)> {
        let mut out: Vec<(Singularity, i64)> =
            self.ordinary.iter().filter(|(_, &c)| c > 0).map(|(&r, &c)| (Singularity::Ordinary(r), c as i64)).collect();
        for (s, c) in [
            (Singularity::A3, self.t3),
            (Singularity::A5, self.t5),
            (Singularity::A7, self.t7),
            (Singularity::J20, self.j),
        ] {
            if c > 0 {
                out.push((s, c as i64));
            }
        }
        out
    }

    fn require_conics(&self) -> Result<(), CombinatoricsError> {
        if self.lines > 0 {
            Err(CombinatoricsError::ConicOnly(self.lines))
        } else {
            Ok(())
        }
    }

    /// Sum of two censuses, count by count.
    pub fn merge(&self, other: &WeakCombinatorics) -> WeakCombinatorics {
        let mut out = self.clone();
        out.k += other.k;
        out.lines += other.lines;
        for (&r, &c) in &other.ordinary {
            *out.ordinary.entry(r).or_insert(0) += c;
        }
        out.t3 += other.t3;
        out.t5 += other.t5;
        out.t7 += other.t7;
        out.j += other.j;
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CensusParseError {
    #[error("unknown census key {0:?}")]
    UnknownKey(String),
    #[error("bad value for {key}: {value:?}")]
    BadValue { key: String, value: String },
    #[error("census key {0} given twice")]
    Duplicate(String),
    #[error("malformed census entry {0:?}")]
    Malformed(String),
    #[error("census must give k")]
    MissingK,
}

impl FromStr for WeakCombinatorics {
    type Err = CensusParseError;

    /// Parses `"k=4; n2=2, t3=11"`. Entries are separated by `;` or `,`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut wc = WeakCombinatorics::default();
        let mut seen: Vec<String> = Vec::new();
        for item in compact.split([';', ',']).filter(|i| !i.is_empty()) {
            let (key, value) = item.split_once('=').ok_or_else(|| CensusParseError::Malformed(item.to_string()))?;
            if seen.iter().any(|k| k == key) {
                return Err(CensusParseError::Duplicate(key.to_string()));
            }
            seen.push(key.to_string());
            let bad = || CensusParseError::BadValue { key: key.to_string(), value: value.to_string() };
            let v: u64 = value.parse().map_err(|_| bad())?;
            match key {
                "k" => wc.k = u32::try_from(v).map_err(|_| bad())?,
                "lines" => wc.lines = u32::try_from(v).map_err(|_| bad())?,
                "t3" => wc.t3 = v,
                "t5" => wc.t5 = v,
                "t7" => wc.t7 = v,
                "j" => wc.j = v,
                _ => {
                    let r = key
                        .strip_prefix('n')
                        .and_then(|r| r.parse::<u32>().ok())
                        .filter(|&r| r >= 2)
                        .ok_or_else(|| CensusParseError::UnknownKey(key.to_string()))?;
                    wc = wc.with_ordinary(r, v);
                }
            }
        }
        if !seen.iter().any(|k| k == "k") {
            return Err(CensusParseError::MissingK);
        }
        Ok(wc)
    }
}

impl fmt::Display for WeakCombinatorics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "k={}", self.k)?;
        let mut parts = Vec::new();
        if self.lines > 0 {
            parts.push(format!("lines={}", self.lines));
        }
        for (r, c) in &self.ordinary {
            parts.push(format!("n{r}={c}"));
        }
        for (name, c) in [("t3", self.t3), ("t5", self.t5), ("t7", self.t7), ("j", self.j)] {
            if c > 0 {
                parts.push(format!("{name}={c}"));
            }
        }
        if !parts.is_empty() {
            write!(f, "; {}", parts.join(", "))?;
        }
        Ok(())
    }
}

/// Sum of Milnor numbers over the census.
pub fn total_tjurina(wc: &WeakCombinatorics) -> i64 {
    wc.singularities().iter().map(|(s, c)| s.milnor() * c).sum()
}

/// Both sides of `2(k^2 - k) = sum C(r,2) n_r + 2 t3 + 3 t5 + 4 t7 + 6 j`.
pub fn bezout_sides(wc: &WeakCombinatorics) -> Result<(i64, i64), CombinatoricsError> {
    wc.require_conics()?;
    let k = wc.k as i64;
    let lhs = 2 * (k * k - k);
    let rhs = wc.ordinary.iter().map(|(&r, &c)| (r as i64) * (r as i64 - 1) / 2 * c as i64).sum::<i64>()
        + 2 * wc.t3 as i64
        + 3 * wc.t5 as i64
        + 4 * wc.t7 as i64
        + 6 * wc.j as i64;
    Ok((lhs, rhs))
}

/// Pairwise intersection count of the conics matches the census.
pub fn bezout_check(wc: &WeakCombinatorics) -> Result<bool, CombinatoricsError> {
    let (l, r) = bezout_sides(wc)?;
    Ok(l == r)
}

/// Minimum log canonical threshold over the singularities present.
pub fn arnold_exponent(wc: &WeakCombinatorics) -> Result<Q, CombinatoricsError> {
    wc.singularities().iter().map(|(s, _)| s.lct()).min().ok_or(CombinatoricsError::NoSingularities)
}

/// `[ceil(alpha d - 2), d - 1]`, valid for ADE censuses only.
pub fn admissible_h_range(wc: &WeakCombinatorics) -> Result<RangeInclusive<i64>, CombinatoricsError> {
    if let Some((s, _)) = wc.singularities().into_iter().find(|(s, _)| !s.is_ade()) {
        return Err(CombinatoricsError::BoundInapplicable(s.to_string()));
    }
    let alpha = arnold_exponent(wc)?;
    let d = wc.degree();
    let low = (alpha * d - 2).ceil().to_integer();
    Ok(low..=d - 1)
}

/// `sum (r-1) n_r + t3 + t5 + t7 + 2j + 2k`.
pub fn exponent_sum(wc: &WeakCombinatorics) -> Result<i64, CombinatoricsError> {
    wc.require_conics()?;
    Ok(wc.ordinary.iter().map(|(&r, &c)| (r as i64 - 1) * c as i64).sum::<i64>()
        + (wc.t3 + wc.t5 + wc.t7) as i64
        + 2 * wc.j as i64
        + 2 * wc.k as i64)
}

/// `1 + 2k t + (exponent_sum - h) t^2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PoincarePolynomial {
    pub h: i64,
    pub linear: i64,
    pub quadratic: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PoincareSplit {
    Split { d1: i64, d2: i64 },
    NoRationalSplit,
}

impl PoincarePolynomial {
    pub fn new(wc: &WeakCombinatorics, h: i64) -> Result<Self, CombinatoricsError> {
        Ok(PoincarePolynomial { h, linear: 2 * wc.k as i64, quadratic: exponent_sum(wc)? - h })
    }

    pub fn discriminant(&self) -> i64 {
        self.linear * self.linear - 4 * self.quadratic
    }

    /// `(1 + d1 t)(1 + d2 t)` with positive integers `d1 <= d2`, if any.
    pub fn split(&self) -> PoincareSplit {
        let disc = self.discriminant();
        if disc < 0 {
            return PoincareSplit::NoRationalSplit;
        }
        let s = disc.sqrt();
        if s * s != disc || (self.linear - s) % 2 != 0 {
            return PoincareSplit::NoRationalSplit;
        }
        let d1 = (self.linear - s) / 2;
        let d2 = (self.linear + s) / 2;
        if d1 < 1 {
            return PoincareSplit::NoRationalSplit;
        }
        PoincareSplit::Split { d1, d2 }
    }
}

pub fn poincare_split(wc: &WeakCombinatorics, h: i64) -> Result<PoincareSplit, CombinatoricsError> {
    Ok(PoincarePolynomial::new(wc, h)?.split())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum HirzebruchStatus {
    Satisfied,
    Violated,
    Inapplicable,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HirzebruchReport {
    pub status: HirzebruchStatus,
    /// `8k + n2 + 3/4 n3`, as `"num/den"` in JSON.
    #[serde(serialize_with = "ser_opt_q")]
    pub lhs: Option<Q>,
    /// `5/2 t3 + 5 t5 + 29/4 t7 + 6j`.
    #[serde(serialize_with = "ser_opt_q")]
    pub rhs: Option<Q>,
}

fn ser_opt_q<S: serde::Serializer>(v: &Option<Q>, s: S) -> Result<S::Ok, S::Error> {
    match v {
        Some(q) => s.serialize_str(&q.to_string()),
        None => s.serialize_none(),
    }
}

/// `8k + n2 + 3/4 n3 >= 5/2 t3 + 5 t5 + 29/4 t7 + 6j` for `k >= 4` conics
/// with ordinary points of multiplicity at most 4. Quadruple points enter only
/// through the hypotheses, not the inequality.
pub fn hirzebruch_check(wc: &WeakCombinatorics) -> HirzebruchReport {
    let inapplicable = HirzebruchReport { status: HirzebruchStatus::Inapplicable, lhs: None, rhs: None };
    if wc.k < 4 || wc.lines > 0 || wc.ordinary.iter().any(|(&r, &c)| r >= 5 && c > 0) {
        return inapplicable;
    }
    let lhs = Q::from(8 * wc.k as i64) + Q::from(wc.n(2)) + q(3, 4) * wc.n(3);
    let rhs = q(5, 2) * wc.t3 as i64 + Q::from(5 * wc.t5 as i64) + q(29, 4) * wc.t7 as i64 + Q::from(6 * wc.j as i64);
    let status = if lhs >= rhs { HirzebruchStatus::Satisfied } else { HirzebruchStatus::Violated };
    HirzebruchReport { status, lhs: Some(lhs), rhs: Some(rhs) }
}

/// Integer form `32k + 4 n2 + 3 n3 >= 10 t3 + 20 t5 + 29 t7 + 24 j`.
pub fn hirzebruch_integer_form(wc: &WeakCombinatorics) -> bool {
    32 * wc.k as i64 + 4 * wc.n(2) + 3 * wc.n(3)
        >= 10 * wc.t3 as i64 + 20 * wc.t5 as i64 + 29 * wc.t7 as i64 + 24 * wc.j as i64
}

/// Sides of the orbifold inequality
/// `sum_ADE (mu + 1 - 2/|Gamma|) + sum_SE (mu + 1) <= 5/6 d^2 - d`.
pub fn kobayashi_lhs_rhs(wc: &WeakCombinatorics, d: i64) -> Result<(Q, Q), CombinatoricsError> {
    if d < 7 {
        return Err(CombinatoricsError::DegreeTooSmall(d));
    }
    let mut lhs = Q::from(0);
    for (s, c) in wc.singularities() {
        let term = if let Some(g) = s.gamma_order() {
            Q::from(s.milnor() + 1) - q(2, g)
        } else if s.is_simple_elliptic() {
            Q::from(s.milnor() + 1)
        } else {
            return Err(CombinatoricsError::UnsupportedType(s.to_string()));
        };
        lhs += term * c;
    }
    let rhs = q(5, 6) * (d * d) - d;
    Ok((lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wc(s: &str) -> WeakCombinatorics {
        s.parse().unwrap()
    }

    #[test]
    fn census_syntax() {
        let a = wc("k=4; n2=2, t3=11");
        assert_eq!(a, WeakCombinatorics::conics(4).with_nodes(2).with_t3(11));
        assert_eq!(wc(" k = 4 ;t3=12 "), WeakCombinatorics::conics(4).with_t3(12));
        assert_eq!(a.to_string(), "k=4; n2=2, t3=11");
        assert_eq!(wc(&a.to_string()), a);
        assert_eq!("k=4; q=1".parse::<WeakCombinatorics>(), Err(CensusParseError::UnknownKey("q".into())));
        assert_eq!("k=4; n1=1".parse::<WeakCombinatorics>(), Err(CensusParseError::UnknownKey("n1".into())));
        assert_eq!("t3=1".parse::<WeakCombinatorics>(), Err(CensusParseError::MissingK));
        assert!(matches!("k=x".parse::<WeakCombinatorics>(), Err(CensusParseError::BadValue { .. })));
        assert!(matches!("k=1;k=2".parse::<WeakCombinatorics>(), Err(CensusParseError::Duplicate(_))));
        assert_eq!(wc("k=3; lines=2; n5=1").n(5), 1);
    }

    #[test]
    fn tjurina_totals() {
        assert_eq!(total_tjurina(&wc("k=4; n2=2, t3=11")), 35);
        assert_eq!(total_tjurina(&wc("k=3; n2=4, t3=4")), 16);
        assert_eq!(total_tjurina(&wc("k=2")), 0);
        assert_eq!(total_tjurina(&wc("k=1; n4=1, j=1, t5=1, t7=1")), 9 + 10 + 5 + 7);
    }

    #[test]
    fn bezout() {
        assert_eq!(bezout_check(&wc("k=4; t3=12")), Ok(true));
        assert_eq!(bezout_check(&wc("k=3; n2=4, t3=4")), Ok(true));
        assert_eq!(bezout_check(&wc("k=2; n2=1, t3=1")), Ok(false));
        assert_eq!(bezout_check(&wc("k=3; lines=1")), Err(CombinatoricsError::ConicOnly(1)));
    }

    #[test]
    fn arnold() {
        assert_eq!(arnold_exponent(&wc("k=4; t3=12")), Ok(q(3, 4)));
        assert_eq!(arnold_exponent(&wc("k=5; t3=17, n3=2")), Ok(q(2, 3)));
        assert_eq!(arnold_exponent(&wc("k=5; n2=7")), Ok(Q::from(1)));
        assert_eq!(arnold_exponent(&wc("k=5")), Err(CombinatoricsError::NoSingularities));
    }

    #[test]
    fn h_ranges() {
        assert_eq!(admissible_h_range(&wc("k=4; t3=12")), Ok(4..=7));
        assert_eq!(admissible_h_range(&wc("k=5; t3=17, n3=2")), Ok(5..=9));
        assert_eq!(admissible_h_range(&wc("k=2; n2=2, t3=1")), Ok(1..=3));
        assert!(matches!(admissible_h_range(&wc("k=4; n4=1")), Err(CombinatoricsError::BoundInapplicable(_))));
        assert!(matches!(admissible_h_range(&wc("k=4; j=1")), Err(CombinatoricsError::BoundInapplicable(_))));
    }

    #[test]
    fn splits() {
        let c = wc("k=4; t3=12");
        assert_eq!(poincare_split(&c, 4), Ok(PoincareSplit::Split { d1: 4, d2: 4 }));
        assert_eq!(poincare_split(&c, 5), Ok(PoincareSplit::Split { d1: 3, d2: 5 }));
        assert_eq!(poincare_split(&c, 6), Ok(PoincareSplit::NoRationalSplit));
        assert_eq!(poincare_split(&c, 7), Ok(PoincareSplit::NoRationalSplit));
        let p = PoincarePolynomial::new(&c, 4).unwrap();
        assert_eq!((p.linear, p.quadratic), (8, 16));
    }

    #[test]
    fn exponent_sum_values() {
        assert_eq!(exponent_sum(&wc("k=3; n2=4, t3=4")), Ok(14));
        assert_eq!(exponent_sum(&wc("k=2; n2=2, t3=1")), Ok(7));
        assert_eq!(exponent_sum(&wc("k=2")), Ok(4));
    }

    #[test]
    fn hirzebruch() {
        let r = hirzebruch_check(&wc("k=5; t3=17, n3=2"));
        assert_eq!(r.status, HirzebruchStatus::Violated);
        assert_eq!((r.lhs, r.rhs), (Some(q(83, 2)), Some(q(85, 2))));
        let r = hirzebruch_check(&wc("k=4; n2=4, t3=10"));
        assert_eq!(r.status, HirzebruchStatus::Satisfied);
        assert_eq!((r.lhs, r.rhs), (Some(Q::from(36)), Some(Q::from(25))));
        assert_eq!(hirzebruch_check(&wc("k=3; n2=4, t3=4")).status, HirzebruchStatus::Inapplicable);
        assert_eq!(hirzebruch_check(&wc("k=5; n5=1")).status, HirzebruchStatus::Inapplicable);
    }

    #[test]
    fn kobayashi() {
        let (l, r) = kobayashi_lhs_rhs(&wc("k=4; n2=1"), 7).unwrap();
        assert_eq!(l, q(3, 2));
        assert_eq!(r, q(245, 6) - 7);
        assert_eq!(kobayashi_lhs_rhs(&wc("k=4; j=1"), 7).unwrap().0, Q::from(11));
        assert_eq!(kobayashi_lhs_rhs(&wc("k=4"), 7).unwrap().0, Q::from(0));
        assert!(matches!(kobayashi_lhs_rhs(&wc("k=4; n5=1"), 8), Err(CombinatoricsError::UnsupportedType(_))));
        assert_eq!(kobayashi_lhs_rhs(&wc("k=2"), 4), Err(CombinatoricsError::DegreeTooSmall(4)));
    }
}
