//! Homogeneous polynomials in `x, y, z` with exact rational coefficients.
//!
//! Monomials are ordered graded-lexicographically with `x > y > z`. Inside a
//! fixed degree this is plain lex order on `(a, b)`, which gives the closed
//! form used by [`Monomial::index`].

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational number, always kept in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// One of the three projective coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Var {
    X,
    Y,
    Z,
}

impl Var {
    pub const ALL: [Var; 3] = [Var::X, Var::Y, Var::Z];

    fn slot(self) -> usize {
        match self {
            Var::X => 0,
            Var::Y => 1,
            Var::Z => 2,
        }
    }
}

/// `x^a y^b z^c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub exps: [u32; 3],
}

impl Monomial {
    pub const ONE: Monomial = Monomial { exps: [0, 0, 0] };

    pub fn new(a: u32, b: u32, c: u32) -> Self {
        Monomial { exps: [a, b, c] }
    }

    pub fn var(v: Var) -> Self {
        let mut exps = [0; 3];
        exps[v.slot()] = 1;
        Monomial { exps }
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn exp(&self, v: Var) -> u32 {
        self.exps[v.slot()]
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial { exps: [self.exps[0] + other.exps[0], self.exps[1] + other.exps[1], self.exps[2] + other.exps[2]] }
    }

    /// Position of this monomial inside `monomial_basis(self.degree())`.
    pub fn index(&self) -> usize {
        let d = self.degree() as usize;
        let a = self.exps[0] as usize;
        let b = self.exps[1] as usize;
        a * (d + 1) - a * a.saturating_sub(1) / 2 + b
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then(self.exps[0].cmp(&other.exps[0])).then(self.exps[1].cmp(&other.exps[1]))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Number of monomials of degree `d` in three variables.
pub fn basis_len(d: u32) -> usize {
    let d = d as usize;
    (d + 1) * (d + 2) / 2
}

/// All monomials of degree `d`, ascending in the global order.
pub fn monomial_basis(d: u32) -> Vec<Monomial> {
    let mut out = Vec::with_capacity(basis_len(d));
    for a in 0..=d {
        for b in 0..=(d - a) {
            out.push(Monomial::new(a, b, d - a - b));
        }
    }
    out
}

/// A form of fixed degree. The zero form still remembers its degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomogeneousPolynomial {
    degree: u32,
    terms: BTreeMap<Monomial, Rational>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("monomial {0:?} does not have degree {1}")]
    WrongDegree(Monomial, u32),
}

impl HomogeneousPolynomial {
    pub fn zero(degree: u32) -> Self {
        HomogeneousPolynomial { degree, terms: BTreeMap::new() }
    }

    pub fn monomial(m: Monomial, coeff: Rational) -> Self {
        let mut p = Self::zero(m.degree());
        if !coeff.is_zero() {
            p.terms.insert(m, coeff);
        }
        p
    }

    pub fn var(v: Var) -> Self {
        Self::monomial(Monomial::var(v), Rational::one())
    }

    /// Builds a form from `(monomial, coefficient)` pairs, summing repeats.
    pub fn from_terms<I>(degree: u32, terms: I) -> Result<Self, PolyError>
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut p = Self::zero(degree);
        for (m, c) in terms {
            if m.degree() != degree {
                return Err(PolyError::WrongDegree(m, degree));
            }
            p.add_term(m, c);
        }
        Ok(p)
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn partial(&self, v: Var) -> HomogeneousPolynomial {
        let mut out = Self::zero(self.degree.saturating_sub(1));
        let slot = v.slot();
        for (m, c) in &self.terms {
            let e = m.exps[slot];
            if e == 0 {
                continue;
            }
            let mut exps = m.exps;
            exps[slot] -= 1;
            out.add_term(Monomial { exps }, c * Rational::from_integer(BigInt::from(e)));
        }
        out
    }

    pub fn mul(&self, other: &HomogeneousPolynomial) -> HomogeneousPolynomial {
        let mut out = Self::zero(self.degree + other.degree);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    /// Sum of two forms of the same degree.
    pub fn add(&self, other: &HomogeneousPolynomial) -> Option<HomogeneousPolynomial> {
        if self.degree != other.degree {
            return None;
        }
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        Some(out)
    }

    pub fn scale(&self, s: &Rational) -> HomogeneousPolynomial {
        let mut out = Self::zero(self.degree);
        for (m, c) in &self.terms {
            out.add_term(*m, c * s);
        }
        out
    }

    pub fn pow(&self, e: u32) -> HomogeneousPolynomial {
        let mut acc = Self::monomial(Monomial::ONE, Rational::one());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Scalar multiple with coprime integer coefficients and a positive leading
    /// coefficient. The zero form maps to an empty vector.
    pub fn primitive_integer_coeffs(&self) -> Vec<(Monomial, BigInt)> {
        if self.terms.is_empty() {
            return Vec::new();
        }
        let lcm = self.terms.values().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let mut ints: Vec<(Monomial, BigInt)> =
            self.terms.iter().map(|(m, c)| (*m, (c * Rational::from_integer(lcm.clone())).to_integer())).collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, (_, c)| acc.gcd(c));
        let lead_negative = ints.last().map(|(_, c)| c.is_negative()).unwrap_or(false);
        for (_, c) in ints.iter_mut() {
            *c /= &g;
            if lead_negative {
                *c = -c.clone();
            }
        }
        ints
    }

    /// Dense integer coefficient vector in `monomial_basis(degree)` order, after
    /// passing to the primitive integer multiple.
    pub fn dense_integer(&self) -> Vec<BigInt> {
        let mut v = vec![BigInt::zero(); basis_len(self.degree)];
        for (m, c) in self.primitive_integer_coeffs() {
            v[m.index()] = c;
        }
        v
    }

    /// Dense rational coefficient vector in `monomial_basis(degree)` order.
    pub fn dense(&self) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); basis_len(self.degree)];
        for (m, c) in &self.terms {
            v[m.index()] = c.clone();
        }
        v
    }

    /// Replaces `x, y, z` by the given forms, all of which must share one degree.
    pub fn evaluate_forms(&self, forms: [&HomogeneousPolynomial; 3]) -> Option<HomogeneousPolynomial> {
        let k = forms[0].degree;
        if forms.iter().any(|f| f.degree != k) {
            return None;
        }
        let mut out = Self::zero(self.degree * k);
        for (m, c) in &self.terms {
            let term = forms[0].pow(m.exps[0]).mul(&forms[1].pow(m.exps[1])).mul(&forms[2].pow(m.exps[2])).scale(c);
            out = out.add(&term).expect("degrees agree");
        }
        Some(out)
    }
}

fn write_rational(f: &mut fmt::Formatter<'_>, c: &Rational) -> fmt::Result {
    if c.is_integer() {
        write!(f, "{}", c.numer())
    } else {
        write!(f, "{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for HomogeneousPolynomial {
    /// Canonical form: descending monomial order, explicit `*` and `^`, signs
    /// attached to every term but the first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let mag = c.abs();
            if c.is_negative() {
                write!(f, "-")?;
            } else if i > 0 {
                write!(f, "+")?;
            }
            let mut first = true;
            if !mag.is_one() || m.degree() == 0 {
                write_rational(f, &mag)?;
                first = false;
            }
            for (name, e) in ["x", "y", "z"].iter().zip(m.exps) {
                if e == 0 {
                    continue;
                }
                if !first {
                    write!(f, "*")?;
                }
                first = false;
                write!(f, "{name}")?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}
