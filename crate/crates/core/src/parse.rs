//! Text input for curve equations.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := coeff? ('*'? factor)*          (at least one coeff or factor)
//! factor := ('x'|'y'|'z') ('^' uint)? | '(' expr ')' ('^' uint)?
//! coeff  := int ('/' uint)?
//! ```
//!
//! Whitespace is ignored. The expansion must be homogeneous and nonzero.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::poly::{HomogeneousPolynomial, Monomial, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("expression is not homogeneous (degrees {0:?})")]
    NotHomogeneous(Vec<u32>),
    #[error("expression expands to the zero polynomial")]
    ZeroPolynomial,
}

/// Sparse polynomial of mixed degree used while expanding.
type Sparse = BTreeMap<Monomial, Rational>;

fn sparse_add(acc: &mut Sparse, other: Sparse, negate: bool) {
    for (m, c) in other {
        let c = if negate { -c } else { c };
        let slot = acc.entry(m).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            acc.remove(&m);
        }
    }
}

fn sparse_mul(a: &Sparse, b: &Sparse) -> Sparse {
    let mut out = Sparse::new();
    for (m1, c1) in a {
        for (m2, c2) in b {
            let m = m1.mul(m2);
            let slot = out.entry(m).or_insert_with(Rational::zero);
            *slot += c1 * c2;
            if slot.is_zero() {
                out.remove(&m);
            }
        }
    }
    out
}

fn sparse_pow(a: &Sparse, e: u32) -> Sparse {
    let mut acc = Sparse::new();
    acc.insert(Monomial::ONE, Rational::one());
    for _ in 0..e {
        acc = sparse_mul(&acc, a);
    }
    acc
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::Syntax { pos: self.pos, msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, ch: u8) -> bool {
        if self.peek() == Some(ch) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn uint(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected digits");
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(text.parse().expect("validated digits"))
    }

    fn exponent(&mut self) -> Result<u32, ParseError> {
        if !self.eat(b'^') {
            return Ok(1);
        }
        let e = self.uint()?;
        match u32::try_from(e) {
            Ok(e) if e <= 64 => Ok(e),
            _ => self.err("exponent too large"),
        }
    }

    fn expr(&mut self) -> Result<Sparse, ParseError> {
        let mut acc = Sparse::new();
        let mut negate = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        loop {
            let t = self.term()?;
            sparse_add(&mut acc, t, negate);
            if self.eat(b'+') {
                negate = false;
            } else if self.eat(b'-') {
                negate = true;
            } else {
                break;
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Sparse, ParseError> {
        let mut acc = Sparse::new();
        let mut seen = false;
        if matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            let num = self.uint()?;
            let den = if self.eat(b'/') { self.uint()? } else { BigInt::one() };
            if den.is_zero() {
                return self.err("zero denominator");
            }
            acc.insert(Monomial::ONE, Rational::new(num, den));
            seen = true;
        } else {
            acc.insert(Monomial::ONE, Rational::one());
        }
        loop {
            let save = self.pos;
            let star = self.eat(b'*');
            match self.peek() {
                Some(b'x' | b'y' | b'z' | b'(') => {
                    let f = self.factor()?;
                    acc = sparse_mul(&acc, &f);
                    seen = true;
                }
                _ => {
                    if star {
                        return self.err("expected a factor after '*'");
                    }
                    self.pos = save;
                    break;
                }
            }
        }
        if !seen {
            return self.err("expected a term");
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Sparse, ParseError> {
        let base = match self.peek() {
            Some(c @ (b'x' | b'y' | b'z')) => {
                self.pos += 1;
                let m = match c {
                    b'x' => Monomial::new(1, 0, 0),
                    b'y' => Monomial::new(0, 1, 0),
                    _ => Monomial::new(0, 0, 1),
                };
                let mut s = Sparse::new();
                s.insert(m, Rational::one());
                s
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return self.err("expected ')'");
                }
                inner
            }
            _ => return self.err("expected 'x', 'y', 'z' or '('"),
        };
        let e = self.exponent()?;
        Ok(if e == 1 { base } else { sparse_pow(&base, e) })
    }
}

/// Parses and expands a curve equation.
pub fn parse(text: &str) -> Result<HomogeneousPolynomial, ParseError> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    let sparse = p.expr()?;
    if p.peek().is_some() {
        return p.err("unexpected trailing input");
    }
    if sparse.is_empty() {
        return Err(ParseError::ZeroPolynomial);
    }
    let mut degrees: Vec<u32> = sparse.keys().map(Monomial::degree).collect();
    degrees.sort_unstable();
    degrees.dedup();
    if degrees.len() > 1 {
        return Err(ParseError::NotHomogeneous(degrees));
    }
    Ok(HomogeneousPolynomial::from_terms(degrees[0], sparse).expect("single degree"))
}
