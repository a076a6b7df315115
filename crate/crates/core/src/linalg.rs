//! Exact rank and nullspace over the rationals.
//!
//! Every rational matrix is first scaled row by row to an integer matrix and
//! then reduced by fraction-free elimination: a row update is
//! `row <- (p / g) * row - (a / g) * pivot_row` with `g = gcd(p, a)`, followed
//! by division of the row by its content. No rational arithmetic happens
//! inside the elimination loop. The pivot in each column is the candidate of
//! smallest bit length, ties going to the lowest row index, so the result is
//! a deterministic function of the input.
//!
//! [`modular`] holds the word-size rank over `GF(p)` used for screening.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::poly::Rational;

pub mod modular;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("vector of length {found} where {expected} was expected")]
    DimensionMismatch { expected: usize, found: usize },
}

/// Dense row-major matrix of rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix { rows, cols, entries: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_rows(cols: usize, rows: Vec<Vec<Rational>>) -> Result<Self, LinalgError> {
        let mut entries = Vec::with_capacity(rows.len() * cols);
        let n = rows.len();
        for r in rows {
            if r.len() != cols {
                return Err(LinalgError::DimensionMismatch { expected: cols, found: r.len() });
            }
            entries.extend(r);
        }
        Ok(RationalMatrix { rows: n, cols, entries })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let data = rows.iter().map(|r| r.iter().map(|&v| Rational::from_integer(BigInt::from(v))).collect()).collect();
        Self::from_rows(cols, data).expect("rectangular input")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> RationalMatrix {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>, LinalgError> {
        if v.len() != self.cols {
            return Err(LinalgError::DimensionMismatch { expected: self.cols, found: v.len() });
        }
        Ok((0..self.rows)
            .map(|r| self.row(r).iter().zip(v).fold(Rational::zero(), |acc, (a, b)| acc + a * b))
            .collect())
    }

    /// Rows scaled by the lcm of their denominators.
    pub fn integer_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|r| integer_row(self.row(r))).collect()
    }
}

/// Clears denominators of one rational row.
pub fn integer_row(row: &[Rational]) -> Vec<BigInt> {
    let l = row.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    row.iter().map(|q| q.numer() * (&l / q.denom())).collect()
}

/// Basis of a kernel together with its dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NullspaceBasis {
    pub dimension: usize,
    pub vectors: Vec<Vec<Rational>>,
}

fn bits(v: &BigInt) -> u64 {
    v.bits()
}

fn make_primitive(row: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for v in row.iter() {
        if !v.is_zero() {
            g = g.gcd(v);
            if g.is_one() {
                return;
            }
        }
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    for v in row.iter_mut() {
        if !v.is_zero() {
            *v /= &g;
        }
    }
}

/// `target <- (p/g) target - (a/g) pivot` where `p = pivot[col]`, `a = target[col]`.
fn eliminate(target: &mut [BigInt], pivot: &[BigInt], col: usize) {
    let a = target[col].clone();
    if a.is_zero() {
        return;
    }
    let p = &pivot[col];
    let g = a.gcd(p);
    let mp = p / &g;
    let ma = &a / &g;
    let scale = !mp.is_one();
    for (t, s) in target.iter_mut().zip(pivot.iter()) {
        if scale && !t.is_zero() {
            *t *= &mp;
        }
        if !s.is_zero() {
            *t -= &ma * s;
        }
    }
    debug_assert!(target[col].is_zero());
    make_primitive(target);
}

/// Result of fraction-free Gauss-Jordan elimination: each pivot row is
/// primitive, its pivot column is zero in every other pivot row.
#[derive(Debug, Clone)]
pub struct Reduced {
    pub cols: usize,
    /// `(pivot column, row)` in increasing pivot column order.
    pub pivots: Vec<(usize, Vec<BigInt>)>,
}

impl Reduced {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Integer kernel basis, one primitive vector per non-pivot column, in
    /// increasing order of that column.
    pub fn kernel(&self) -> Vec<Vec<BigInt>> {
        let mut is_pivot = vec![false; self.cols];
        for (c, _) in &self.pivots {
            is_pivot[*c] = true;
        }
        let free: Vec<usize> = (0..self.cols).filter(|&c| !is_pivot[c]).collect();
        free.par_iter()
            .map(|&j| {
                let mut l = BigInt::one();
                for (c, row) in &self.pivots {
                    if !row[j].is_zero() {
                        l = l.lcm(&row[*c]);
                    }
                }
                let mut v = vec![BigInt::zero(); self.cols];
                v[j] = l.clone();
                for (c, row) in &self.pivots {
                    if !row[j].is_zero() {
                        v[*c] = -(&l / &row[*c]) * &row[j];
                    }
                }
                make_primitive(&mut v);
                v
            })
            .collect()
    }
}

/// Fraction-free elimination of integer rows of width `cols`. With
/// `full = true` pivot columns are also cleared above the pivot.
pub fn reduce_integer_rows(mut rows: Vec<Vec<BigInt>>, cols: usize, full: bool) -> Reduced {
    rows.retain(|r| r.iter().any(|v| !v.is_zero()));
    for r in rows.iter_mut() {
        make_primitive(r);
    }
    let mut pivots: Vec<(usize, Vec<BigInt>)> = Vec::new();
    for col in 0..cols {
        if rows.is_empty() {
            break;
        }
        let mut best: Option<(u64, usize)> = None;
        for (i, r) in rows.iter().enumerate() {
            if !r[col].is_zero() {
                let b = bits(&r[col]);
                if best.is_none_or(|(bb, _)| b < bb) {
                    best = Some((b, i));
                }
            }
        }
        let Some((_, pi)) = best else { continue };
        let mut prow = rows.remove(pi);
        if prow[col].is_negative() {
            for v in prow.iter_mut() {
                *v = -std::mem::take(v);
            }
        }
        rows.par_iter_mut().for_each(|r| eliminate(r, &prow, col));
        rows.retain(|r| r.iter().any(|v| !v.is_zero()));
        if full {
            pivots.par_iter_mut().for_each(|(_, r)| eliminate(r, &prow, col));
        }
        pivots.push((col, prow));
    }
    Reduced { cols, pivots }
}

/// Exact rank of an integer matrix given by rows.
pub fn integer_rank(rows: Vec<Vec<BigInt>>, cols: usize) -> usize {
    reduce_integer_rows(rows, cols, false).rank()
}

/// Exact integer kernel basis; every vector is checked against the input.
pub fn integer_nullspace(rows: &[Vec<BigInt>], cols: usize) -> Vec<Vec<BigInt>> {
    let kernel = reduce_integer_rows(rows.to_vec(), cols, true).kernel();
    for v in &kernel {
        assert!(rows.iter().all(|r| dot(r, v).is_zero()), "kernel vector failed exact verification");
    }
    kernel
}

pub fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).filter(|(x, y)| !x.is_zero() && !y.is_zero()).fold(BigInt::zero(), |acc, (x, y)| acc + x * y)
}

/// Exact rank over the rationals.
pub fn rank(m: &RationalMatrix) -> usize {
    integer_rank(m.integer_rows(), m.cols)
}

/// Exact kernel basis of `m`, verified entry by entry.
pub fn nullspace(m: &RationalMatrix) -> NullspaceBasis {
    let kernel = integer_nullspace(&m.integer_rows(), m.cols);
    let vectors: Vec<Vec<Rational>> =
        kernel.into_iter().map(|v| v.into_iter().map(Rational::from_integer).collect()).collect();
    for v in &vectors {
        let image = m.mul_vec(v).expect("width matches");
        assert!(image.iter().all(Zero::is_zero));
    }
    NullspaceBasis { dimension: vectors.len(), vectors }
}

/// Rank of the matrix whose rows are `vectors`.
pub fn span_rank(vectors: &[Vec<Rational>]) -> Result<usize, LinalgError> {
    let Some(first) = vectors.first() else { return Ok(0) };
    let cols = first.len();
    if let Some(bad) = vectors.iter().find(|v| v.len() != cols) {
        return Err(LinalgError::DimensionMismatch { expected: cols, found: bad.len() });
    }
    Ok(integer_rank(vectors.iter().map(|v| integer_row(v)).collect(), cols))
}

/// Row echelon basis grown one vector at a time.
#[derive(Debug, Clone, Default)]
pub struct Echelon {
    cols: usize,
    rows: Vec<(usize, Vec<BigInt>)>,
}

impl Echelon {
    pub fn new(cols: usize) -> Self {
        Echelon { cols, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Adds `v` to the span; returns whether the rank went up.
    pub fn insert(&mut self, mut v: Vec<BigInt>) -> bool {
        assert_eq!(v.len(), self.cols, "echelon width mismatch");
        make_primitive(&mut v);
        for (c, row) in &self.rows {
            if !v[*c].is_zero() {
                eliminate(&mut v, row, *c);
            }
        }
        let Some(lead) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let at = self.rows.partition_point(|(c, _)| *c < lead);
        self.rows.insert(at, (lead, v));
        true
    }

    /// Whether `v` already lies in the span.
    pub fn contains(&self, v: &[BigInt]) -> bool {
        let mut v = v.to_vec();
        for (c, row) in &self.rows {
            if !v[*c].is_zero() {
                eliminate(&mut v, row, *c);
            }
        }
        v.iter().all(Zero::is_zero)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(v: i64) -> Rational {
        Rational::from_integer(BigInt::from(v))
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&RationalMatrix::zeros(0, 4)), 0);
        assert_eq!(rank(&RationalMatrix::identity(3)), 3);
        assert_eq!(rank(&RationalMatrix::from_i64(&[&[1, 2], &[2, 4]])), 1);
    }

    #[test]
    fn nullspace_examples() {
        assert_eq!(nullspace(&RationalMatrix::identity(2)).dimension, 0);
        assert_eq!(nullspace(&RationalMatrix::zeros(2, 3)).dimension, 3);
        let ns = nullspace(&RationalMatrix::from_i64(&[&[1, 1, 1]]));
        assert_eq!(ns.dimension, 2);
    }

    #[test]
    fn span_rank_examples() {
        assert_eq!(span_rank(&[vec![q(1), q(0)], vec![q(0), q(1)]]), Ok(2));
        assert_eq!(span_rank(&[vec![q(1), q(1)], vec![q(2), q(2)]]), Ok(1));
        assert_eq!(span_rank(&[]), Ok(0));
        assert_eq!(
            span_rank(&[vec![q(1)], vec![q(1), q(2)]]),
            Err(LinalgError::DimensionMismatch { expected: 1, found: 2 })
        );
    }

    #[test]
    fn rational_entries() {
        let half = Rational::new(BigInt::from(1), BigInt::from(2));
        let m = RationalMatrix::from_rows(2, vec![vec![half.clone(), q(1)], vec![q(1), q(2)]]).unwrap();
        assert_eq!(rank(&m), 1);
        let ns = nullspace(&m);
        assert_eq!(ns.vectors, vec![vec![q(-2), q(1)]]);
    }

    #[test]
    fn echelon_tracks_span() {
        let mut e = Echelon::new(3);
        let v = |a: i64, b: i64, c: i64| vec![BigInt::from(a), BigInt::from(b), BigInt::from(c)];
        assert!(e.insert(v(0, 2, 4)));
        assert!(!e.insert(v(0, 1, 2)));
        assert!(e.insert(v(3, 0, 1)));
        assert!(e.contains(&v(3, 2, 5)));
        assert!(!e.contains(&v(0, 0, 1)));
        assert!(e.insert(v(0, 0, 1)));
        assert_eq!(e.rank(), 3);
    }

    fn small_matrix() -> impl Strategy<Value = (usize, usize, Vec<i64>)> {
        (1usize..6, 1usize..6).prop_flat_map(|(r, c)| (Just(r), Just(c), proptest::collection::vec(-3i64..=3, r * c)))
    }

    fn build(r: usize, c: usize, data: &[i64]) -> RationalMatrix {
        let rows: Vec<&[i64]> = data.chunks(c).collect();
        let mut m = RationalMatrix::from_i64(&rows);
        if r == 0 {
            m = RationalMatrix::zeros(0, c);
        }
        m
    }

    proptest! {
        #[test]
        fn rank_is_transpose_invariant((r, c, data) in small_matrix()) {
            let m = build(r, c, &data);
            prop_assert_eq!(rank(&m), rank(&m.transpose()));
        }

        #[test]
        fn nullity_plus_rank((r, c, data) in small_matrix()) {
            let m = build(r, c, &data);
            let ns = nullspace(&m);
            prop_assert_eq!(ns.dimension + rank(&m), c);
            prop_assert_eq!(span_rank(&ns.vectors).unwrap(), ns.dimension);
        }
    }
}
