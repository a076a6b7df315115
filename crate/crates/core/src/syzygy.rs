//! Jacobian syzygies of a plane curve and the invariants read off from them.
//!
//! For `f` of degree `d` the graded piece `AR(f)_r` is the kernel of
//! `(a, b, c) -> a f_x + b f_y + c f_z` from `S_r^3` to `S_{r+d-1}`. Everything
//! else is graded linear algebra on top of these kernels:
//!
//! * minimal generators in degree `r` are counted as
//!   `dim AR(f)_r - dim S_1 AR(f)_{r-1}` (graded Nakayama),
//! * relations among the chosen generators are found the same way one step
//!   further up the resolution,
//! * `dim M(f)_k = dim S_k - 3 dim S_{k-d+1} + dim AR(f)_{k-d+1}`.
//!
//! Syzygy vectors are stored as three consecutive blocks of coefficients, one
//! per component, each block indexed by `monomial_basis(r)`.
//!
//! All dimensions come from exact fraction-free elimination.

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::linalg::{self, Echelon, NullspaceBasis};
use crate::poly::{basis_len, monomial_basis, HomogeneousPolynomial, Monomial, Rational, Var};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EngineError {
    #[error("curve degree {0} is below 2")]
    DegreeTooSmall(u32),
    #[error("no Jacobian syzygy found in degrees 0..={0}; the curve is probably not reduced")]
    SearchExhausted(u32),
    #[error("Milnor algebra dimensions did not stabilize: dim M_{k} = {before}, dim M_{next} = {after}", next = k + 1)]
    NotStabilized { k: u32, before: usize, after: usize },
    #[error("found {found} second syzygies by degree {cap}, expected {expected}")]
    ResolutionImbalance { found: usize, expected: usize, cap: u32 },
}

/// One graded piece of the syzygy module.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedARPiece {
    pub degree: u32,
    vectors: Vec<Vec<BigInt>>,
}

impl GradedARPiece {
    pub fn dimension(&self) -> usize {
        self.vectors.len()
    }

    pub fn integer_basis(&self) -> &[Vec<BigInt>] {
        &self.vectors
    }

    pub fn basis(&self) -> NullspaceBasis {
        NullspaceBasis {
            dimension: self.vectors.len(),
            vectors: self.vectors.iter().map(|v| v.iter().cloned().map(Rational::from_integer).collect()).collect(),
        }
    }

    /// Basis vectors as triples `(a, b, c)` of forms of degree `self.degree`.
    pub fn triples(&self) -> Vec<[HomogeneousPolynomial; 3]> {
        self.vectors.iter().map(|v| vector_to_triple(v, self.degree)).collect()
    }
}

pub fn vector_to_triple(v: &[BigInt], degree: u32) -> [HomogeneousPolynomial; 3] {
    let n = basis_len(degree);
    let basis = monomial_basis(degree);
    let comp = |b: usize| {
        HomogeneousPolynomial::from_terms(
            degree,
            basis.iter().zip(&v[b * n..(b + 1) * n]).map(|(m, c)| (*m, Rational::from_integer(c.clone()))),
        )
        .expect("basis monomials have the right degree")
    };
    [comp(0), comp(1), comp(2)]
}

/// Freeness type of a curve.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Classification {
    Smooth,
    Free,
    NearlyFree,
    PlusOneGenerated,
    MSyzygy,
}

impl Classification {
    pub fn as_str(&self) -> &'static str {
        match self {
            Classification::Smooth => "smooth",
            Classification::Free => "free",
            Classification::NearlyFree => "nearly_free",
            Classification::PlusOneGenerated => "plus_one_generated",
            Classification::MSyzygy => "m_syzygy",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfileChecks {
    pub euler: bool,
    pub hilbert_numerator: bool,
    pub tau_census: Option<bool>,
}

/// All syzygy-theoretic invariants of one curve.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SyzygyProfile {
    pub degree: u32,
    pub mdr: u32,
    pub tau: usize,
    pub generator_degrees: Vec<u32>,
    pub second_syzygy_degrees: Vec<u32>,
    pub classification: Classification,
    pub nu: Option<u32>,
    pub delta_level: Option<u32>,
    pub ar_hilbert: Vec<usize>,
    pub milnor_hilbert: Vec<usize>,
    pub checks: ProfileChecks,
}

impl SyzygyProfile {
    /// Number of minimal generators of `AR(f)`.
    pub fn m(&self) -> usize {
        self.generator_degrees.len()
    }

    pub fn is_minimal_pog(&self) -> bool {
        self.classification == Classification::PlusOneGenerated && self.delta_level == Some(1)
    }
}

/// Minimal homogeneous generators of `AR(f)` with explicit coefficient vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimalGenerators {
    pub curve_degree: u32,
    /// `(degree, vector)` in ascending degree, three blocks per vector.
    pub gens: Vec<(u32, Vec<BigInt>)>,
}

impl MinimalGenerators {
    pub fn degrees(&self) -> Vec<u32> {
        self.gens.iter().map(|(d, _)| *d).collect()
    }
}

/// Multiplies a block vector by a monomial. `degs[i]` is the degree of block
/// `i`; blocks with negative degree are empty.
fn mul_blocks(v: &[BigInt], degs: &[i64], mono: &Monomial, tables: &mut MonoTables) -> Vec<BigInt> {
    let s = mono.degree() as i64;
    let out_len: usize = degs.iter().map(|&g| blen(g + s)).sum();
    let mut out = vec![BigInt::zero(); out_len];
    let (mut in_off, mut out_off) = (0, 0);
    for &g in degs {
        let n_in = blen(g);
        if n_in > 0 {
            let src = tables.basis(g as u32).to_vec();
            for (i, m) in src.iter().enumerate() {
                let c = &v[in_off + i];
                if !c.is_zero() {
                    out[out_off + m.mul(mono).index()] = c.clone();
                }
            }
        }
        in_off += n_in;
        out_off += blen(g + s);
    }
    out
}

fn blen(g: i64) -> usize {
    if g < 0 {
        0
    } else {
        basis_len(g as u32)
    }
}

#[derive(Default)]
struct MonoTables {
    bases: Vec<Option<Vec<Monomial>>>,
}

impl MonoTables {
    fn basis(&mut self, d: u32) -> &[Monomial] {
        let d = d as usize;
        if self.bases.len() <= d {
            self.bases.resize(d + 1, None);
        }
        self.bases[d].get_or_insert_with(|| monomial_basis(d as u32))
    }
}

/// Exact data of one curve, shared by all computations.
#[derive(Debug, Clone)]
pub struct JacobianData {
    degree: u32,
    poly: HomogeneousPolynomial,
    /// Partials of the primitive integer multiple of `f`.
    partials: [Vec<(Monomial, BigInt)>; 3],
}

impl JacobianData {
    pub fn new(f: &HomogeneousPolynomial) -> Result<Self, EngineError> {
        let d = f.degree();
        if d < 2 {
            return Err(EngineError::DegreeTooSmall(d));
        }
        let prim = HomogeneousPolynomial::from_terms(
            d,
            f.primitive_integer_coeffs().into_iter().map(|(m, c)| (m, Rational::from_integer(c))),
        )
        .expect("same degree");
        let partials = Var::ALL.map(|v| prim.partial(v).terms().map(|(m, c)| (*m, c.to_integer())).collect::<Vec<_>>());
        Ok(JacobianData { degree: d, poly: f.clone(), partials })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn polynomial(&self) -> &HomogeneousPolynomial {
        &self.poly
    }

    /// Rows of the map `S_r^3 -> S_{r+d-1}`; columns are `(block, monomial)`.
    pub fn relation_rows(&self, r: u32) -> Vec<Vec<BigInt>> {
        let n = basis_len(r);
        let target = r + self.degree - 1;
        let mut rows = vec![vec![BigInt::zero(); 3 * n]; basis_len(target)];
        for (j, mu) in monomial_basis(r).iter().enumerate() {
            for (b, part) in self.partials.iter().enumerate() {
                for (m, c) in part {
                    rows[mu.mul(m).index()][b * n + j] += c;
                }
            }
        }
        rows
    }

    pub fn ar_piece(&self, r: u32) -> GradedARPiece {
        let rows = self.relation_rows(r);
        let vectors = linalg::integer_nullspace(&rows, 3 * basis_len(r));
        GradedARPiece { degree: r, vectors }
    }

    /// Exact check that a block vector of degree `r` is a Jacobian syzygy.
    pub fn is_syzygy(&self, v: &[BigInt], r: u32) -> bool {
        let rows = self.relation_rows(r);
        rows.iter().all(|row| linalg::dot(row, v).is_zero())
    }
}

/// Everything needed to assemble a [`SyzygyProfile`].
#[derive(Debug, Clone)]
pub struct Analysis {
    pub data: JacobianData,
    pub pieces: Vec<GradedARPiece>,
    pub generators: MinimalGenerators,
    pub milnor_hilbert: Vec<usize>,
    pub second_syzygy_degrees: Vec<u32>,
}

/// `AR(f)_r` as an exact basis.
pub fn ar_dimension(f: &HomogeneousPolynomial, r: u32) -> Result<GradedARPiece, EngineError> {
    Ok(JacobianData::new(f)?.ar_piece(r))
}

fn pieces_through(data: &JacobianData, top: u32) -> Vec<GradedARPiece> {
    (0..=top).into_par_iter().map(|r| data.ar_piece(r)).collect()
}

fn mdr_of(pieces: &[GradedARPiece], d: u32) -> Result<u32, EngineError> {
    pieces.iter().find(|p| p.dimension() > 0).map(|p| p.degree).ok_or(EngineError::SearchExhausted(d - 1))
}

/// Minimal degree of a nonzero Jacobian syzygy.
pub fn mdr(f: &HomogeneousPolynomial) -> Result<u32, EngineError> {
    let data = JacobianData::new(f)?;
    let d = data.degree;
    for r in 0..d {
        if data.ar_piece(r).dimension() > 0 {
            return Ok(r);
        }
    }
    Err(EngineError::SearchExhausted(d - 1))
}

const VARS: [Monomial; 3] = [Monomial { exps: [1, 0, 0] }, Monomial { exps: [0, 1, 0] }, Monomial { exps: [0, 0, 1] }];

fn select_generators(pieces: &[GradedARPiece], d: u32) -> MinimalGenerators {
    let mut tables = MonoTables::default();
    let mut gens = Vec::new();
    for piece in pieces {
        let r = piece.degree;
        if piece.dimension() == 0 {
            continue;
        }
        let mut ech = Echelon::new(3 * basis_len(r));
        if r > 0 {
            let below = &pieces[(r - 1) as usize];
            let degs = [r as i64 - 1; 3];
            for v in below.integer_basis() {
                for x in &VARS {
                    ech.insert(mul_blocks(v, &degs, x, &mut tables));
                }
            }
        }
        for v in piece.integer_basis() {
            if ech.insert(v.clone()) {
                gens.push((r, v.clone()));
            }
        }
    }
    MinimalGenerators { curve_degree: d, gens }
}

/// Minimal generator degrees `d_1 <= ... <= d_m` of `AR(f)`.
pub fn generator_degrees(f: &HomogeneousPolynomial) -> Result<Vec<u32>, EngineError> {
    Ok(minimal_generators(f)?.degrees())
}

/// Minimal generators with explicit vectors.
pub fn minimal_generators(f: &HomogeneousPolynomial) -> Result<MinimalGenerators, EngineError> {
    let data = JacobianData::new(f)?;
    let d = data.degree;
    let pieces = pieces_through(&data, d - 1);
    mdr_of(&pieces, d)?;
    Ok(select_generators(&pieces, d))
}

/// Largest `k` for which `dim M(f)_k` is computed.
pub fn milnor_window(d: u32) -> u32 {
    3 * d - 4
}

fn milnor_from_ar(d: u32, ar_dims: &[usize]) -> Vec<usize> {
    (0..=milnor_window(d))
        .map(|k| {
            let sk = basis_len(k);
            if k + 1 < d {
                sk
            } else {
                let r = k + 1 - d;
                sk - (3 * basis_len(r) - ar_dims[r as usize])
            }
        })
        .collect()
}

/// `dim AR(f)_r` from the exact rank of the relation matrix.
pub fn ar_dim_exact(data: &JacobianData, r: u32) -> usize {
    let cols = 3 * basis_len(r);
    cols - linalg::integer_rank(data.relation_rows(r), cols)
}

fn milnor_with(data: &JacobianData, pieces: &[GradedARPiece]) -> Vec<usize> {
    let d = data.degree;
    let top = milnor_window(d) + 1 - d;
    let mut ar_dims: Vec<usize> = pieces.iter().map(GradedARPiece::dimension).collect();
    let extra: Vec<usize> = (ar_dims.len() as u32..=top).into_par_iter().map(|r| ar_dim_exact(data, r)).collect();
    ar_dims.extend(extra);
    milnor_from_ar(d, &ar_dims)
}

fn check_stable(d: u32, dims: &[usize]) -> Result<usize, EngineError> {
    let k = milnor_window(d);
    let (a, b) = (dims[(k - 1) as usize], dims[k as usize]);
    if a != b {
        return Err(EngineError::NotStabilized { k: k - 1, before: a, after: b });
    }
    Ok(b)
}

/// `dim M(f)_k` for `k = 0..=3d-4`, required to be stable at the end.
pub fn milnor_hilbert(f: &HomogeneousPolynomial) -> Result<Vec<usize>, EngineError> {
    let data = JacobianData::new(f)?;
    let d = data.degree;
    let pieces = pieces_through(&data, d - 1);
    let dims = milnor_with(&data, &pieces);
    check_stable(d, &dims)?;
    Ok(dims)
}

/// Total Tjurina number: the stable value of `dim M(f)_k`.
pub fn tjurina(f: &HomogeneousPolynomial) -> Result<usize, EngineError> {
    let dims = milnor_hilbert(f)?;
    Ok(*dims.last().expect("nonempty window"))
}

/// Relation space among the generators in internal degree `t`, as an exact
/// kernel basis. Columns are `(generator i, monomial of degree t - d_i)`.
fn relation_space(gens: &MinimalGenerators, t: u32, tables: &mut MonoTables) -> (Vec<i64>, Vec<Vec<BigInt>>) {
    let degs: Vec<i64> = gens.gens.iter().map(|(g, _)| t as i64 - *g as i64).collect();
    let rows_len = 3 * basis_len(t);
    let mut columns: Vec<Vec<BigInt>> = Vec::new();
    for ((g, v), &cd) in gens.gens.iter().zip(&degs) {
        if cd < 0 {
            continue;
        }
        let gdegs = [*g as i64; 3];
        for mono in monomial_basis(cd as u32) {
            columns.push(mul_blocks(v, &gdegs, &mono, tables));
        }
    }
    let ncols = columns.len();
    let mut rows = vec![vec![BigInt::zero(); ncols]; rows_len];
    for (j, col) in columns.iter().enumerate() {
        for (i, c) in col.iter().enumerate() {
            if !c.is_zero() {
                rows[i][j] = c.clone();
            }
        }
    }
    (degs, linalg::integer_nullspace(&rows, ncols))
}

/// Twists `e_i` of the second syzygies, found by counting minimal relations
/// among `gens` degree by degree up to `2d`.
pub fn second_syzygy_degrees(gens: &MinimalGenerators) -> Result<Vec<u32>, EngineError> {
    let d = gens.curve_degree;
    let m = gens.gens.len();
    let expected = m.saturating_sub(2);
    let mut found = Vec::new();
    if expected == 0 {
        return Ok(found);
    }
    let cap = 2 * d;
    let start = gens.gens.iter().map(|(g, _)| *g).min().unwrap_or(0) + 1;
    let mut tables = MonoTables::default();
    let mut prev: Option<(Vec<i64>, Vec<Vec<BigInt>>)> = None;
    for t in start..=cap {
        let (degs, basis) = relation_space(gens, t, &mut tables);
        let width: usize = degs.iter().map(|&g| blen(g)).sum();
        let mut ech = Echelon::new(width);
        if let Some((pdegs, pbasis)) = &prev {
            for v in pbasis {
                for x in &VARS {
                    ech.insert(mul_blocks(v, pdegs, x, &mut tables));
                }
            }
        }
        let before = ech.rank();
        for v in &basis {
            ech.insert(v.clone());
        }
        let new = ech.rank() - before;
        found.extend(std::iter::repeat_n(t + d - 1, new));
        if found.len() >= expected {
            break;
        }
        prev = Some((degs, basis));
    }
    if found.len() != expected {
        return Err(EngineError::ResolutionImbalance { found: found.len(), expected, cap });
    }
    Ok(found)
}

/// Coefficients of `(1-t)^3 * sum_k dim M_k t^k`, with the stable tail summed.
pub fn hilbert_numerator_from_milnor(dims: &[usize]) -> Vec<i64> {
    let k_top = dims.len() - 1;
    let tau = dims[k_top] as i64;
    let mut series = vec![0i64; k_top + 4];
    for (k, &h) in dims.iter().enumerate() {
        series[k] = h as i64;
    }
    // (1-t)^3 P(t)
    let cube = [1i64, -3, 3, -1];
    let mut out = vec![0i64; k_top + 5];
    for (k, &h) in series.iter().enumerate().take(k_top + 1) {
        for (j, &c) in cube.iter().enumerate() {
            out[k + j] += c * h;
        }
    }
    // tau t^{K+1} (1-t)^2
    for (j, c) in [1i64, -2, 1].iter().enumerate() {
        out[k_top + 1 + j] += c * tau;
    }
    trim(out)
}

/// `1 - 3t^{d-1} + sum t^{d-1+d_i} - sum t^{e_i}`.
pub fn hilbert_numerator_from_resolution(d: u32, gens: &[u32], second: &[u32]) -> Vec<i64> {
    let top = gens.iter().map(|g| g + d - 1).chain(second.iter().copied()).chain([d - 1]).max().unwrap_or(0) as usize;
    let mut out = vec![0i64; top + 1];
    out[0] += 1;
    out[(d - 1) as usize] -= 3;
    for g in gens {
        out[(g + d - 1) as usize] += 1;
    }
    for e in second {
        out[*e as usize] -= 1;
    }
    trim(out)
}

fn trim(mut v: Vec<i64>) -> Vec<i64> {
    while v.len() > 1 && *v.last().unwrap() == 0 {
        v.pop();
    }
    v
}

/// `x f_x + y f_y + z f_z = d f`.
pub fn euler_relation_holds(f: &HomogeneousPolynomial) -> bool {
    if f.degree() == 0 {
        return true;
    }
    let lhs = Var::ALL
        .iter()
        .map(|&v| HomogeneousPolynomial::var(v).mul(&f.partial(v)))
        .reduce(|a, b| a.add(&b).expect("same degree"))
        .expect("three terms");
    lhs == f.scale(&Rational::from_integer(BigInt::from(f.degree())))
}

/// The three Koszul syzygies, as block vectors of degree `d - 1`.
pub fn koszul_vectors(data: &JacobianData) -> Vec<Vec<BigInt>> {
    let r = data.degree - 1;
    let n = basis_len(r);
    let dense = |b: usize| {
        let mut v = vec![BigInt::zero(); n];
        for (m, c) in &data.partials[b] {
            v[m.index()] = c.clone();
        }
        v
    };
    let parts = [dense(0), dense(1), dense(2)];
    let neg = |v: &Vec<BigInt>| v.iter().map(|c| -c).collect::<Vec<_>>();
    let zero = vec![BigInt::zero(); n];
    let assemble = |a: &Vec<BigInt>, b: &Vec<BigInt>, c: &Vec<BigInt>| {
        let mut v = a.clone();
        v.extend(b.iter().cloned());
        v.extend(c.iter().cloned());
        v
    };
    vec![
        assemble(&parts[1], &neg(&parts[0]), &zero),
        assemble(&parts[2], &zero, &neg(&parts[0])),
        assemble(&zero, &parts[2], &neg(&parts[1])),
    ]
}

/// Classification from the computed degrees.
pub fn classify(d: u32, tau: usize, gens: &[u32]) -> (Classification, Option<u32>, Option<u32>) {
    let m = gens.len();
    let balanced = m == 3 && gens[0] + gens[1] == d;
    let (nu, dl) = if balanced { (Some(gens[2] - gens[1] + 1), Some(gens[2] - gens[1])) } else { (None, None) };
    let class = if tau == 0 {
        Classification::Smooth
    } else if m == 2 {
        Classification::Free
    } else if balanced && gens[2] == gens[1] {
        Classification::NearlyFree
    } else if balanced {
        Classification::PlusOneGenerated
    } else {
        Classification::MSyzygy
    };
    (class, nu, dl)
}

/// Runs every computation for one curve.
pub fn analyze_full(f: &HomogeneousPolynomial) -> Result<Analysis, EngineError> {
    let data = JacobianData::new(f)?;
    let d = data.degree;
    let pieces = pieces_through(&data, d - 1);
    mdr_of(&pieces, d)?;
    let generators = select_generators(&pieces, d);
    let milnor_hilbert = milnor_with(&data, &pieces);
    check_stable(d, &milnor_hilbert)?;
    let second_syzygy_degrees = second_syzygy_degrees(&generators)?;
    Ok(Analysis { data, pieces, generators, milnor_hilbert, second_syzygy_degrees })
}

impl Analysis {
    pub fn profile(&self) -> SyzygyProfile {
        let d = self.data.degree;
        let gens = self.generators.degrees();
        let tau = *self.milnor_hilbert.last().expect("nonempty");
        let (classification, nu, delta_level) = classify(d, tau, &gens);
        let hilbert_numerator = hilbert_numerator_from_milnor(&self.milnor_hilbert)
            == hilbert_numerator_from_resolution(d, &gens, &self.second_syzygy_degrees);
        SyzygyProfile {
            degree: d,
            mdr: gens[0],
            tau,
            generator_degrees: gens,
            second_syzygy_degrees: self.second_syzygy_degrees.clone(),
            classification,
            nu,
            delta_level,
            ar_hilbert: self.pieces.iter().map(GradedARPiece::dimension).collect(),
            milnor_hilbert: self.milnor_hilbert.clone(),
            checks: ProfileChecks {
                euler: euler_relation_holds(self.data.polynomial()),
                hilbert_numerator,
                tau_census: None,
            },
        }
    }
}

/// Full syzygy profile of a reduced curve.
pub fn analyze(f: &HomogeneousPolynomial) -> Result<SyzygyProfile, EngineError> {
    Ok(analyze_full(f)?.profile())
}

/// `tau = (d-1)^2 - d_1 (d - d_1 - 1) - (d_3 - d_2 + 1)` for a plus-one
/// generated profile. Any other classification gives `false`.
pub fn verify_dimca_sticlaru(p: &SyzygyProfile) -> bool {
    if p.classification != Classification::PlusOneGenerated || p.generator_degrees.len() != 3 {
        return false;
    }
    let d = p.degree as i64;
    let [d1, d2, d3] = [0, 1, 2].map(|i| p.generator_degrees[i] as i64);
    (d - 1).pow(2) - d1 * (d - d1 - 1) - (d3 - d2 + 1) == p.tau as i64
}

/// Integer coefficient vector of `x^i y^j z^k * v` where `v` has three blocks of degree `r`.
pub fn shift_syzygy(v: &[BigInt], r: u32, mono: &Monomial) -> Vec<BigInt> {
    mul_blocks(v, &[r as i64; 3], mono, &mut MonoTables::default())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse;

    #[test]
    fn fermat_conic_koszul_piece() {
        let f = parse("x^2+y^2+z^2").unwrap();
        assert_eq!(ar_dimension(&f, 0).unwrap().dimension(), 0);
        let piece = ar_dimension(&f, 1).unwrap();
        assert_eq!(piece.dimension(), 3);
        let p = analyze(&f).unwrap();
        assert_eq!(p.tau, 0);
        assert_eq!(p.classification, Classification::Smooth);
        assert!(p.checks.hilbert_numerator);
    }

    #[test]
    fn triangle_is_free() {
        let f = parse("x*y*z").unwrap();
        assert_eq!(ar_dimension(&f, 0).unwrap().dimension(), 0);
        assert_eq!(ar_dimension(&f, 1).unwrap().dimension(), 2);
        assert_eq!(mdr(&f).unwrap(), 1);
        assert_eq!(tjurina(&f).unwrap(), 3);
        let p = analyze(&f).unwrap();
        assert_eq!(p.generator_degrees, vec![1, 1]);
        assert!(p.second_syzygy_degrees.is_empty());
        assert_eq!(p.classification, Classification::Free);
        assert!(p.checks.hilbert_numerator && p.checks.euler);
    }

    #[test]
    fn degree_too_small() {
        let f = parse("x+y").unwrap();
        assert_eq!(analyze(&f), Err(EngineError::DegreeTooSmall(1)));
    }

    #[test]
    fn double_line_pair_is_not_stable() {
        // x^2 y^2 is not reduced: M(f) has positive dimension.
        let f = parse("x^2*y^2").unwrap();
        assert!(matches!(tjurina(&f), Err(EngineError::NotStabilized { .. })));
    }

    #[test]
    fn classify_rules() {
        assert_eq!(classify(6, 16, &[3, 3, 5]), (Classification::PlusOneGenerated, Some(3), Some(2)));
        assert_eq!(classify(8, 24, &[4, 4, 4]), (Classification::NearlyFree, Some(1), Some(0)));
        assert_eq!(classify(3, 3, &[1, 1]).0, Classification::Free);
        assert_eq!(classify(8, 34, &[4, 5, 5, 5]).0, Classification::MSyzygy);
        // m = 3 with d_1 + d_2 > d stays m-syzygy
        assert_eq!(classify(8, 30, &[5, 5, 6]), (Classification::MSyzygy, None, None));
    }

    fn pog_profile(d: u32, gens: Vec<u32>, tau: usize) -> SyzygyProfile {
        let (classification, nu, delta_level) = classify(d, tau, &gens);
        SyzygyProfile {
            degree: d,
            mdr: gens[0],
            tau,
            generator_degrees: gens,
            second_syzygy_degrees: vec![],
            classification,
            nu,
            delta_level,
            ar_hilbert: vec![],
            milnor_hilbert: vec![],
            checks: ProfileChecks { euler: true, hilbert_numerator: true, tau_census: None },
        }
    }

    #[test]
    fn dimca_sticlaru_formula() {
        assert!(verify_dimca_sticlaru(&pog_profile(6, vec![3, 3, 5], 16)));
        assert!(verify_dimca_sticlaru(&pog_profile(4, vec![2, 2, 3], 5)));
        assert!(!verify_dimca_sticlaru(&pog_profile(6, vec![3, 3, 5], 17)));
        assert!(!verify_dimca_sticlaru(&pog_profile(8, vec![4, 4, 4], 24)));
    }

    #[test]
    fn numerator_of_free_triangle() {
        // 1 - 3t^2 + 2t^3
        assert_eq!(hilbert_numerator_from_resolution(3, &[1, 1], &[]), vec![1, 0, -3, 2]);
        assert_eq!(hilbert_numerator_from_milnor(&[1, 3, 3, 3, 3, 3]), vec![1, 0, -3, 2]);
    }
}
