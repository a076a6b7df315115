//! Exact computation of Jacobian syzygies, freeness type and combinatorial
//! invariants of plane curves, with a focus on arrangements of conics.
//!
//! * [`poly`] and [`parse`]: homogeneous forms in `x, y, z` over the rationals.
//! * [`linalg`]: exact rank and nullspace with a modular screen.
//! * [`syzygy`]: the graded module `AR(f)`, Milnor algebra dimensions, Tjurina
//!   number, exponents, second syzygies and classification.
//! * [`combinatorics`]: singularity censuses and the numerical tests built on them.
//! * [`classifier`]: enumeration of nodal-tacnodal censuses.
//! * [`catalog`]: named curve families, specialization and Ziegler comparison.

pub mod catalog;
pub mod classifier;
pub mod cli;
pub mod combinatorics;
pub mod linalg;
pub mod parse;
pub mod poly;
pub mod syzygy;

pub use parse::{parse, ParseError};
pub use poly::{monomial_basis, HomogeneousPolynomial, Monomial, Rational, Var};
pub use syzygy::{analyze, Classification, EngineError, SyzygyProfile};
