//! Python bindings for `conicsyz`.
//!
//! Structured results (profiles, verdicts, comparisons) are returned as
//! JSON strings with the same schema as the command-line tool; the
//! `Polynomial` and `Profile` classes expose the most used fields directly.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use serde::Serialize;

use conicsyz::catalog::{self, CurveRef};
use conicsyz::classifier;
use conicsyz::combinatorics::{self, PoincareSplit, WeakCombinatorics};
use conicsyz::syzygy;

fn err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn to_json<T: Serialize>(v: &T) -> PyResult<String> {
    serde_json::to_string(v).map_err(err)
}

fn census(text: &str) -> PyResult<WeakCombinatorics> {
    text.parse().map_err(err)
}

/// A homogeneous polynomial in x, y, z with rational coefficients.
#[pyclass(name = "Polynomial", frozen)]
struct PyPolynomial {
    inner: conicsyz::HomogeneousPolynomial,
}

#[pymethods]
impl PyPolynomial {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        Ok(PyPolynomial { inner: conicsyz::parse(text).map_err(err)? })
    }

    #[getter]
    fn degree(&self) -> u32 {
        self.inner.degree()
    }

    fn __mul__(&self, other: &PyPolynomial) -> PyPolynomial {
        PyPolynomial { inner: self.inner.mul(&other.inner) }
    }

    fn __eq__(&self, other: &PyPolynomial) -> bool {
        self.inner == other.inner
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Polynomial('{}')", self.inner)
    }

    /// `dim AR(f)_r`.
    fn ar_dimension(&self, r: u32) -> PyResult<usize> {
        Ok(syzygy::ar_dimension(&self.inner, r).map_err(err)?.dimension())
    }

    fn mdr(&self) -> PyResult<u32> {
        syzygy::mdr(&self.inner).map_err(err)
    }

    fn tjurina(&self) -> PyResult<usize> {
        syzygy::tjurina(&self.inner).map_err(err)
    }

    fn analyze(&self) -> PyResult<PyProfile> {
        Ok(PyProfile { inner: syzygy::analyze(&self.inner).map_err(err)? })
    }
}

/// Syzygy profile of a curve.
#[pyclass(name = "Profile", frozen)]
struct PyProfile {
    inner: syzygy::SyzygyProfile,
}

#[pymethods]
impl PyProfile {
    #[getter]
    fn classification(&self) -> &'static str {
        self.inner.classification.as_str()
    }
    #[getter]
    fn tau(&self) -> usize {
        self.inner.tau
    }
    #[getter]
    fn mdr(&self) -> u32 {
        self.inner.mdr
    }
    #[getter]
    fn generator_degrees(&self) -> Vec<u32> {
        self.inner.generator_degrees.clone()
    }
    #[getter]
    fn second_syzygy_degrees(&self) -> Vec<u32> {
        self.inner.second_syzygy_degrees.clone()
    }
    #[getter]
    fn nu(&self) -> Option<u32> {
        self.inner.nu
    }
    #[getter]
    fn delta_level(&self) -> Option<u32> {
        self.inner.delta_level
    }
    #[getter]
    fn ar_hilbert(&self) -> Vec<usize> {
        self.inner.ar_hilbert.clone()
    }
    fn verify_dimca_sticlaru(&self) -> bool {
        syzygy::verify_dimca_sticlaru(&self.inner)
    }
    fn to_json(&self) -> PyResult<String> {
        to_json(&self.inner)
    }
    fn __repr__(&self) -> String {
        format!("Profile({}, {:?}, tau={})", self.classification(), self.inner.generator_degrees, self.inner.tau)
    }
}

#[pyfunction]
fn analyze(text: &str) -> PyResult<PyProfile> {
    PyPolynomial::new(text)?.analyze()
}

#[pyfunction]
fn total_tjurina(text: &str) -> PyResult<i64> {
    Ok(combinatorics::total_tjurina(&census(text)?))
}

#[pyfunction]
fn bezout_check(text: &str) -> PyResult<bool> {
    combinatorics::bezout_check(&census(text)?).map_err(err)
}

/// `(d1, d2)` or `None` when the polynomial has no integer split.
#[pyfunction]
fn poincare_split(text: &str, h: i64) -> PyResult<Option<(i64, i64)>> {
    Ok(match combinatorics::poincare_split(&census(text)?, h).map_err(err)? {
        PoincareSplit::Split { d1, d2 } => Some((d1, d2)),
        PoincareSplit::NoRationalSplit => None,
    })
}

/// JSON `{status, lhs, rhs}` with exact rational sides.
#[pyfunction]
fn hirzebruch(text: &str) -> PyResult<String> {
    to_json(&combinatorics::hirzebruch_check(&census(text)?))
}

#[pyfunction]
fn pog_filter(text: &str) -> PyResult<String> {
    to_json(&classifier::pog_filter(&census(text)?).map_err(err)?)
}

/// Candidate censuses of `k` conics with nodes and tacnodes only.
#[pyfunction]
fn enumerate_candidates(k: u32) -> Vec<String> {
    classifier::enumerate_nodal_tacnodal(k).into_iter().filter(|v| v.is_candidate()).map(|v| v.census).collect()
}

#[pyfunction]
fn catalog_names() -> Vec<&'static str> {
    catalog::entries().into_iter().map(|e| e.name).collect()
}

#[pyfunction]
#[pyo3(signature = (name, param=None))]
fn catalog_run(py: Python<'_>, name: &str, param: Option<&str>) -> PyResult<String> {
    let entry = catalog::lookup(name).map_err(err)?;
    let value = param.map(catalog::parse_rational).transpose().map_err(err)?;
    let result = py.detach(|| catalog::run_entry(&entry, value.as_ref(), None)).map_err(err)?;
    to_json(&result)
}

#[pyfunction]
fn ziegler_compare(py: Python<'_>, left: &str, right: &str) -> PyResult<String> {
    let a = CurveRef::parse(left).map_err(err)?;
    let b = CurveRef::parse(right).map_err(err)?;
    to_json(&py.detach(|| catalog::ziegler_compare(&a, &b)).map_err(err)?)
}

#[pymodule]
#[pyo3(name = "conicsyz")]
fn conicsyz_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPolynomial>()?;
    m.add_class::<PyProfile>()?;
    m.add_function(wrap_pyfunction!(analyze, m)?)?;
    m.add_function(wrap_pyfunction!(total_tjurina, m)?)?;
    m.add_function(wrap_pyfunction!(bezout_check, m)?)?;
    m.add_function(wrap_pyfunction!(poincare_split, m)?)?;
    m.add_function(wrap_pyfunction!(hirzebruch, m)?)?;
    m.add_function(wrap_pyfunction!(pog_filter, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_candidates, m)?)?;
    m.add_function(wrap_pyfunction!(catalog_names, m)?)?;
    m.add_function(wrap_pyfunction!(catalog_run, m)?)?;
    m.add_function(wrap_pyfunction!(ziegler_compare, m)?)?;
    Ok(())
}
