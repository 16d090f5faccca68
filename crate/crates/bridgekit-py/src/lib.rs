//! Python bindings: `DtCode` plus functions for realization, invariants,
//! rational and Montesinos constructions, and catalog verification.

use num_bigint::BigInt;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use bridgekit::{corpus, invariants, realize, tangles, PlanarDiagram};

/// A validated Dowker-Thistlethwaite code.
#[pyclass(name = "DtCode", frozen, eq, hash, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyDtCode {
    inner: bridgekit::DtCode,
}

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn diagram(code: &PyDtCode) -> PyResult<PlanarDiagram> {
    let report = realize::realize(&code.inner);
    match report.obstruction() {
        Some(o) => Err(value_error(o)),
        None => Ok(report.into_diagram().expect("no obstruction means a diagram")),
    }
}

#[pymethods]
impl PyDtCode {
    #[new]
    fn new(values: Vec<i64>) -> PyResult<Self> {
        Ok(PyDtCode { inner: bridgekit::DtCode::new(values).map_err(value_error)? })
    }

    /// Parse a code from text such as "4 6 2".
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        Ok(PyDtCode { inner: bridgekit::parse_dt(text).map_err(value_error)? })
    }

    /// Number of crossings.
    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    fn values(&self) -> Vec<i64> {
        self.inner.values().to_vec()
    }

    /// The over/under pattern along the curve, as a string of O and U.
    fn over_under(&self) -> String {
        self.inner.over_under_sequence().to_string()
    }

    /// Bridges of the diagram this code describes.
    fn diagram_bridges(&self) -> usize {
        self.inner.diagram_bridges()
    }

    /// Least equivalent code over all starting labels and directions.
    fn canonical(&self) -> Self {
        PyDtCode { inner: self.inner.canonicalize() }
    }

    /// Whether the code embeds in the sphere.
    fn is_realizable(&self) -> bool {
        realize::is_realizable(&self.inner)
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("DtCode({:?})", self.inner.values())
    }
}

/// PD notation of the realized diagram, one "X a b c d" line per crossing.
#[pyfunction]
fn pd_notation(code: &PyDtCode) -> PyResult<String> {
    Ok(diagram(code)?.pd_text())
}

/// Writhe of the realized diagram.
#[pyfunction]
fn writhe(code: &PyDtCode) -> PyResult<i64> {
    Ok(diagram(code)?.writhe())
}

/// Alexander polynomial as (coefficients from t^0 upward, determinant).
#[pyfunction]
fn alexander(code: &PyDtCode) -> PyResult<(Vec<BigInt>, BigInt)> {
    let d = diagram(code)?;
    let r = invariants::alexander(&d).map_err(value_error)?;
    let coeffs = (0..=r.polynomial.max_exp().unwrap_or(0))
        .map(|e| r.polynomial.coeff(e))
        .collect();
    Ok((coeffs, r.determinant))
}

/// Knot determinant.
#[pyfunction]
fn determinant(code: &PyDtCode) -> PyResult<BigInt> {
    Ok(alexander(code)?.1)
}

/// Jones polynomial as (least exponent, coefficients upward from it).
#[pyfunction]
#[pyo3(signature = (code, guard = 24))]
fn jones(code: &PyDtCode, guard: usize) -> PyResult<(i64, Vec<BigInt>)> {
    let d = diagram(code)?;
    let p = invariants::jones_polynomial_with_guard(&d, guard).map_err(value_error)?;
    let min = p.min_exp().unwrap_or(0);
    let coeffs = (min..=p.max_exp().unwrap_or(0)).map(|e| p.coeff(e)).collect();
    Ok((min, coeffs))
}

/// Whether two diagrams have the same Alexander polynomial.
#[pyfunction]
fn same_alexander(a: &PyDtCode, b: &PyDtCode) -> PyResult<bool> {
    Ok(invariants::same_alexander(&diagram(a)?, &diagram(b)?))
}

/// DT code of the two-bridge knot b(p, q).
#[pyfunction]
fn rational_knot(p: i64, q: i64) -> PyResult<PyDtCode> {
    let f = tangles::Fraction::new(p, q).map_err(value_error)?;
    Ok(PyDtCode { inner: tangles::rational_knot(f).map_err(value_error)? })
}

/// Continued fraction expansion of p/q.
#[pyfunction]
fn continued_fraction(p: i64, q: i64) -> PyResult<Vec<i64>> {
    let f = tangles::Fraction::new(p, q).map_err(value_error)?;
    Ok(tangles::fraction_to_cf(f).terms().to_vec())
}

/// Evaluate continued fraction terms to (p, q).
#[pyfunction]
fn evaluate_continued_fraction(terms: Vec<i64>) -> PyResult<(i64, i64)> {
    if terms.is_empty() {
        return Err(value_error("need at least one term"));
    }
    let f = tangles::cf_to_fraction(&tangles::ContinuedFraction::new(terms))
        .map_err(value_error)?;
    Ok((f.numerator(), f.denominator()))
}

/// DT code of a Montesinos form "(a0; b1/a1, ...)".
#[pyfunction]
fn montesinos(form: &str) -> PyResult<PyDtCode> {
    let form = tangles::MontesinosForm::parse(form).map_err(value_error)?;
    Ok(PyDtCode { inner: tangles::montesinos_diagram(&form).map_err(value_error)? })
}

/// Bridge index read off a Montesinos form.
#[pyfunction]
fn montesinos_bridge_index(form: &str) -> PyResult<usize> {
    let form = tangles::MontesinosForm::parse(form).map_err(value_error)?;
    tangles::montesinos_bridge_index(&form).map_err(value_error)
}

/// Two-bridge fraction (p, q) recovered from a diagram's invariants.
#[pyfunction]
fn two_bridge_fraction(code: &PyDtCode) -> PyResult<(i64, i64)> {
    let f = tangles::two_bridge_fraction(&diagram(code)?).map_err(value_error)?;
    Ok((f.numerator(), f.denominator()))
}

/// Schubert equivalence of b(p, q) and b(p2, q2).
#[pyfunction]
#[pyo3(signature = (p, q, p2, q2, allow_mirror = true))]
fn two_bridge_equivalent(p: i64, q: i64, p2: i64, q2: i64, allow_mirror: bool) -> bool {
    tangles::two_bridge_equivalent(p, q, p2, q2, allow_mirror)
}

/// Names of all catalog entries, in catalog order.
#[pyfunction]
fn catalog_names() -> Vec<String> {
    corpus::builtin_corpus().iter().map(|e| e.name.clone()).collect()
}

/// One catalog row as (bridge number, knot code, bridge code).
#[pyfunction]
fn catalog_entry(name: &str) -> PyResult<(usize, PyDtCode, PyDtCode)> {
    let e = corpus::builtin_corpus()
        .iter()
        .find(|e| e.name == name)
        .ok_or_else(|| value_error(format!("no catalog entry named {name:?}")))?;
    Ok((
        e.bridge_number,
        PyDtCode { inner: e.knot_code.clone() },
        PyDtCode { inner: e.bridge_code.clone() },
    ))
}

/// Verify catalog entries; returns (name, passed, failure messages) per
/// entry. `names = None` verifies the whole catalog.
#[pyfunction]
#[pyo3(signature = (level = "bridges", names = None))]
fn verify_catalog(
    level: &str,
    names: Option<Vec<String>>,
) -> PyResult<Vec<(String, bool, Vec<String>)>> {
    let level: corpus::VerifyLevel = level.parse().map_err(value_error)?;
    let all = corpus::builtin_corpus();
    let selected: Vec<corpus::CorpusEntry> = match names {
        None => all.to_vec(),
        Some(names) => names
            .iter()
            .map(|name| {
                all.iter()
                    .find(|e| &e.name == name)
                    .cloned()
                    .ok_or_else(|| value_error(format!("no catalog entry named {name:?}")))
            })
            .collect::<PyResult<_>>()?,
    };
    Ok(corpus::verify_all(&selected, level)
        .into_iter()
        .map(|r| {
            let passed = r.passed();
            (r.name, passed, r.failures)
        })
        .collect())
}

#[pymodule]
fn bridgekit_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyDtCode>()?;
    m.add_function(wrap_pyfunction!(pd_notation, m)?)?;
    m.add_function(wrap_pyfunction!(writhe, m)?)?;
    m.add_function(wrap_pyfunction!(alexander, m)?)?;
    m.add_function(wrap_pyfunction!(determinant, m)?)?;
    m.add_function(wrap_pyfunction!(jones, m)?)?;
    m.add_function(wrap_pyfunction!(same_alexander, m)?)?;
    m.add_function(wrap_pyfunction!(rational_knot, m)?)?;
    m.add_function(wrap_pyfunction!(continued_fraction, m)?)?;
    m.add_function(wrap_pyfunction!(evaluate_continued_fraction, m)?)?;
    m.add_function(wrap_pyfunction!(montesinos, m)?)?;
    m.add_function(wrap_pyfunction!(montesinos_bridge_index, m)?)?;
    m.add_function(wrap_pyfunction!(two_bridge_fraction, m)?)?;
    m.add_function(wrap_pyfunction!(two_bridge_equivalent, m)?)?;
    m.add_function(wrap_pyfunction!(catalog_names, m)?)?;
    m.add_function(wrap_pyfunction!(catalog_entry, m)?)?;
    m.add_function(wrap_pyfunction!(verify_catalog, m)?)?;
    Ok(())
}
