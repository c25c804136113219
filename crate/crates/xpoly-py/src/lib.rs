//! Python view of the library: family specs, zero extraction, flows and the
//! verification suites. Complex zeros cross the boundary as Python complex.

use num_complex::Complex64;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;
use xpoly::{Domain, Family, FamilySpec, Precision, RootConfig};

fn err(e: xpoly::Error) -> PyErr {
    match e {
        xpoly::Error::ParameterViolation(_)
        | xpoly::Error::DegreeZero { .. }
        | xpoly::Error::DegenerateDegree { .. } => PyValueError::new_err(e.to_string()),
        other => PyRuntimeError::new_err(other.to_string()),
    }
}

/// One family member: family name, continuous parameters, deformation
/// degree ell and index n.
#[pyclass(name = "FamilySpec", frozen)]
struct PySpec {
    inner: FamilySpec,
}

#[pymethods]
impl PySpec {
    #[new]
    #[pyo3(signature = (family, g, h, ell, n))]
    fn new(family: &str, g: f64, h: Option<f64>, ell: usize, n: usize) -> PyResult<Self> {
        let family: Family = family.parse().map_err(err)?;
        Ok(PySpec {
            inner: FamilySpec::new(family, g, h, ell, n).map_err(err)?,
        })
    }

    #[getter]
    fn family(&self) -> String {
        self.inner.family.to_string()
    }

    #[getter]
    fn g(&self) -> f64 {
        self.inner.g
    }

    #[getter]
    fn h(&self) -> Option<f64> {
        self.inner.h
    }

    #[getter]
    fn ell(&self) -> usize {
        self.inner.ell
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n
    }

    #[getter]
    fn degree(&self) -> usize {
        self.inner.ell + self.inner.n
    }

    #[getter]
    fn domain(&self) -> String {
        Domain::of(self.inner.family).to_string()
    }

    fn __repr__(&self) -> String {
        format!(
            "FamilySpec({}, g={}, h={:?}, ell={}, n={})",
            self.inner.family, self.inner.g, self.inner.h, self.inner.ell, self.inner.n
        )
    }
}

/// Monomial coefficients (ascending) and the shared power-of-two exponent:
/// the polynomial is sum(c[k] * x**k) * 2**exp2.
#[pyfunction]
fn coefficients(spec: &PySpec) -> PyResult<(Vec<f64>, i64)> {
    let p = xpoly::exceptional_poly(&spec.inner).map_err(err)?;
    Ok((p.coeffs().iter().map(|c| c.to_f64()).collect(), p.exp2()))
}

/// Value of the polynomial at a real point, computed by the stable
/// recurrence route (no coefficient cancellation at any degree).
#[pyfunction]
fn value_at(spec: &PySpec, x: f64) -> PyResult<f64> {
    Ok(xpoly::exceptional_value(&spec.inner, x).map_err(err)?.value())
}

/// The n real zeros inside the orthogonality domain, ascending.
#[pyfunction]
fn ordinary_zeros(spec: &PySpec) -> PyResult<Vec<f64>> {
    xpoly::ordinary_zeros(&spec.inner).map_err(err)
}

/// The ell extra zeros, by Newton continuation from the n = 0 member.
#[pyfunction]
fn extra_zeros(spec: &PySpec) -> PyResult<Vec<Complex64>> {
    let mut zs = xpoly::extra_zeros(&spec.inner).map_err(err)?;
    zs.sort_by(|a, b| {
        a.re.total_cmp(&b.re)
            .then(a.im.abs().total_cmp(&b.im.abs()))
            .then(a.im.total_cmp(&b.im))
    });
    Ok(zs)
}

/// Every zero with its class:
/// {"ordinary": [...], "extra": [...], "extra_real": [...], "domain": str}.
#[pyfunction]
#[pyo3(signature = (spec, tol = 1e-8))]
fn classified_zeros<'py>(
    py: Python<'py>,
    spec: &PySpec,
    tol: f64,
) -> PyResult<Bound<'py, PyDict>> {
    let ordinary = xpoly::ordinary_zeros(&spec.inner).map_err(err)?;
    let extra = extra_zeros(spec)?;
    let extra_real: Vec<f64> = extra
        .iter()
        .filter(|z| z.im.abs() <= tol * (1.0 + z.norm()))
        .map(|z| z.re)
        .collect();
    let d = PyDict::new(py);
    d.set_item("ordinary", ordinary)?;
    d.set_item("extra", extra)?;
    d.set_item("extra_real", extra_real)?;
    d.set_item("domain", Domain::of(spec.inner.family).to_string())?;
    Ok(d)
}

/// Zeros of the deforming polynomial, shifted or not, sorted by (re, im).
#[pyfunction]
#[pyo3(signature = (spec, shifted = false))]
fn deforming_zeros(spec: &PySpec, shifted: bool) -> PyResult<Vec<Complex64>> {
    let p = xpoly::deforming_poly(&spec.inner, shifted).map_err(err)?;
    if p.degree() == Some(0) {
        return Ok(vec![]);
    }
    let cfg = RootConfig {
        precision: Precision::Extended,
        ..RootConfig::default()
    };
    let mut roots = xpoly::find_roots(&p, &cfg).map_err(err)?.roots;
    roots.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    Ok(roots)
}

/// Track the extra zeros across an ascending degree list. Returns
/// {"xi": [...], "xi_shifted": [...], "beta": [[...], ...]} where beta[i][k]
/// is the zero at n_list[i] flowing from xi_shifted[k] toward xi[k].
#[pyfunction]
fn extra_zero_flow<'py>(
    py: Python<'py>,
    spec: &PySpec,
    n_list: Vec<usize>,
) -> PyResult<Bound<'py, PyDict>> {
    let flow = xpoly::extra_zero_flow(&spec.inner, &n_list).map_err(err)?;
    let d = PyDict::new(py);
    d.set_item("xi", flow.xi)?;
    d.set_item("xi_shifted", flow.xi_shifted)?;
    d.set_item("beta", flow.beta)?;
    Ok(d)
}

fn report_dict<'py>(py: Python<'py>, r: &xpoly::VerificationReport) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("check_name", &r.check_name)?;
    d.set_item("params", &r.params)?;
    d.set_item("passed", r.passed)?;
    d.set_item("evidence", r.evidence.clone())?;
    d.set_item("tolerance_used", r.tolerance_used)?;
    Ok(d)
}

/// Run one verification suite over the published parameter grid. Suites:
/// counts, interlacing, flow, structure, ell-flow, large-param, clustering,
/// all. Returns a list of report dicts.
#[pyfunction]
fn run_suite<'py>(py: Python<'py>, suite: &str) -> PyResult<Vec<Bound<'py, PyDict>>> {
    let reports = xpoly::run_suite(suite).map_err(err)?;
    reports.iter().map(|r| report_dict(py, r)).collect()
}

/// Count law check for one spec: exactly n ordinary and ell extra zeros.
#[pyfunction]
fn verify_counts<'py>(py: Python<'py>, spec: &PySpec) -> PyResult<Bound<'py, PyDict>> {
    report_dict(py, &xpoly::verify_counts(&spec.inner))
}

#[pymodule]
fn xpoly_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PySpec>()?;
    m.add_function(wrap_pyfunction!(coefficients, m)?)?;
    m.add_function(wrap_pyfunction!(value_at, m)?)?;
    m.add_function(wrap_pyfunction!(ordinary_zeros, m)?)?;
    m.add_function(wrap_pyfunction!(extra_zeros, m)?)?;
    m.add_function(wrap_pyfunction!(classified_zeros, m)?)?;
    m.add_function(wrap_pyfunction!(deforming_zeros, m)?)?;
    m.add_function(wrap_pyfunction!(extra_zero_flow, m)?)?;
    m.add_function(wrap_pyfunction!(run_suite, m)?)?;
    m.add_function(wrap_pyfunction!(verify_counts, m)?)?;
    Ok(())
}
