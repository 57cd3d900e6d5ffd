//! Python bindings: the `schubert` extension module.

use num_bigint::BigInt;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyComplex, PyDict};

use schubert_core::asymptotics::{self, AsymptoteRow};
use schubert_core::combinatorics;
use schubert_core::enumerate::{self, CountReport};
use schubert_core::polynomial::TorusPoint;
use schubert_core::schur;
use schubert_core::{Partition, Regime, RootPolynomial, SparsePoly};

fn err(e: schubert_core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn regime(name: &str) -> PyResult<Regime> {
    name.parse().map_err(err)
}

fn partition(parts: Vec<u32>) -> PyResult<Partition> {
    Partition::new(parts).map_err(err)
}

/// Sparse multivariate polynomial with integer coefficients.
#[pyclass(name = "Poly", module = "schubert", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyPoly(SparsePoly);

#[pymethods]
impl PyPoly {
    /// Parses the canonical text form, e.g. `"3 * x1^2 x2^0 + -1 * x1^0 x2^1"`.
    #[new]
    fn new(text: &str, nvars: usize) -> PyResult<Self> {
        SparsePoly::parse(text, nvars).map(PyPoly).map_err(err)
    }

    #[staticmethod]
    fn from_terms(nvars: usize, terms: Vec<(Vec<u32>, BigInt)>) -> PyResult<Self> {
        SparsePoly::from_terms(nvars, terms).map(PyPoly).map_err(err)
    }

    #[getter]
    fn nvars(&self) -> usize {
        self.0.nvars()
    }

    #[getter]
    fn degree(&self) -> Option<u32> {
        self.0.total_degree()
    }

    fn terms(&self) -> Vec<(Vec<u32>, BigInt)> {
        self.0
            .terms()
            .rev()
            .map(|(m, c)| (m.exponents().to_vec(), c.clone()))
            .collect()
    }

    fn coefficient(&self, exponents: Vec<u32>) -> PyResult<BigInt> {
        self.0.coefficient_at(&exponents).map_err(err)
    }

    fn is_symmetric(&self) -> bool {
        self.0.is_symmetric()
    }

    fn exact_div(&self, other: &PyPoly) -> PyResult<PyPoly> {
        self.0.exact_div(&other.0).map(PyPoly).map_err(err)
    }

    fn exact_sqrt(&self) -> PyResult<PyPoly> {
        self.0.exact_sqrt().map(PyPoly).map_err(err)
    }

    fn eval_torus<'py>(&self, py: Python<'py>, angles: Vec<f64>) -> PyResult<Bound<'py, PyComplex>> {
        let v = self.0.eval_torus(&TorusPoint::new(angles)).map_err(err)?;
        Ok(PyComplex::from_doubles(py, v.re, v.im))
    }

    fn __add__(&self, other: &PyPoly) -> PyResult<PyPoly> {
        self.0.try_add(&other.0).map(PyPoly).map_err(err)
    }

    fn __sub__(&self, other: &PyPoly) -> PyResult<PyPoly> {
        self.0.try_sub(&other.0).map(PyPoly).map_err(err)
    }

    fn __mul__(&self, other: &PyPoly) -> PyResult<PyPoly> {
        self.0.try_mul(&other.0).map(PyPoly).map_err(err)
    }

    fn __neg__(&self) -> PyPoly {
        PyPoly(-&self.0)
    }

    fn __pow__(&self, exponent: u32, _modulo: Option<u32>) -> PyPoly {
        PyPoly(self.0.pow(exponent))
    }

    fn __eq__(&self, other: &PyPoly) -> bool {
        self.0 == other.0
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Poly({:?}, {})", self.0.to_string(), self.0.nvars())
    }
}

fn report_dict<'py>(py: Python<'py>, r: &CountReport) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("regime", r.regime.to_string())?;
    d.set_item("degrees", r.degrees.clone())?;
    d.set_item("k", r.k)?;
    d.set_item("m", r.m)?;
    d.set_item("value", r.value.clone())?;
    d.set_item("feasible", r.feasible)?;
    d.set_item("orientable_grassmannian", r.orientability.orientable_grassmannian)?;
    d.set_item("sym_power_orientable", r.orientability.sym_power_orientable)?;
    d.set_item("euler_number_defined", r.orientability.euler_number_defined)?;
    d.set_item("elapsed_s", r.elapsed.as_secs_f64())?;
    Ok(d)
}

fn row_dict<'py>(py: Python<'py>, r: &AsymptoteRow) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("family", &r.family)?;
    d.set_item("parameter", r.parameter)?;
    d.set_item("value", r.value.clone())?;
    d.set_item("exact_log", r.exact_log)?;
    d.set_item("exact_log10", r.exact_log10)?;
    d.set_item("prediction", r.prediction)?;
    d.set_item("ratio", r.ratio)?;
    d.set_item("normalized", r.normalized)?;
    d.set_item("bound", r.bound)?;
    d.set_item("within_bound", r.within_bound)?;
    Ok(d)
}

/// Count of complex (k-1)-planes on a generic degree-d hypersurface.
#[pyfunction]
fn complex_count<'py>(py: Python<'py>, d: u32, k: u32) -> PyResult<Bound<'py, PyDict>> {
    let r = py.detach(|| enumerate::complex_count(d, k)).map_err(err)?;
    report_dict(py, &r)
}

/// Signed count of real (2k-1)-planes, in absolute value; d must be odd.
#[pyfunction]
fn real_count<'py>(py: Python<'py>, d: u32, k: u32) -> PyResult<Bound<'py, PyDict>> {
    let r = py.detach(|| enumerate::real_count(d, k)).map_err(err)?;
    report_dict(py, &r)
}

#[pyfunction]
fn cubic_ci_real<'py>(py: Python<'py>, r: u32) -> PyResult<Bound<'py, PyDict>> {
    let rep = py.detach(|| enumerate::cubic_ci_real(r)).map_err(err)?;
    report_dict(py, &rep)
}

#[pyfunction]
fn catalan_substitution(r: u32) -> BigInt {
    enumerate::catalan_substitution(r)
}

#[pyfunction]
fn incidence_real(n: u32) -> PyResult<BigInt> {
    enumerate::incidence_real(n).map_err(err)
}

#[pyfunction]
fn incidence_complex(n: u32) -> PyResult<BigInt> {
    enumerate::incidence_complex(n).map_err(err)
}

#[pyfunction]
fn catalan(n: u32) -> BigInt {
    combinatorics::catalan(n).into()
}

#[pyfunction]
#[pyo3(signature = (d, k, regime = "complex"))]
fn feasibility<'py>(py: Python<'py>, d: u32, k: u32, regime: &str) -> PyResult<Bound<'py, PyDict>> {
    let f = combinatorics::feasibility(d, k, self::regime(regime)?).map_err(err)?;
    let out = PyDict::new(py);
    out.set_item("d", f.d)?;
    out.set_item("k", f.k)?;
    out.set_item("regime", f.regime.to_string())?;
    out.set_item("sections", f.sections)?;
    out.set_item("m", f.m)?;
    out.set_item("odd_degree", f.odd_degree)?;
    out.set_item("feasible", f.is_feasible())?;
    Ok(out)
}

#[pyfunction]
fn complex_root_poly(d: u32, k: u32) -> PyResult<PyPoly> {
    enumerate::complex_root_poly(d, k)
        .map(|f| PyPoly(f.into_poly()))
        .map_err(err)
}

#[pyfunction]
#[pyo3(signature = (d, k = 2))]
fn real_root_poly(d: u32, k: u32) -> PyResult<PyPoly> {
    enumerate::real_root_poly(d, k)
        .map(|f| PyPoly(f.into_poly()))
        .map_err(err)
}

#[pyfunction]
#[pyo3(signature = (parts, regime = "complex"))]
fn schur_polynomial(parts: Vec<u32>, regime: &str) -> PyResult<PyPoly> {
    let alpha = partition(parts)?;
    let s = match self::regime(regime)? {
        Regime::Complex => schur::schur_polynomial(&alpha),
        Regime::Real => schur::real_schur_polynomial(&alpha),
    };
    s.map(|s| PyPoly(s.into_poly())).map_err(err)
}

fn root(f: &PyPoly, regime: Regime) -> PyResult<RootPolynomial> {
    match regime {
        Regime::Complex => RootPolynomial::complex(f.0.clone()),
        Regime::Real => RootPolynomial::real(f.0.clone()),
    }
    .map_err(err)
}

/// λ_α(f): exact Schur coefficient (up to sign in the real regime).
#[pyfunction]
#[pyo3(signature = (f, parts, regime = "complex"))]
fn schur_coefficient(f: &PyPoly, parts: Vec<u32>, regime: &str) -> PyResult<BigInt> {
    let regime = self::regime(regime)?;
    let alpha = partition(parts)?;
    let f = root(f, regime)?;
    let c = match regime {
        Regime::Complex => schur::schur_coefficient(&f, &alpha),
        Regime::Real => schur::real_schur_coefficient(&f, &alpha),
    };
    c.map(|c| c.value).map_err(err)
}

/// Torus quadrature of the same coefficient; `grid` defaults to the exactness threshold.
#[pyfunction]
#[pyo3(signature = (f, parts, regime = "complex", grid = None))]
fn numeric_schur_coefficient<'py>(
    py: Python<'py>,
    f: &PyPoly,
    parts: Vec<u32>,
    regime: &str,
    grid: Option<usize>,
) -> PyResult<Bound<'py, PyComplex>> {
    let regime = self::regime(regime)?;
    let alpha = partition(parts)?;
    let f = root(f, regime)?;
    let grid = match grid {
        Some(g) => g,
        None => schur::exactness_grid(f.poly().total_degree().unwrap_or(0), regime, &alpha)
            .map_err(err)?,
    };
    let v = py
        .detach(|| schur::numeric_schur_coefficient(&f, &alpha, grid))
        .map_err(err)?;
    Ok(PyComplex::from_doubles(py, v.re, v.im))
}

#[pyfunction]
fn torus_scan<'py>(py: Python<'py>, d: u32, grid: usize) -> PyResult<Bound<'py, PyDict>> {
    let s = py.detach(|| asymptotics::torus_scan(d, grid)).map_err(err)?;
    let out = PyDict::new(py);
    out.set_item("d", s.d)?;
    out.set_item("grid", s.grid)?;
    out.set_item("min_modulus", s.min_modulus)?;
    out.set_item("max_modulus", s.max_modulus)?;
    out.set_item("sign_constant", s.sign_constant)?;
    out.set_item("sign", s.sign)?;
    out.set_item("argmax_on_curve", s.argmax_on_curve())?;
    out.set_item("argmax_angles", s.argmax_angles.clone())?;
    Ok(out)
}

#[pyfunction]
fn closed_form_max(d: u32) -> PyResult<BigInt> {
    asymptotics::closed_form_max(d).map(BigInt::from).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (family, values, k = 2))]
fn asymptote_table<'py>(
    py: Python<'py>,
    family: &str,
    values: Vec<u32>,
    k: u32,
) -> PyResult<Vec<Bound<'py, PyDict>>> {
    let rows = py
        .detach(|| match family {
            "real" => asymptotics::real_asymptote_table(&values),
            "complex" => asymptotics::complex_asymptote_table(&values, k),
            "incidence" => asymptotics::incidence_asymptote_table(&values),
            other => Err(schubert_core::Error::InvalidParameter(format!(
                "unknown family {other:?}"
            ))),
        })
        .map_err(err)?;
    rows.iter().map(|r| row_dict(py, r)).collect()
}

#[pymodule]
fn schubert(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    m.add("ENGINE_VERSION", schubert_core::ENGINE_VERSION)?;
    m.add_class::<PyPoly>()?;
    m.add_function(wrap_pyfunction!(complex_count, m)?)?;
    m.add_function(wrap_pyfunction!(real_count, m)?)?;
    m.add_function(wrap_pyfunction!(cubic_ci_real, m)?)?;
    m.add_function(wrap_pyfunction!(catalan_substitution, m)?)?;
    m.add_function(wrap_pyfunction!(incidence_real, m)?)?;
    m.add_function(wrap_pyfunction!(incidence_complex, m)?)?;
    m.add_function(wrap_pyfunction!(catalan, m)?)?;
    m.add_function(wrap_pyfunction!(feasibility, m)?)?;
    m.add_function(wrap_pyfunction!(complex_root_poly, m)?)?;
    m.add_function(wrap_pyfunction!(real_root_poly, m)?)?;
    m.add_function(wrap_pyfunction!(schur_polynomial, m)?)?;
    m.add_function(wrap_pyfunction!(schur_coefficient, m)?)?;
    m.add_function(wrap_pyfunction!(numeric_schur_coefficient, m)?)?;
    m.add_function(wrap_pyfunction!(torus_scan, m)?)?;
    m.add_function(wrap_pyfunction!(closed_form_max, m)?)?;
    m.add_function(wrap_pyfunction!(asymptote_table, m)?)?;
    Ok(())
}
