//! Python bindings for the `carlitz` crate.
//!
//! Polynomials come back as `Poly` objects whose `coeffs` are field-element
//! indices (plain residues over a prime field), lowest degree first.
//! Classical values come back as `fractions.Fraction`.

use carlitz::classical::{self, AssocKind, HyperFamily, Method};
use carlitz::{CarlitzContext, CarlitzKind, Error, FqPoly, Limits, PolyStyle, RatFunc, StirlingKind};
use num_bigint::BigInt;
use num_rational::BigRational;
use pyo3::create_exception;
use pyo3::exceptions::{PyArithmeticError, PyException, PyValueError};
use pyo3::prelude::*;

create_exception!(carlitz_py, GuardError, PyException, "A size guard was exceeded.");

fn to_py(e: Error) -> PyErr {
    if e.is_guard() {
        return GuardError::new_err(e.to_string());
    }
    match e {
        Error::DivisionByZero | Error::NonUnit | Error::InexactDivision { .. } => {
            PyArithmeticError::new_err(e.to_string())
        }
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn fraction<'py>(py: Python<'py>, q: &BigRational) -> PyResult<Bound<'py, PyAny>> {
    let cls = py.import("fractions")?.getattr("Fraction")?;
    let num: BigInt = q.numer().clone();
    let den: BigInt = q.denom().clone();
    cls.call1((num, den))
}

/// Element of `F_r[T]`.
#[pyclass(name = "Poly", module = "carlitz_py", frozen, eq, hash, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PyPoly(FqPoly);

#[pymethods]
impl PyPoly {
    #[getter]
    fn coeffs(&self) -> Vec<u32> {
        self.0.coeffs().iter().map(|c| c.index()).collect()
    }

    /// `None` for the zero polynomial.
    #[getter]
    fn degree(&self) -> Option<usize> {
        self.0.degree()
    }

    /// Text form with coefficients as signed residues.
    fn balanced(&self) -> String {
        self.0.display(PolyStyle::Balanced)
    }

    fn __str__(&self) -> String {
        self.0.display(PolyStyle::Canonical)
    }

    fn __repr__(&self) -> String {
        format!("Poly('{}')", self.0.display(PolyStyle::Canonical))
    }
}

/// Element of `F_r(T)`, reduced with a monic denominator.
#[pyclass(name = "RatFunc", module = "carlitz_py", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq)]
pub struct PyRatFunc(RatFunc);

#[pymethods]
impl PyRatFunc {
    #[getter]
    fn num(&self) -> PyPoly {
        PyPoly(self.0.num().clone())
    }

    #[getter]
    fn den(&self) -> PyPoly {
        PyPoly(self.0.den().clone())
    }

    fn balanced(&self) -> String {
        self.0.display(PolyStyle::Balanced)
    }

    fn __str__(&self) -> String {
        self.0.display(PolyStyle::Canonical)
    }

    fn __repr__(&self) -> String {
        format!("RatFunc('{}')", self.0.display(PolyStyle::Canonical))
    }
}

fn stirling_kind(kind: &str) -> PyResult<StirlingKind> {
    match kind {
        "first" => Ok(StirlingKind::First),
        "second" => Ok(StirlingKind::Second),
        _ => Err(PyValueError::new_err(format!("kind must be 'first' or 'second', got {kind:?}"))),
    }
}

/// Carlitz objects over `F_r[T]`. Tables are cached per context.
#[pyclass(name = "Context", module = "carlitz_py", frozen)]
pub struct PyContext(CarlitzContext);

#[pymethods]
impl PyContext {
    #[new]
    #[pyo3(signature = (r, unsafe_limits = false))]
    fn new(r: u32, unsafe_limits: bool) -> PyResult<Self> {
        let limits = if unsafe_limits { Limits::unlimited() } else { Limits::from_env().map_err(to_py)? };
        CarlitzContext::with_limits(r, limits).map(PyContext).map_err(to_py)
    }

    #[getter]
    fn r(&self) -> u32 {
        self.0.r()
    }

    fn bracket(&self, i: u32) -> PyResult<PyPoly> {
        self.0.bracket(i).map(PyPoly).map_err(to_py)
    }

    fn d(&self, i: u32) -> PyResult<PyPoly> {
        self.0.d(i).map(PyPoly).map_err(to_py)
    }

    fn l(&self, i: u32) -> PyResult<PyPoly> {
        self.0.l(i).map(PyPoly).map_err(to_py)
    }

    fn factorial(&self, n: u64) -> PyResult<PyPoly> {
        self.0.carlitz_factorial(n).map(PyPoly).map_err(to_py)
    }

    /// Coefficients of `z^(r^i)` in `e_n(z)`, `i = 0..=n`.
    fn e_n(&self, n: u32) -> PyResult<Vec<PyPoly>> {
        let e = self.0.e_n(n).map_err(to_py)?;
        Ok(e.coeffs().iter().cloned().map(PyPoly).collect())
    }

    fn stf_a(&self, n: u32, k: u32) -> PyResult<PyPoly> {
        self.0.stf_a(n, k).map(PyPoly).map_err(to_py)
    }

    fn sts_a(&self, n: u32, k: u32) -> PyResult<PyPoly> {
        self.0.sts_a(n, k).map(PyPoly).map_err(to_py)
    }

    #[pyo3(signature = (kind, n, k))]
    fn stirling_a(&self, kind: &str, n: u32, k: u32) -> PyResult<PyPoly> {
        self.0.stirling_a(stirling_kind(kind)?, n, k).map(PyPoly).map_err(to_py)
    }

    #[pyo3(signature = (max_n = None))]
    fn bc(&self, max_n: Option<usize>) -> PyResult<Vec<PyRatFunc>> {
        self.carlitz_numbers(CarlitzKind::Bernoulli, max_n)
    }

    #[pyo3(signature = (max_n = None))]
    fn cc(&self, max_n: Option<usize>) -> PyResult<Vec<PyRatFunc>> {
        self.carlitz_numbers(CarlitzKind::Cauchy, max_n)
    }

    fn delta(&self, l: u32) -> PyResult<PyRatFunc> {
        self.0.delta_identity(l).map(PyRatFunc).map_err(to_py)
    }

    /// Returns `(checked, violations)`, each violation `(identity, n, i)`.
    fn verify_orthogonality(&self, max_n: u32) -> PyResult<(usize, Vec<(u8, u32, u32)>)> {
        let report = carlitz::verify_orthogonality(&self.0, max_n).map_err(to_py)?;
        let bad = report.violations.iter().map(|v| (v.identity, v.n, v.i)).collect();
        Ok((report.checked, bad))
    }
}

impl PyContext {
    fn carlitz_numbers(&self, kind: CarlitzKind, max_n: Option<usize>) -> PyResult<Vec<PyRatFunc>> {
        let max_n = max_n.unwrap_or_else(|| self.0.default_max_n());
        let seq = self.0.bc_cc_numbers(kind, max_n).map_err(to_py)?;
        Ok(seq.values.into_iter().map(PyRatFunc).collect())
    }
}

/// `family` is `"hb"` or `"hc"`; `method` one of series, strict, weak, assoc.
#[pyfunction]
#[pyo3(signature = (family, big_n, max_n, method = "series"))]
fn hyper_numbers<'py>(
    py: Python<'py>,
    family: &str,
    big_n: u64,
    max_n: u64,
    method: &str,
) -> PyResult<Vec<Bound<'py, PyAny>>> {
    let family = match family {
        "hb" => HyperFamily::Bernoulli,
        "hc" => HyperFamily::Cauchy,
        _ => return Err(PyValueError::new_err(format!("family must be 'hb' or 'hc', got {family:?}"))),
    };
    let method: Method = method.parse().map_err(to_py)?;
    let limits = Limits::from_env().map_err(to_py)?;
    let seq = classical::hyper_numbers(family, big_n, max_n, method, &limits).map_err(to_py)?;
    seq.values.iter().map(|q| fraction(py, q)).collect()
}

/// Associated Stirling number `n! [x^n] g(x)^k / k!` with terms of index `>= m`.
#[pyfunction]
fn assoc_stirling<'py>(py: Python<'py>, kind: &str, m: u64, n: u64, k: u64) -> PyResult<Bound<'py, PyAny>> {
    let kind = match kind {
        "first" => AssocKind::First,
        "second" => AssocKind::Second,
        _ => return Err(PyValueError::new_err(format!("kind must be 'first' or 'second', got {kind:?}"))),
    };
    let v = classical::assoc_stirling(kind, m, n, k).map_err(to_py)?;
    fraction(py, &v)
}

#[pymodule]
fn carlitz_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPoly>()?;
    m.add_class::<PyRatFunc>()?;
    m.add_class::<PyContext>()?;
    m.add_function(wrap_pyfunction!(hyper_numbers, m)?)?;
    m.add_function(wrap_pyfunction!(assoc_stirling, m)?)?;
    m.add("GuardError", m.py().get_type::<GuardError>())?;
    Ok(())
}
