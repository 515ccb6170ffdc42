//! Python module `koornwinder`. Rationals cross the boundary as strings
//! (`"p/q"`); anything whose `str()` parses is accepted on input, so `int`
//! and `fractions.Fraction` work directly.

use koornwinder::diffeq::{self, CoeffSet as CoreCoeffSet};
use koornwinder::inversion::{self, RhsSequence};
use koornwinder::rational::{self, Rational};
use koornwinder::suites::{self, Suite, SuiteConfig};
use koornwinder::ultraspherical::ultra_def1;
use koornwinder::{Error, Poly as CorePoly};
use pyo3::exceptions::{PyArithmeticError, PyValueError, PyZeroDivisionError};
use pyo3::prelude::*;

fn to_py_err(e: Error) -> PyErr {
    match e {
        Error::DivisionByZero => PyZeroDivisionError::new_err(e.to_string()),
        Error::Pole { .. } | Error::Consistency(_) => PyArithmeticError::new_err(e.to_string()),
        Error::Domain(_) | Error::Parse { .. } => PyValueError::new_err(e.to_string()),
    }
}

fn rat(obj: &Bound<'_, PyAny>) -> PyResult<Rational> {
    let s = obj.str()?;
    rational::parse(s.to_str()?).map_err(to_py_err)
}

fn alpha_arg(obj: &Bound<'_, PyAny>) -> PyResult<Rational> {
    let a = rat(obj)?;
    diffeq::check_alpha(&a).map_err(to_py_err)?;
    Ok(a)
}

fn rat_opt(obj: Option<&Bound<'_, PyAny>>) -> PyResult<Rational> {
    obj.map_or(Ok(rational::int(0)), rat)
}

fn fmt(r: &Rational) -> String {
    rational::format(r)
}

/// Dense polynomial over the rationals, ascending coefficients.
#[pyclass(name = "Poly", eq, hash, frozen, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PyPoly {
    inner: CorePoly,
}

impl From<CorePoly> for PyPoly {
    fn from(inner: CorePoly) -> Self {
        PyPoly { inner }
    }
}

#[pymethods]
impl PyPoly {
    #[new]
    #[pyo3(signature = (coeffs = Vec::new()))]
    fn new(coeffs: Vec<Bound<'_, PyAny>>) -> PyResult<Self> {
        let cs = coeffs.iter().map(rat).collect::<PyResult<Vec<_>>>()?;
        Ok(CorePoly::from_coeffs(cs).into())
    }

    #[staticmethod]
    fn x() -> Self {
        CorePoly::x().into()
    }

    fn coeffs(&self) -> Vec<String> {
        self.inner.to_strings()
    }

    fn degree(&self) -> Option<usize> {
        self.inner.degree()
    }

    fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    fn eval(&self, x: &Bound<'_, PyAny>) -> PyResult<String> {
        Ok(fmt(&self.inner.eval(&rat(x)?)))
    }

    #[pyo3(signature = (i = 1))]
    fn derivative(&self, i: usize) -> Self {
        self.inner.derivative(i).into()
    }

    fn scale(&self, c: &Bound<'_, PyAny>) -> PyResult<Self> {
        Ok(self.inner.scale(&rat(c)?).into())
    }

    fn __add__(&self, other: PyRef<'_, PyPoly>) -> Self {
        (&self.inner + &other.inner).into()
    }

    fn __sub__(&self, other: PyRef<'_, PyPoly>) -> Self {
        (&self.inner - &other.inner).into()
    }

    fn __mul__(&self, other: PyRef<'_, PyPoly>) -> Self {
        (&self.inner * &other.inner).into()
    }

    fn __neg__(&self) -> Self {
        (-&self.inner).into()
    }

    fn __pow__(&self, e: usize, _modulo: Option<usize>) -> Self {
        self.inner.pow(e).into()
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Poly({:?})", self.inner.to_strings())
    }
}

/// Coefficients b_i, c_i and a0(n) of the differential operator for one alpha and a0(1).
#[pyclass(name = "CoeffSet", frozen)]
pub struct PyCoeffSet {
    inner: CoreCoeffSet,
}

#[pymethods]
impl PyCoeffSet {
    /// Closed-form coefficients for i = 1..=max_i and a0(n) for n <= a0_bound.
    #[staticmethod]
    #[pyo3(signature = (alpha, max_i, a01 = None, a0_bound = 10))]
    fn closed_form(
        alpha: &Bound<'_, PyAny>,
        max_i: usize,
        a01: Option<&Bound<'_, PyAny>>,
        a0_bound: usize,
    ) -> PyResult<Self> {
        let inner = CoreCoeffSet::closed_form(&alpha_arg(alpha)?, &rat_opt(a01)?, max_i, a0_bound)
            .map_err(to_py_err)?;
        Ok(PyCoeffSet { inner })
    }

    /// Same coefficients, obtained by solving the derivative system.
    #[staticmethod]
    #[pyo3(signature = (alpha, max_i, a01 = None))]
    fn via_inversion(alpha: &Bound<'_, PyAny>, max_i: usize, a01: Option<&Bound<'_, PyAny>>) -> PyResult<Self> {
        let inner = diffeq::coeffs_via_inversion(&alpha_arg(alpha)?, &rat_opt(a01)?, max_i).map_err(to_py_err)?;
        Ok(PyCoeffSet { inner })
    }

    #[getter]
    fn alpha(&self) -> String {
        fmt(self.inner.alpha())
    }

    #[getter]
    fn a01(&self) -> String {
        fmt(self.inner.a0_1())
    }

    #[getter]
    fn max_i(&self) -> usize {
        self.inner.max_i()
    }

    fn a(&self, i: usize) -> Option<PyPoly> {
        self.inner.a(i).map(Into::into)
    }

    fn b(&self, i: usize) -> Option<PyPoly> {
        self.inner.b(i).cloned().map(Into::into)
    }

    fn c(&self, i: usize) -> Option<PyPoly> {
        self.inner.c(i).cloned().map(Into::into)
    }

    fn a0(&self, n: usize) -> String {
        fmt(&self.inner.a0(n))
    }

    /// a0 * p + sum a_i D^i p
    fn apply(&self, a0: &Bound<'_, PyAny>, p: PyRef<'_, PyPoly>) -> PyResult<PyPoly> {
        self.inner.apply(&rat(a0)?, &p.inner).map(Into::into).map_err(to_py_err)
    }
}

/// Classical ultraspherical polynomial P_n^{(alpha,alpha)}.
#[pyfunction]
fn ultraspherical(n: usize, alpha: &Bound<'_, PyAny>) -> PyResult<PyPoly> {
    Ok(ultra_def1(n, &rat(alpha)?).into())
}

/// Generalized polynomial P_n^{alpha,alpha,M,M}.
#[pyfunction]
fn generalized(n: usize, alpha: &Bound<'_, PyAny>, m: &Bound<'_, PyAny>) -> PyResult<PyPoly> {
    diffeq::gen_poly(n, &rat(alpha)?, &rat(m)?).map(Into::into).map_err(to_py_err)
}

/// (C0, C1) of the generalized polynomial.
#[pyfunction]
fn c0c1(n: usize, alpha: &Bound<'_, PyAny>, m: &Bound<'_, PyAny>) -> PyResult<(String, String)> {
    let (c0, c1) = diffeq::gen_c0c1(n, &rat(alpha)?, &rat(m)?).map_err(to_py_err)?;
    Ok((fmt(&c0), fmt(&c1)))
}

#[pyfunction]
#[pyo3(signature = (n, alpha, a01 = None))]
fn a0(n: usize, alpha: &Bound<'_, PyAny>, a01: Option<&Bound<'_, PyAny>>) -> PyResult<String> {
    Ok(fmt(&diffeq::a0_closed(n, &rat(alpha)?, &rat_opt(a01)?)))
}

#[pyfunction]
fn b_coeff(i: usize) -> PyResult<PyPoly> {
    diffeq::b_coeff(i).map(Into::into).map_err(to_py_err)
}

#[pyfunction]
fn c_coeff(i: usize, alpha: &Bound<'_, PyAny>) -> PyResult<PyPoly> {
    diffeq::c_coeff(i, &rat(alpha)?).map(Into::into).map_err(to_py_err)
}

/// Residual of the full equation applied to the generalized polynomial; zero when it holds.
#[pyfunction]
#[pyo3(signature = (alpha, m, n, a01 = None))]
fn ode_residual(
    alpha: &Bound<'_, PyAny>,
    m: &Bound<'_, PyAny>,
    n: usize,
    a01: Option<&Bound<'_, PyAny>>,
) -> PyResult<PyPoly> {
    diffeq::ode_residual(&rat(alpha)?, &rat(m)?, n, &rat_opt(a01)?)
        .map(Into::into)
        .map_err(to_py_err)
}

#[pyfunction]
fn inversion_sum(i: usize, j: usize, alpha: &Bound<'_, PyAny>) -> PyResult<PyPoly> {
    inversion::inversion_sum(i, j, &rat(alpha)?).map(Into::into).map_err(to_py_err)
}

/// Solve for A_1.. given right-hand sides F_0, F_1, ... (F_0 must vanish).
#[pyfunction]
fn solve_system(alpha: &Bound<'_, PyAny>, rhs: Vec<PyRef<'_, PyPoly>>) -> PyResult<Vec<PyPoly>> {
    let entries = rhs.iter().map(|p| p.inner.clone()).collect();
    let seq = RhsSequence::new(rat(alpha)?, entries).map_err(to_py_err)?;
    let sol = inversion::solve_system(&seq).map_err(to_py_err)?;
    Ok(sol.into_entries().into_iter().map(Into::into).collect())
}

/// (order, leading coefficient) for integer alpha >= 0 with a0(1) = 0.
#[pyfunction]
#[pyo3(signature = (alpha, probe = None))]
fn finite_order(alpha: &Bound<'_, PyAny>, probe: Option<usize>) -> PyResult<(usize, PyPoly)> {
    let alpha = rat(alpha)?;
    let a = rational::to_nonneg_usize(&alpha)
        .ok_or_else(|| PyValueError::new_err("alpha must be a nonnegative integer"))?;
    let fo = diffeq::finite_order(&alpha, probe.unwrap_or(2 * a + 12)).map_err(to_py_err)?;
    Ok((fo.order, fo.leading.into()))
}

/// Run an identity suite; returns [(suite, checks, failures)].
#[pyfunction]
#[pyo3(signature = (suite = "all", alpha = None, bound = None))]
fn verify(
    suite: &str,
    alpha: Option<&Bound<'_, PyAny>>,
    bound: Option<usize>,
) -> PyResult<Vec<(String, usize, usize)>> {
    let suite: Suite = suite.parse().map_err(to_py_err)?;
    let config = SuiteConfig {
        alphas: alpha.map(rat).transpose()?.map(|a| vec![a]),
        bound,
        ..Default::default()
    };
    let reports = suites::run(suite, &config).map_err(to_py_err)?;
    Ok(reports
        .into_iter()
        .map(|r| (r.suite.clone(), r.checks, r.failures.len()))
        .collect())
}

#[pymodule]
#[pyo3(name = "koornwinder")]
fn koornwinder_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPoly>()?;
    m.add_class::<PyCoeffSet>()?;
    m.add_function(wrap_pyfunction!(ultraspherical, m)?)?;
    m.add_function(wrap_pyfunction!(generalized, m)?)?;
    m.add_function(wrap_pyfunction!(c0c1, m)?)?;
    m.add_function(wrap_pyfunction!(a0, m)?)?;
    m.add_function(wrap_pyfunction!(b_coeff, m)?)?;
    m.add_function(wrap_pyfunction!(c_coeff, m)?)?;
    m.add_function(wrap_pyfunction!(ode_residual, m)?)?;
    m.add_function(wrap_pyfunction!(inversion_sum, m)?)?;
    m.add_function(wrap_pyfunction!(solve_system, m)?)?;
    m.add_function(wrap_pyfunction!(finite_order, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
