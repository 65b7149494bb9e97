//! Python bindings. Complex numbers cross the boundary as Python `complex`,
//! series as lists of `complex` indexed by degree.

use num_complex::Complex64;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use starlike_core::bounds::{self as core_bounds, BoundTable};
use starlike_core::extremal::{self as core_extremal, NormalizedFunction};
use starlike_core::generator::{self as core_generator};
use starlike_core::membership::{self as core_membership, AnalyticFunction, SampleGrid};
use starlike_core::verify as core_verify;
use starlike_core::{Error, TruncatedSeries};

fn to_py(e: Error) -> PyErr {
    match e {
        Error::EvaluationFailure(_) | Error::TailNotConverged { .. } => PyRuntimeError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

/// Class parameters `(α₁, α₂)` with `0 < αᵢ ≤ 1`.
#[pyclass(name = "ClassParams", frozen, from_py_object)]
#[derive(Clone, Copy)]
pub struct PyClassParams(starlike_core::ClassParams);

#[pymethods]
impl PyClassParams {
    #[new]
    fn new(alpha1: f64, alpha2: f64) -> PyResult<Self> {
        starlike_core::ClassParams::new(alpha1, alpha2).map(Self).map_err(to_py)
    }

    #[staticmethod]
    fn symmetric(beta: f64) -> PyResult<Self> {
        starlike_core::ClassParams::symmetric(beta).map(Self).map_err(to_py)
    }

    #[getter]
    fn alpha1(&self) -> f64 {
        self.0.alpha1()
    }

    #[getter]
    fn alpha2(&self) -> f64 {
        self.0.alpha2()
    }

    #[getter]
    fn theta(&self) -> f64 {
        self.0.theta()
    }

    #[getter]
    fn p(&self) -> f64 {
        self.0.p()
    }

    #[getter]
    fn c(&self) -> Complex64 {
        self.0.c()
    }

    fn half_angle_cos(&self) -> f64 {
        self.0.half_angle_cos()
    }

    fn lambda1_modulus(&self) -> f64 {
        self.0.lambda1_modulus()
    }

    fn validity_radius(&self) -> f64 {
        self.0.validity_radius()
    }

    fn window(&self) -> (f64, f64) {
        self.0.window()
    }

    fn swapped(&self) -> Self {
        Self(self.0.swapped())
    }

    fn __repr__(&self) -> String {
        format!("ClassParams(alpha1={}, alpha2={})", self.0.alpha1(), self.0.alpha2())
    }
}

fn series(coeffs: Vec<Complex64>) -> PyResult<TruncatedSeries> {
    TruncatedSeries::new(coeffs).map_err(to_py)
}

fn normalized(coeffs: Vec<Complex64>) -> PyResult<NormalizedFunction> {
    NormalizedFunction::new(series(coeffs)?, "python").map_err(to_py)
}

#[pyfunction]
fn lambda_coeffs(params: PyClassParams, n_max: usize) -> Vec<Complex64> {
    core_generator::lambda_coeffs(&params.0, n_max)
}

#[pyfunction]
fn lambda_via_2f1(params: PyClassParams, n: usize) -> Complex64 {
    core_generator::lambda_via_2f1(&params.0, n)
}

#[pyfunction]
fn g_series(params: PyClassParams, order: usize) -> PyResult<Vec<Complex64>> {
    Ok(core_generator::g_series(&params.0, order).map_err(to_py)?.into_coeffs())
}

#[pyfunction]
fn g_eval(params: PyClassParams, z: Complex64) -> PyResult<Complex64> {
    core_generator::g_eval(&params.0, z).map_err(to_py)
}

#[pyfunction]
fn g_tilde_eval(params: PyClassParams, z: Complex64) -> PyResult<Complex64> {
    core_generator::g_tilde_eval(&params.0, z).map_err(to_py)
}

#[pyfunction]
fn omega_contains(params: PyClassParams, w: Complex64) -> PyResult<bool> {
    core_generator::omega_contains(&params.0, w).map_err(to_py)
}

#[pyfunction]
fn re_lower_bound(params: PyClassParams, r: f64) -> PyResult<f64> {
    core_bounds::re_lower_bound(&params.0, r).map_err(to_py)
}

#[pyfunction]
fn re_upper_bound(params: PyClassParams, r: f64) -> PyResult<f64> {
    core_bounds::re_upper_bound(&params.0, r).map_err(to_py)
}

#[pyfunction]
fn growth_bounds(params: PyClassParams, r: f64) -> PyResult<(f64, f64)> {
    core_bounds::growth_bounds(&params.0, r).map_err(to_py)
}

#[pyfunction]
fn gamma_bound(params: PyClassParams, n: usize) -> PyResult<f64> {
    if n < 1 {
        return Err(PyValueError::new_err("n must be at least 1"));
    }
    Ok(core_bounds::gamma_bound(&params.0, n))
}

#[pyfunction]
fn coeff_bound(params: PyClassParams, n: usize) -> PyResult<f64> {
    if n < 2 {
        return Err(PyValueError::new_err("n must be at least 2"));
    }
    Ok(core_bounds::coeff_bound(&params.0, n))
}

type BoundRow = (f64, Option<f64>, Option<f64>);

/// Rows `(index_or_radius, value, value_upper)` of a bound table.
/// `which` is one of `re`, `growth`, `gamma`, `coeff`.
#[pyfunction]
#[pyo3(signature = (params, which, radii = None, n_max = 32))]
fn bound_table(
    params: PyClassParams,
    which: &str,
    radii: Option<Vec<f64>>,
    n_max: usize,
) -> PyResult<Vec<BoundRow>> {
    let radii = radii.unwrap_or_else(|| (1..=9).map(|i| i as f64 / 10.0).collect());
    let table = match which {
        "re" => BoundTable::real_part(&params.0, &radii),
        "growth" => BoundTable::growth(&params.0, &radii),
        "gamma" => BoundTable::gamma(&params.0, n_max),
        "coeff" => BoundTable::coeff(&params.0, n_max),
        other => return Err(PyValueError::new_err(format!("unknown bound family {other:?}"))),
    };
    Ok(table
        .entries
        .iter()
        .map(|e| (e.at, e.value, e.value_upper))
        .collect())
}

#[pyfunction]
fn extremal_series(params: PyClassParams, order: usize) -> PyResult<Vec<Complex64>> {
    let f = core_extremal::extremal_series(&params.0, order).map_err(to_py)?;
    Ok(f.series().coeffs().to_vec())
}

#[pyfunction]
fn rotated_extremal_series(params: PyClassParams, k: usize, order: usize) -> PyResult<Vec<Complex64>> {
    let f = core_extremal::rotated_extremal_series(&params.0, k, order).map_err(to_py)?;
    Ok(f.series().coeffs().to_vec())
}

#[pyfunction]
fn koebe_beta_series(beta: f64, order: usize) -> PyResult<Vec<Complex64>> {
    let f = core_extremal::koebe_beta_series(beta, order).map_err(to_py)?;
    Ok(f.series().coeffs().to_vec())
}

/// `γ₁..γ_{n_max}` of a normalized series `[0, 1, a₂, …]`.
#[pyfunction]
fn log_coeffs(coeffs: Vec<Complex64>, n_max: usize) -> PyResult<Vec<Complex64>> {
    core_extremal::log_coeffs(&normalized(coeffs)?, n_max).map_err(to_py)
}

/// Coefficients of `z f′/f` for a normalized series.
#[pyfunction]
fn ratio_series(coeffs: Vec<Complex64>) -> PyResult<Vec<Complex64>> {
    Ok(core_membership::ratio_series(&series(coeffs)?)
        .map_err(to_py)?
        .into_coeffs())
}

#[derive(FromPyObject)]
enum FunctionArg {
    Builtin(String),
    Coefficients(Vec<Complex64>),
}

fn resolve(choice: FunctionArg, params: &starlike_core::ClassParams) -> PyResult<Box<dyn AnalyticFunction + Send>> {
    match choice {
        FunctionArg::Coefficients(c) => {
            let f = normalized(c)?;
            Ok(Box::new(core_membership::Polynomial::new(f.series().clone())))
        }
        FunctionArg::Builtin(name) => match name.as_str() {
            "identity" => Ok(Box::new(core_membership::Identity)),
            "koebe" => Ok(Box::new(core_membership::KoebeBeta { beta: 1.0 })),
            "extremal" => Ok(Box::new(core_membership::Extremal { params: *params })),
            other => {
                let beta = other
                    .strip_prefix("koebe-beta:")
                    .and_then(|b| b.parse::<f64>().ok())
                    .ok_or_else(|| PyValueError::new_err(format!("unknown builtin {other:?}")))?;
                if !(beta > 0.0 && beta <= 1.0) {
                    return Err(PyValueError::new_err(format!("beta must lie in (0, 1], got {beta}")));
                }
                Ok(Box::new(core_membership::KoebeBeta { beta }))
            }
        },
    }
}

/// Result of a sampled argument check.
#[pyclass(name = "ArgWindowReport", frozen)]
pub struct PyArgWindowReport(core_membership::ArgWindowReport);

#[pymethods]
impl PyArgWindowReport {
    #[getter]
    fn passed(&self) -> bool {
        self.0.passed
    }

    #[getter]
    fn status(&self) -> &'static str {
        self.0.status()
    }

    #[getter]
    fn total(&self) -> usize {
        self.0.total_samples
    }

    #[getter]
    fn min_arg(&self) -> f64 {
        self.0.min_arg
    }

    #[getter]
    fn max_arg(&self) -> f64 {
        self.0.max_arg
    }

    /// `(z, arg)` pairs in grid order.
    #[getter]
    fn violations(&self) -> Vec<(Complex64, f64)> {
        self.0.violations.iter().map(|v| (v.z, v.arg)).collect()
    }

    fn to_json(&self) -> String {
        self.0.to_json_string()
    }

    fn __repr__(&self) -> String {
        format!(
            "ArgWindowReport(status={:?}, total={}, violations={})",
            self.0.status(),
            self.0.total_samples,
            self.0.violations.len()
        )
    }
}

fn grid(radii: Option<Vec<f64>>, angles: usize) -> PyResult<SampleGrid> {
    match radii {
        None if angles == 720 => Ok(SampleGrid::default()),
        None => SampleGrid::new(SampleGrid::default().radii().to_vec(), angles).map_err(to_py),
        Some(r) => SampleGrid::new(r, angles).map_err(to_py),
    }
}

/// Samples `arg(z f′/f)` against the window. `function` is a builtin name
/// (`identity`, `koebe`, `koebe-beta:β`, `extremal`) or a coefficient list.
#[pyfunction]
#[pyo3(signature = (function, params, radii = None, angles = 720))]
fn check_membership(
    py: Python<'_>,
    function: FunctionArg,
    params: PyClassParams,
    radii: Option<Vec<f64>>,
    angles: usize,
) -> PyResult<PyArgWindowReport> {
    let f = resolve(function, &params.0)?;
    let grid = grid(radii, angles)?;
    py.detach(|| core_membership::check_membership(&f, &params.0, &grid))
        .map(PyArgWindowReport)
        .map_err(to_py)
}

/// Samples `arg(1 + z f″/f′)` against the window on radii up to the
/// validity radius.
#[pyfunction]
#[pyo3(signature = (function, params, radii, angles = 720))]
fn check_convexity_condition(
    py: Python<'_>,
    function: FunctionArg,
    params: PyClassParams,
    radii: Vec<f64>,
    angles: usize,
) -> PyResult<PyArgWindowReport> {
    let f = resolve(function, &params.0)?;
    let grid = grid(Some(radii), angles)?;
    py.detach(|| core_membership::check_convexity_condition(&f, &params.0, &grid))
        .map(PyArgWindowReport)
        .map_err(to_py)
}

/// Runs an invariant suite and returns a dict with `suite`, `cases_run`,
/// `passed` and `failures`.
#[pyfunction]
#[pyo3(signature = (suite = "all", seed = None))]
fn verify<'py>(py: Python<'py>, suite: &str, seed: Option<u64>) -> PyResult<Bound<'py, PyDict>> {
    let seed = seed.unwrap_or(core_verify::DEFAULT_SEED);
    let suite = suite.to_string();
    let report = py.detach(|| core_verify::run_suite(&suite, seed)).map_err(to_py)?;
    let out = PyDict::new(py);
    out.set_item("suite", &report.suite)?;
    out.set_item("cases_run", report.cases_run)?;
    out.set_item("passed", report.passed())?;
    let failures: Vec<Bound<'py, PyDict>> = report
        .failures
        .iter()
        .map(|f| {
            let d = PyDict::new(py);
            d.set_item("case", &f.case)?;
            d.set_item("expected", &f.expected)?;
            d.set_item("observed", &f.observed)?;
            d.set_item("tolerance", f.tolerance)?;
            Ok(d)
        })
        .collect::<PyResult<_>>()?;
    out.set_item("failures", failures)?;
    out.set_item("wall_time", report.wall_time.as_secs_f64())?;
    Ok(out)
}

#[pymodule]
fn starlike(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyClassParams>()?;
    m.add_class::<PyArgWindowReport>()?;
    m.add_function(wrap_pyfunction!(lambda_coeffs, m)?)?;
    m.add_function(wrap_pyfunction!(lambda_via_2f1, m)?)?;
    m.add_function(wrap_pyfunction!(g_series, m)?)?;
    m.add_function(wrap_pyfunction!(g_eval, m)?)?;
    m.add_function(wrap_pyfunction!(g_tilde_eval, m)?)?;
    m.add_function(wrap_pyfunction!(omega_contains, m)?)?;
    m.add_function(wrap_pyfunction!(re_lower_bound, m)?)?;
    m.add_function(wrap_pyfunction!(re_upper_bound, m)?)?;
    m.add_function(wrap_pyfunction!(growth_bounds, m)?)?;
    m.add_function(wrap_pyfunction!(gamma_bound, m)?)?;
    m.add_function(wrap_pyfunction!(coeff_bound, m)?)?;
    m.add_function(wrap_pyfunction!(bound_table, m)?)?;
    m.add_function(wrap_pyfunction!(extremal_series, m)?)?;
    m.add_function(wrap_pyfunction!(rotated_extremal_series, m)?)?;
    m.add_function(wrap_pyfunction!(koebe_beta_series, m)?)?;
    m.add_function(wrap_pyfunction!(log_coeffs, m)?)?;
    m.add_function(wrap_pyfunction!(ratio_series, m)?)?;
    m.add_function(wrap_pyfunction!(check_membership, m)?)?;
    m.add_function(wrap_pyfunction!(check_convexity_condition, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
