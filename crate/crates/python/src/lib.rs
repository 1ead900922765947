//! Python bindings. Rationals cross the boundary as `fractions.Fraction`;
//! inputs may be `Fraction`, `int`, `str` (`"3/5"`, `"0.45"`), `Decimal`,
//! or `float` (read through its shortest decimal repr, so `0.1` means 1/10).

use entcat::{
    CatalystSpectrum, ConstructionResult, ExtendedRational, FeasibilityReport, InfeasibleReason, Rational, Spectrum4,
    Verdict,
};
use pyo3::create_exception;
use pyo3::exceptions::{PyTypeError, PyValueError};
use pyo3::prelude::*;
use pyo3::sync::PyOnceLock;
use pyo3::types::{PyBool, PyString, PyType};

create_exception!(
    entcat,
    EntcatError,
    PyValueError,
    "Invalid input to an entcat operation."
);

static FRACTION: PyOnceLock<Py<PyType>> = PyOnceLock::new();
static NUMBER: PyOnceLock<Py<PyType>> = PyOnceLock::new();

fn err(e: entcat::Error) -> PyErr {
    EntcatError::new_err(e.to_string())
}

fn fraction<'py>(py: Python<'py>, r: &Rational) -> PyResult<Bound<'py, PyAny>> {
    FRACTION.import(py, "fractions", "Fraction")?.call1((r.to_string(),))
}

fn fractions<'py>(py: Python<'py>, values: &[Rational]) -> PyResult<Vec<Bound<'py, PyAny>>> {
    values.iter().map(|r| fraction(py, r)).collect()
}

fn extended<'py>(py: Python<'py>, r: &ExtendedRational) -> PyResult<Bound<'py, PyAny>> {
    match r {
        ExtendedRational::Finite(r) => fraction(py, r),
        ExtendedRational::PosInfinity => Ok(f64::INFINITY.into_pyobject(py)?.into_any()),
    }
}

fn rational(obj: &Bound<'_, PyAny>) -> PyResult<Rational> {
    let py = obj.py();
    let text = if let Ok(s) = obj.cast::<PyString>() {
        s.to_cow()?.into_owned()
    } else if !obj.is_instance_of::<PyBool>() && obj.is_instance(NUMBER.import(py, "numbers", "Number")?)? {
        obj.str()?.to_cow()?.into_owned()
    } else {
        let type_name = obj.get_type().name()?;
        return Err(PyTypeError::new_err(format!(
            "expected a rational number, got {type_name}"
        )));
    };
    entcat::parse_rational(&text).map_err(err)
}

fn rationals(values: &[Bound<'_, PyAny>]) -> PyResult<Vec<Rational>> {
    values.iter().map(rational).collect()
}

fn spectrum(values: &[Bound<'_, PyAny>]) -> PyResult<Spectrum4> {
    let parsed: [Rational; 4] = rationals(values)?.try_into().map_err(|v: Vec<Rational>| {
        err(entcat::Error::WrongLength {
            expected: 4,
            actual: v.len(),
        })
    })?;
    Spectrum4::new(parsed).map_err(err)
}

fn catalyst(values: &[Bound<'_, PyAny>]) -> PyResult<CatalystSpectrum> {
    CatalystSpectrum::new(rationals(values)?).map_err(err)
}

/// Exact catalysis report for a (source, target) pair.
#[pyclass(frozen, name = "FeasibilityReport", module = "entcat")]
struct PyFeasibilityReport {
    inner: FeasibilityReport,
}

#[pymethods]
impl PyFeasibilityReport {
    /// `"locc_already_possible"`, `"catalyzable"` or `"infeasible"`.
    #[getter]
    fn verdict(&self) -> &'static str {
        match self.inner.verdict() {
            Verdict::LoccAlreadyPossible => "locc_already_possible",
            Verdict::Catalyzable => "catalyzable",
            Verdict::Infeasible => "infeasible",
        }
    }

    #[getter]
    fn catalyzable(&self) -> bool {
        self.inner.verdict() == Verdict::Catalyzable
    }

    /// `(eps1, eps2, eps3)` or None.
    #[getter]
    fn epsilon<'py>(&self, py: Python<'py>) -> PyResult<Option<Vec<Bound<'py, PyAny>>>> {
        self.inner
            .epsilon()
            .map(|e| fractions(py, &[e.eps1.clone(), e.eps2.clone(), e.eps3.clone()]))
            .transpose()
    }

    /// Lower bound on r = (1 - p) / p; `math.inf` when eps1 = 0.
    #[getter]
    fn m<'py>(&self, py: Python<'py>) -> PyResult<Option<Bound<'py, PyAny>>> {
        self.inner.lower().map(|m| extended(py, m)).transpose()
    }

    /// Upper bound on r = (1 - p) / p.
    #[getter(M)]
    fn big_m<'py>(&self, py: Python<'py>) -> PyResult<Option<Bound<'py, PyAny>>> {
        self.inner.upper().map(|m| fraction(py, m)).transpose()
    }

    #[getter]
    fn r_interval<'py>(&self, py: Python<'py>) -> PyResult<Option<(Bound<'py, PyAny>, Bound<'py, PyAny>)>> {
        self.inner
            .ratio_interval()
            .map(|(lo, hi)| Ok((fraction(py, lo)?, fraction(py, hi)?)))
            .transpose()
    }

    #[getter]
    fn p_interval<'py>(&self, py: Python<'py>) -> PyResult<Option<(Bound<'py, PyAny>, Bound<'py, PyAny>)>> {
        self.inner
            .weight_interval()
            .map(|(lo, hi)| Ok((fraction(py, lo)?, fraction(py, hi)?)))
            .transpose()
    }

    /// `"star_violated"`, `"empty_interval"`, `"undefined_lower_bound"` or None.
    #[getter]
    fn reason(&self) -> Option<&'static str> {
        self.inner.reason().map(|r| match r {
            InfeasibleReason::StarViolated(_) => "star_violated",
            InfeasibleReason::EmptyInterval => "empty_interval",
            InfeasibleReason::UndefinedLowerBound => "undefined_lower_bound",
        })
    }

    /// Which of the three decomposition inequalities fails (1, 2 or 3), if any.
    #[getter]
    fn violated_inequality(&self) -> Option<usize> {
        match self.inner.reason() {
            Some(InfeasibleReason::StarViolated(v)) => Some(v.inequality()),
            _ => None,
        }
    }

    /// Whether the two-qubit catalyst with weight `p` works.
    fn admits(&self, p: &Bound<'_, PyAny>) -> PyResult<bool> {
        self.inner.admits(&rational(p)?).map_err(err)
    }

    fn __repr__(&self) -> String {
        let mut text = format!("FeasibilityReport(verdict={:?}", self.verdict());
        if let (Some(m), Some(big_m)) = (self.inner.lower(), self.inner.upper()) {
            text.push_str(&format!(", m={m}, M={big_m}"));
        }
        if let Some((lo, hi)) = self.inner.weight_interval() {
            text.push_str(&format!(", p_interval=[{lo}, {hi}]"));
        }
        text.push(')');
        text
    }
}

/// A pair built to have prescribed catalyst bounds.
#[pyclass(frozen, name = "ConstructionResult", module = "entcat")]
struct PyConstructionResult {
    inner: ConstructionResult,
}

#[pymethods]
impl PyConstructionResult {
    #[getter]
    fn source<'py>(&self, py: Python<'py>) -> PyResult<Vec<Bound<'py, PyAny>>> {
        fractions(py, self.inner.source.coefficients())
    }

    #[getter]
    fn target<'py>(&self, py: Python<'py>) -> PyResult<Vec<Bound<'py, PyAny>>> {
        fractions(py, self.inner.target.coefficients())
    }

    #[getter]
    fn epsilon<'py>(&self, py: Python<'py>) -> PyResult<Vec<Bound<'py, PyAny>>> {
        let e = &self.inner.epsilon;
        fractions(py, &[e.eps1.clone(), e.eps2.clone(), e.eps3.clone()])
    }

    #[getter]
    fn mu<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        fraction(py, &self.inner.mu)
    }

    #[getter]
    fn a<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        fraction(py, &self.inner.a)
    }

    /// `"m0_le_1"` or `"m0_gt_1"`.
    #[getter]
    fn branch(&self) -> &'static str {
        self.inner.branch.name()
    }

    fn __repr__(&self) -> String {
        format!(
            "ConstructionResult(source={:?}, target={:?}, mu={}, branch={:?})",
            self.inner.source,
            self.inner.target,
            self.inner.mu,
            self.inner.branch.name()
        )
    }
}

/// Parses `"n/d"`, integers and decimals exactly.
#[pyfunction]
fn parse_rational<'py>(py: Python<'py>, text: &str) -> PyResult<Bound<'py, PyAny>> {
    fraction(py, &entcat::parse_rational(text).map_err(err)?)
}

/// Sums of the k largest values, k = 1..n.
#[pyfunction]
fn partial_sums<'py>(py: Python<'py>, values: Vec<Bound<'py, PyAny>>) -> PyResult<Vec<Bound<'py, PyAny>>> {
    let sums = entcat::partial_sums(&rationals(&values)?).map_err(err)?;
    fractions(py, sums.sums())
}

/// Whether `a` is majorized by `b`.
#[pyfunction]
fn is_majorized_by(a: Vec<Bound<'_, PyAny>>, b: Vec<Bound<'_, PyAny>>) -> PyResult<bool> {
    entcat::is_majorized_by(&rationals(&a)?, &rationals(&b)?).map_err(err)
}

/// 1-based index of the first partial sum where `a` exceeds `b`, or None.
#[pyfunction]
fn first_majorization_violation(a: Vec<Bound<'_, PyAny>>, b: Vec<Bound<'_, PyAny>>) -> PyResult<Option<usize>> {
    entcat::first_majorization_violation(&rationals(&a)?, &rationals(&b)?).map_err(err)
}

/// Nielsen's criterion for two four-level spectra.
#[pyfunction]
fn locc_possible(source: Vec<Bound<'_, PyAny>>, target: Vec<Bound<'_, PyAny>>) -> PyResult<bool> {
    Ok(entcat::locc_possible(&spectrum(&source)?, &spectrum(&target)?))
}

#[pyfunction]
fn analyze(source: Vec<Bound<'_, PyAny>>, target: Vec<Bound<'_, PyAny>>) -> PyResult<PyFeasibilityReport> {
    Ok(PyFeasibilityReport {
        inner: entcat::analyze(&spectrum(&source)?, &spectrum(&target)?),
    })
}

/// Theorem verdict for the catalyst `(p, 1 - p)`.
#[pyfunction]
fn is_valid_catalyst(
    source: Vec<Bound<'_, PyAny>>,
    target: Vec<Bound<'_, PyAny>>,
    p: &Bound<'_, PyAny>,
) -> PyResult<bool> {
    entcat::is_valid_catalyst(&spectrum(&source)?, &spectrum(&target)?, &rational(p)?).map_err(err)
}

/// Brute-force verdict for a catalyst of any length.
#[pyfunction]
fn oracle_valid_catalyst(
    source: Vec<Bound<'_, PyAny>>,
    target: Vec<Bound<'_, PyAny>>,
    catalyst: Vec<Bound<'_, PyAny>>,
) -> PyResult<bool> {
    let (source, target, catalyst) = (spectrum(&source)?, spectrum(&target)?, self::catalyst(&catalyst)?);
    Ok(entcat::oracle_valid_catalyst(&source, &target, &catalyst))
}

/// Sorted Schmidt coefficients of `state ⊗ catalyst`.
#[pyfunction]
fn augment<'py>(
    py: Python<'py>,
    state: Vec<Bound<'py, PyAny>>,
    catalyst: Vec<Bound<'py, PyAny>>,
) -> PyResult<Vec<Bound<'py, PyAny>>> {
    let beta = entcat::augment(&spectrum(&state)?, &self::catalyst(&catalyst)?);
    fractions(py, beta.components())
}

/// Oracle verdicts `(p, valid)` over `grid`, or over all `k / denominator`
/// in `[1/2, 1]` plus the exact interval endpoints when `grid` is None.
#[pyfunction]
#[pyo3(signature = (source, target, grid=None, denominator=1000))]
fn sweep<'py>(
    py: Python<'py>,
    source: Vec<Bound<'py, PyAny>>,
    target: Vec<Bound<'py, PyAny>>,
    grid: Option<Vec<Bound<'py, PyAny>>>,
    denominator: u32,
) -> PyResult<Vec<(Bound<'py, PyAny>, bool)>> {
    let (source, target) = (spectrum(&source)?, spectrum(&target)?);
    let grid = match grid {
        Some(values) => rationals(&values)?,
        None => entcat::default_grid(denominator, Some(&entcat::analyze(&source, &target))),
    };
    let rows = py.detach(|| entcat::sweep(&source, &target, &grid)).map_err(err)?;
    rows.into_iter()
        .map(|(p, valid)| Ok((fraction(py, &p)?, valid)))
        .collect()
}

/// The eight closed-form partial sums of the augmented target at weight `p`.
#[pyfunction]
fn closed_form_lambda_prime<'py>(
    py: Python<'py>,
    source: Vec<Bound<'py, PyAny>>,
    target: Vec<Bound<'py, PyAny>>,
    p: &Bound<'py, PyAny>,
) -> PyResult<Vec<Bound<'py, PyAny>>> {
    let (source, target) = (spectrum(&source)?, spectrum(&target)?);
    let eps = entcat::epsilon_decompose(&source, &target).map_err(|v| err(entcat::Error::NotCatalysisCandidate(v)))?;
    let sums = entcat::closed_form_lambda_prime(&target, &eps, &rational(p)?).map_err(err)?;
    fractions(py, &sums)
}

/// Builds a pair whose catalyst bounds are exactly `m0` and `M0`.
#[pyfunction]
#[pyo3(signature = (m0, M0, mu=None))]
#[allow(non_snake_case)]
fn construct_states(
    m0: &Bound<'_, PyAny>,
    M0: &Bound<'_, PyAny>,
    mu: Option<&Bound<'_, PyAny>>,
) -> PyResult<PyConstructionResult> {
    let (m0, big_m0) = (rational(m0)?, rational(M0)?);
    let inner = match mu {
        Some(mu) => entcat::construct_with_mu(&m0, &big_m0, &rational(mu)?),
        None => entcat::construct_states(&m0, &big_m0),
    }
    .map_err(err)?;
    Ok(PyConstructionResult { inner })
}

/// Lorenz curve vertices `(k/n, lambda_k)`, starting at `(0, 0)`.
#[pyfunction]
fn lorenz_points<'py>(
    py: Python<'py>,
    values: Vec<Bound<'py, PyAny>>,
) -> PyResult<Vec<(Bound<'py, PyAny>, Bound<'py, PyAny>)>> {
    let points = entcat::lorenz_points(&rationals(&values)?).map_err(err)?;
    points
        .iter()
        .map(|(x, y)| Ok((fraction(py, x)?, fraction(py, y)?)))
        .collect()
}

/// Adds every class, function and exception to `m`.
pub fn register(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("EntcatError", m.py().get_type::<EntcatError>())?;
    m.add_class::<PyFeasibilityReport>()?;
    m.add_class::<PyConstructionResult>()?;
    m.add_function(wrap_pyfunction!(parse_rational, m)?)?;
    m.add_function(wrap_pyfunction!(partial_sums, m)?)?;
    m.add_function(wrap_pyfunction!(is_majorized_by, m)?)?;
    m.add_function(wrap_pyfunction!(first_majorization_violation, m)?)?;
    m.add_function(wrap_pyfunction!(locc_possible, m)?)?;
    m.add_function(wrap_pyfunction!(analyze, m)?)?;
    m.add_function(wrap_pyfunction!(is_valid_catalyst, m)?)?;
    m.add_function(wrap_pyfunction!(oracle_valid_catalyst, m)?)?;
    m.add_function(wrap_pyfunction!(augment, m)?)?;
    m.add_function(wrap_pyfunction!(sweep, m)?)?;
    m.add_function(wrap_pyfunction!(closed_form_lambda_prime, m)?)?;
    m.add_function(wrap_pyfunction!(construct_states, m)?)?;
    m.add_function(wrap_pyfunction!(lorenz_points, m)?)?;
    Ok(())
}

#[pymodule]
#[pyo3(name = "entcat")]
fn entcat_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    register(m)
}
