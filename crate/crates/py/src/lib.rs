use pyo3::create_exception;
use pyo3::exceptions::{PyArithmeticError, PyException, PyValueError};
use pyo3::prelude::*;
use rug::{Float, Integer};

use moncurve::cli::eval;
use moncurve::curves::{self, Sign, SpectralCurve, Table1Params};
use moncurve::intrel;
use moncurve::modeq::{self, ESPair};
use moncurve::numkernel::to_decimal;
use moncurve::specfun::{self, EllipticModulus, Signature};
use moncurve::{Error, PrecisionContext};

create_exception!(pymoncurve, PrecisionError, PyException);
create_exception!(pymoncurve, VerificationError, PyArithmeticError);

fn to_py(err: Error) -> PyErr {
    match err {
        Error::Precision { .. } => PrecisionError::new_err(err.to_string()),
        Error::Accuracy { .. } | Error::NoPeriodRelation { .. } => {
            VerificationError::new_err(err.to_string())
        }
        _ => PyValueError::new_err(err.to_string()),
    }
}

fn context(digits: u32) -> PyResult<PrecisionContext> {
    PrecisionContext::new(digits).map_err(to_py)
}

fn value(expr: &str, ctx: &PrecisionContext) -> PyResult<Float> {
    eval(expr, ctx).map_err(to_py)
}

/// Evaluates an exact expression such as `"1 + sqrt(2)"` or `"K(1/2)"`.
#[pyfunction]
#[pyo3(signature = (expr, digits = 50))]
fn evaluate(expr: &str, digits: u32) -> PyResult<String> {
    let ctx = context(digits)?;
    Ok(to_decimal(&value(expr, &ctx)?))
}

/// A curve `ηⁿ + a_1(ζ)ηⁿ⁻¹ + … + a_n(ζ)` held at a fixed precision.
#[pyclass(name = "SpectralCurve", module = "pymoncurve")]
struct PyCurve {
    curve: SpectralCurve,
    ctx: PrecisionContext,
}

#[pymethods]
impl PyCurve {
    #[getter]
    fn n(&self) -> usize {
        self.curve.n()
    }

    #[getter]
    fn digits(&self) -> u32 {
        self.ctx.digits()
    }

    /// `(r, j, re, im)` for every coefficient, as decimal strings.
    fn coefficients(&self) -> Vec<(usize, usize, String, String)> {
        self.curve
            .iter()
            .map(|(r, j, c)| (r, j, to_decimal(&c.re), to_decimal(&c.im)))
            .collect()
    }

    fn to_json(&self) -> PyResult<String> {
        self.curve.to_json(&self.ctx).map_err(to_py)
    }

    #[staticmethod]
    #[pyo3(signature = (text, digits = 50))]
    fn from_json(text: &str, digits: u32) -> PyResult<Self> {
        let ctx = context(digits)?;
        let curve = SpectralCurve::from_json(text, &ctx).map_err(to_py)?;
        Ok(PyCurve { curve, ctx })
    }

    /// `(passed, max_residual, [(r, j), …])` for the reality condition.
    fn check_h1(&self) -> (bool, String, Vec<(usize, usize)>) {
        let report = curves::check_h1(&self.curve, &self.ctx);
        let bad = report.violations.iter().map(|v| (v.r, v.j)).collect();
        (report.passed, to_decimal(&report.max_residual), bad)
    }

    fn __repr__(&self) -> String {
        format!(
            "SpectralCurve(n={}, digits={})",
            self.curve.n(),
            self.ctx.digits()
        )
    }
}

fn sign(text: Option<&str>) -> PyResult<Sign> {
    match text {
        None | Some("+") => Ok(Sign::Plus),
        Some("-") => Ok(Sign::Minus),
        Some(other) => Err(PyValueError::new_err(format!(
            "sign must be '+' or '-', got {other:?}"
        ))),
    }
}

fn required(name: &str, v: Option<&str>, ctx: &PrecisionContext) -> PyResult<Float> {
    let text = v.ok_or_else(|| PyValueError::new_err(format!("this row needs {name}=")))?;
    value(text, ctx)
}

/// Builds a row of the known-curve table. Numeric parameters are exact
/// expressions given as strings.
#[pyfunction]
#[pyo3(signature = (row, digits = 50, m = 1, k = None, sign = None, a = None, epsilon = 1, alpha = None, beta = None, gamma = None))]
#[allow(clippy::too_many_arguments)]
fn build_table1(
    row: u32,
    digits: u32,
    m: u32,
    k: Option<&str>,
    sign: Option<&str>,
    a: Option<&str>,
    epsilon: i32,
    alpha: Option<&str>,
    beta: Option<&str>,
    gamma: Option<&str>,
) -> PyResult<PyCurve> {
    let ctx = context(digits)?;
    let params = match row {
        1 => Table1Params::Row1 { m },
        2 => Table1Params::Row2 { m },
        3 => Table1Params::Row3 {
            k: required("k", k, &ctx)?,
        },
        4 => Table1Params::Row4 {
            sign: self::sign(sign)?,
        },
        5 => Table1Params::Row5,
        6 => Table1Params::Row6,
        7 => Table1Params::Row7 {
            sign: self::sign(sign)?,
        },
        8 => Table1Params::Row8 {
            a: required("a", a, &ctx)?,
        },
        9 => Table1Params::Row9 {
            a: required("a", a, &ctx)?,
            epsilon,
        },
        10 => Table1Params::Row10 {
            alpha: required("alpha", alpha, &ctx)?,
            beta: required("beta", beta, &ctx)?,
            gamma: required("gamma", gamma, &ctx)?,
        },
        other => {
            return Err(PyValueError::new_err(format!(
                "row must be 1..10, got {other}"
            )))
        }
    };
    let curve = curves::build_table1(&params, &ctx).map_err(to_py)?;
    Ok(PyCurve { curve, ctx })
}

#[pyfunction]
#[pyo3(signature = (n, m, digits = 50))]
fn build_symmetric_trigonal(n: i64, m: i64, digits: u32) -> PyResult<PyCurve> {
    let ctx = context(digits)?;
    let pair = ESPair::new(n, m).map_err(to_py)?;
    let curve = curves::build_symmetric_trigonal(pair, &ctx).map_err(to_py)?;
    Ok(PyCurve { curve, ctx })
}

/// Solution of the trigonal constraints: a dict of decimal strings with
/// keys `t`, `one_minus_t`, `b`, `b_signed`, `alpha`, `chi`.
#[pyfunction]
#[pyo3(signature = (n, m, digits = 50))]
fn es_solve(n: i64, m: i64, digits: u32) -> PyResult<Vec<(String, String)>> {
    let ctx = context(digits)?;
    let d = modeq::es_solve(ESPair::new(n, m).map_err(to_py)?, &ctx).map_err(to_py)?;
    Ok(vec![
        ("t".into(), to_decimal(&d.t)),
        ("one_minus_t".into(), to_decimal(&d.one_minus_t)),
        ("b".into(), to_decimal(&d.b)),
        ("b_signed".into(), to_decimal(&d.b_raw)),
        ("alpha".into(), to_decimal(&d.alpha)),
        ("chi".into(), to_decimal(&d.chi)),
    ])
}

#[pyfunction]
#[pyo3(signature = (alpha, n, r = 3, digits = 50))]
fn modular_partner(alpha: &str, n: u32, r: u32, digits: u32) -> PyResult<String> {
    let ctx = context(digits)?;
    let sig = Signature::new(r).map_err(to_py)?;
    let beta = modeq::modular_partner(&value(alpha, &ctx)?, n, sig, &ctx).map_err(to_py)?;
    Ok(to_decimal(&beta))
}

#[pyfunction]
#[pyo3(signature = (k, digits = 50))]
fn ellip_k(k: &str, digits: u32) -> PyResult<String> {
    let ctx = context(digits)?;
    let m = EllipticModulus::new(&value(k, &ctx)?, &ctx).map_err(to_py)?;
    Ok(to_decimal(&specfun::ellip_k(&m, &ctx).map_err(to_py)?))
}

/// `((u, v), residual, (p1, p2))` with each period as `(re, im)` strings.
#[pyfunction]
#[pyo3(signature = (k, digits = 50))]
#[allow(clippy::type_complexity)]
fn charge2_es_check(
    k: &str,
    digits: u32,
) -> PyResult<((i64, i64), String, ((String, String), (String, String)))> {
    let ctx = context(digits)?;
    let check = curves::charge2_es_check(&value(k, &ctx)?, &ctx).map_err(to_py)?;
    let p = &check.periods;
    Ok((
        (check.relation.a[0], check.relation.b[0]),
        to_decimal(&check.residual),
        (
            (to_decimal(&p.p1.re), to_decimal(&p.p1.im)),
            (to_decimal(&p.p2.re), to_decimal(&p.p2.im)),
        ),
    ))
}

/// A Python integer of any size as a height bound.
fn bound(h: &Bound<'_, PyAny>) -> PyResult<Integer> {
    let text = h.str()?.to_string();
    text.parse::<Integer>()
        .map_err(|_| PyValueError::new_err(format!("bound must be an integer, got {text}")))
}

/// Integer coefficients `c` with `Σ cᵢ xᵢ ≈ 0`, or `None` when the search
/// certifies that no relation of height `max_norm` exists.
#[pyfunction]
#[pyo3(signature = (values, max_norm, digits = 50))]
fn find_relation(
    values: Vec<String>,
    max_norm: &Bound<'_, PyAny>,
    digits: u32,
) -> PyResult<Option<Vec<i64>>> {
    let ctx = context(digits)?;
    let xs = values
        .iter()
        .map(|v| value(v, &ctx))
        .collect::<PyResult<Vec<_>>>()?;
    let found = intrel::find_relation(&xs, &bound(max_norm)?, &ctx).map_err(to_py)?;
    found
        .map(|r| {
            r.coeffs
                .iter()
                .map(|c| {
                    c.to_i64()
                        .ok_or_else(|| PyValueError::new_err("coefficient exceeds i64"))
                })
                .collect()
        })
        .transpose()
}

/// Minimal polynomial text (e.g. `"x^2 - 2x - 1"`) or `None`.
#[pyfunction]
#[pyo3(signature = (expr, dmax, hmax, digits = 50))]
fn algebraicity_probe(
    expr: &str,
    dmax: u32,
    hmax: &Bound<'_, PyAny>,
    digits: u32,
) -> PyResult<Option<String>> {
    let ctx = context(digits)?;
    let report = intrel::algebraicity_probe(&value(expr, &ctx)?, dmax, &bound(hmax)?, &ctx)
        .map_err(to_py)?;
    Ok(report.polynomial_string())
}

/// Runs a command-line invocation (without the program name) and returns
/// `(exit_code, json_report_or_message)`.
#[pyfunction]
fn run_cli(args: Vec<String>) -> (i32, String) {
    let argv = std::iter::once("moncurve".to_string()).chain(args);
    let outcome = moncurve::cli::execute(argv);
    match outcome.report {
        Some(report) => (outcome.code, report.to_json()),
        None => (outcome.code, outcome.message),
    }
}

#[pymodule]
fn pymoncurve(m: &Bound<'_, PyModule>) -> PyResult<()> {
    register(m)
}

/// Adds every class, function and exception to `m`.
pub fn register(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("PrecisionError", m.py().get_type::<PrecisionError>())?;
    m.add("VerificationError", m.py().get_type::<VerificationError>())?;
    m.add_class::<PyCurve>()?;
    m.add_function(wrap_pyfunction!(evaluate, m)?)?;
    m.add_function(wrap_pyfunction!(build_table1, m)?)?;
    m.add_function(wrap_pyfunction!(build_symmetric_trigonal, m)?)?;
    m.add_function(wrap_pyfunction!(es_solve, m)?)?;
    m.add_function(wrap_pyfunction!(modular_partner, m)?)?;
    m.add_function(wrap_pyfunction!(ellip_k, m)?)?;
    m.add_function(wrap_pyfunction!(charge2_es_check, m)?)?;
    m.add_function(wrap_pyfunction!(find_relation, m)?)?;
    m.add_function(wrap_pyfunction!(algebraicity_probe, m)?)?;
    m.add_function(wrap_pyfunction!(run_cli, m)?)?;
    Ok(())
}
