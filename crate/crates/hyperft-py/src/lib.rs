//! Python bindings: the transform pipeline, the closed-form references, the
//! fixtures, and the two baselines. High-precision values cross the boundary
//! as decimal strings so nothing is silently rounded to double.

use std::path::PathBuf;
use std::str::FromStr;

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use hyperft::baselines::{BaselineMethod, OouraMoriParams, SugiharaParams};
use hyperft::confrac::qd_transform;
use hyperft::functions::RegisteredFunction;
use hyperft::numerics::{BigComplex, BigReal, PrecisionContext};
use hyperft::persist::{self, TransformHeader};
use hyperft::quadrature::DeRuleSpec;
use hyperft::transform::{self, FixtureKind, FourierHyperfunction, DEFAULT_TAYLOR_TERMS};

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn runtime_err(e: impl std::fmt::Display) -> PyErr {
    PyRuntimeError::new_err(e.to_string())
}

fn context(digits: u32) -> PyResult<PrecisionContext> {
    PrecisionContext::new(digits).map_err(value_err)
}

fn parse_center_pair(text: &str, ctx: &PrecisionContext) -> PyResult<(BigComplex, BigComplex)> {
    let (a, b) = text
        .split_once(',')
        .ok_or_else(|| value_err(format!("centers {text:?} must be a comma-separated pair")))?;
    Ok((parse_center(a, ctx)?, parse_center(b, ctx)?))
}

fn parse_center(text: &str, ctx: &PrecisionContext) -> PyResult<BigComplex> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let body = s
        .strip_suffix(['i', 'I'])
        .ok_or_else(|| value_err(format!("center {text:?} must end in 'i'")))?;
    let bytes = body.as_bytes();
    let mut split = None;
    for i in (1..bytes.len()).rev() {
        if (bytes[i] == b'+' || bytes[i] == b'-') && !matches!(bytes[i - 1], b'e' | b'E') {
            split = Some(i);
            break;
        }
    }
    let (re_text, sign, mag_text) = match split {
        Some(at) => (
            &body[..at],
            if bytes[at] == b'-' { -1i64 } else { 1 },
            &body[at + 1..],
        ),
        None => match body.as_bytes().first() {
            Some(b'-') => ("", -1i64, &body[1..]),
            Some(b'+') => ("", 1, &body[1..]),
            _ => ("", 1, body),
        },
    };
    let re = if re_text.is_empty() {
        ctx.zero()
    } else {
        ctx.parse_real(re_text).map_err(value_err)?
    };
    let mag = if mag_text.is_empty() {
        ctx.one()
    } else {
        ctx.parse_real(mag_text).map_err(value_err)?
    };
    Ok(ctx.complex(re, &mag * &ctx.from_i64(sign)))
}

fn complex_strings(v: &BigComplex) -> (String, String) {
    (v.re.to_canonical_string(), v.im.to_canonical_string())
}

/// A computed transform: evaluate it anywhere on the real axis without any
/// further samples of the original function.
#[pyclass]
struct Transform {
    inner: FourierHyperfunction,
    ctx: PrecisionContext,
    function: String,
    taylor_terms: usize,
}

#[pymethods]
impl Transform {
    /// Total function evaluations spent building both branches.
    #[getter]
    fn total_evals(&self) -> usize {
        self.inner.total_evals()
    }

    /// Largest evaluation depth available on both branches.
    #[getter]
    fn max_depth(&self) -> usize {
        self.inner.max_depth()
    }

    /// Whether each branch ended in an exact rational function.
    #[getter]
    fn terminated(&self) -> (bool, bool) {
        (
            self.inner.cf_plus().terminated(),
            self.inner.cf_minus().terminated(),
        )
    }

    /// Expansion centers as canonical strings.
    #[getter]
    fn centers(&self) -> (String, String) {
        (
            self.inner.cf_plus().center().to_canonical_string(),
            self.inner.cf_minus().center().to_canonical_string(),
        )
    }

    #[getter]
    fn function(&self) -> String {
        self.function.clone()
    }

    /// Evaluates at a real frequency; returns `(re, im)` decimal strings.
    #[pyo3(signature = (xi, depth=None))]
    fn evaluate(&self, xi: f64, depth: Option<usize>) -> PyResult<(String, String)> {
        self.evaluate_str(&xi.to_string(), depth)
    }

    /// Same, but the frequency is a decimal string parsed at full precision.
    #[pyo3(signature = (xi, depth=None))]
    fn evaluate_str(&self, xi: &str, depth: Option<usize>) -> PyResult<(String, String)> {
        let x = self.ctx.parse_real(xi).map_err(value_err)?;
        let d = depth.unwrap_or_else(|| self.inner.max_depth());
        let v = transform::evaluate(&self.inner, &x, d, &self.ctx).map_err(runtime_err)?;
        Ok(complex_strings(&v))
    }

    /// Evaluation with the depth-difference error proxy attached.
    #[pyo3(signature = (xi, depth=None))]
    fn evaluate_with_proxy(
        &self,
        xi: f64,
        depth: Option<usize>,
    ) -> PyResult<(String, String, String)> {
        let x = self.ctx.parse_real(&xi.to_string()).map_err(value_err)?;
        let d = depth.unwrap_or_else(|| self.inner.max_depth());
        let (v, proxy) =
            transform::evaluate_with_proxy(&self.inner, &x, d, &self.ctx).map_err(runtime_err)?;
        let (re, im) = complex_strings(&v);
        Ok((re, im, proxy.to_canonical_string()))
    }

    /// Absolute error against the closed-form reference, when one exists.
    fn abs_error(&self, xi: f64) -> PyResult<Option<String>> {
        let func = RegisteredFunction::from_str(&self.function).ok();
        let reference = match func.and_then(|f| f.reference()) {
            Some(id) => id,
            None => return Ok(None),
        };
        let x = self.ctx.parse_real(&xi.to_string()).map_err(value_err)?;
        if x.is_zero() {
            return Ok(None);
        }
        let v = transform::evaluate(&self.inner, &x, self.inner.max_depth(), &self.ctx)
            .map_err(runtime_err)?;
        let exact = transform::exact_reference(reference, &x, &self.ctx).map_err(runtime_err)?;
        let err = (&v.re - &exact.re).hypot(&(&v.im - &exact.im));
        Ok(Some(err.to_canonical_string()))
    }

    /// Persists the transform for later evaluation-only use.
    fn save(&self, path: PathBuf) -> PyResult<()> {
        let header = TransformHeader {
            function: self.function.clone(),
            digits: self.ctx.decimal_digits(),
            taylor_terms: self.taylor_terms,
            total_evals: self.inner.total_evals(),
        };
        persist::save_transform(&self.inner, &header, &path).map_err(runtime_err)
    }

    fn __repr__(&self) -> String {
        format!(
            "Transform(function={:?}, evals={}, depth={})",
            self.function,
            self.inner.total_evals(),
            self.inner.max_depth()
        )
    }
}

/// Builds the transform of a registered function.
#[pyfunction]
#[pyo3(signature = (function, centers="+i,-i", digits=100, taylor_terms=DEFAULT_TAYLOR_TERMS))]
fn build_transform(
    function: &str,
    centers: &str,
    digits: u32,
    taylor_terms: usize,
) -> PyResult<Transform> {
    let ctx = context(digits)?;
    let func = RegisteredFunction::from_str(function).map_err(value_err)?;
    let (cp, cm) = parse_center_pair(centers, &ctx)?;
    let spec = DeRuleSpec::for_context(&ctx);
    let fh = transform::build_transform(
        |x| func.eval(x, &ctx),
        &cp,
        &cm,
        taylor_terms,
        &spec,
        &ctx,
    )
    .map_err(runtime_err)?;
    Ok(Transform {
        inner: fh,
        ctx,
        function: func.name().to_string(),
        taylor_terms,
    })
}

/// Loads a transform persisted by `Transform.save` or the CLI.
#[pyfunction]
fn load_transform(path: PathBuf) -> PyResult<Transform> {
    let (fh, header, ctx) = persist::load_transform(&path).map_err(runtime_err)?;
    Ok(Transform {
        inner: fh,
        ctx,
        function: header.function,
        taylor_terms: header.taylor_terms,
    })
}

/// Closed-form transform of a benchmark function at a nonzero frequency.
#[pyfunction]
#[pyo3(signature = (function, xi, digits=100))]
fn exact_reference(function: &str, xi: f64, digits: u32) -> PyResult<(String, String)> {
    let ctx = context(digits)?;
    let func = RegisteredFunction::from_str(function).map_err(value_err)?;
    let id = func
        .reference()
        .ok_or_else(|| value_err(format!("{function} has no pointwise reference")))?;
    let x = ctx.parse_real(&xi.to_string()).map_err(value_err)?;
    let v = transform::exact_reference(id, &x, &ctx).map_err(value_err)?;
    Ok(complex_strings(&v))
}

/// Converts Taylor coefficients `(re, im)` into continued-fraction
/// coefficients; returns the coefficient strings and the termination flag.
#[pyfunction]
#[pyo3(signature = (coefficients, digits=100))]
fn qd_continued_fraction(
    coefficients: Vec<(f64, f64)>,
    digits: u32,
) -> PyResult<(Vec<(String, String)>, bool)> {
    let ctx = context(digits)?;
    let c: Vec<BigComplex> = coefficients
        .iter()
        .map(|(re, im)| ctx.complex(ctx.from_f64(*re), ctx.from_f64(*im)))
        .collect();
    let cf = qd_transform(&c, &ctx.complex_zero(), &ctx).map_err(runtime_err)?;
    Ok((
        cf.coefficients().iter().map(complex_strings).collect(),
        cf.terminated(),
    ))
}

/// Value of a fixture defining function (`delta` or `step`) off the axis.
#[pyfunction]
#[pyo3(signature = (kind, re, im, digits=100))]
fn defining_fixture(kind: &str, re: f64, im: f64, digits: u32) -> PyResult<(String, String)> {
    let ctx = context(digits)?;
    let k = FixtureKind::from_str(kind).map_err(value_err)?;
    let z = ctx.complex(ctx.from_f64(re), ctx.from_f64(im));
    let v = transform::defining_fixture(k, &z, &ctx).map_err(value_err)?;
    Ok(complex_strings(&v))
}

/// Evaluates the transform by one of the comparison quadrature methods;
/// returns `(re, im, n_evals)`.
#[pyfunction]
#[pyo3(signature = (function, xi, method="ooura-mori", digits=100))]
fn baseline_transform(
    function: &str,
    xi: f64,
    method: &str,
    digits: u32,
) -> PyResult<(String, String, usize)> {
    let ctx = context(digits)?;
    let func = RegisteredFunction::from_str(function).map_err(value_err)?;
    let m = match method {
        "ooura-mori" => BaselineMethod::OouraMori(OouraMoriParams::for_context(&ctx)),
        "sugihara" => BaselineMethod::Sugihara(SugiharaParams::for_context(&ctx)),
        other => return Err(value_err(format!("unknown method {other:?}"))),
    };
    let x = ctx.parse_real(&xi.to_string()).map_err(value_err)?;
    let r = hyperft::baselines::full_transform_via_half_integrals(
        |v: &BigReal| func.eval(v, &ctx),
        func.parity(),
        &x,
        &m,
        &ctx,
    )
    .map_err(runtime_err)?;
    let (re, im) = complex_strings(&r.value);
    Ok((re, im, r.n_evals))
}

#[pymodule]
fn hyperft_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Transform>()?;
    m.add_function(wrap_pyfunction!(build_transform, m)?)?;
    m.add_function(wrap_pyfunction!(load_transform, m)?)?;
    m.add_function(wrap_pyfunction!(exact_reference, m)?)?;
    m.add_function(wrap_pyfunction!(qd_continued_fraction, m)?)?;
    m.add_function(wrap_pyfunction!(defining_fixture, m)?)?;
    m.add_function(wrap_pyfunction!(baseline_transform, m)?)?;
    m.add("DEFAULT_TAYLOR_TERMS", DEFAULT_TAYLOR_TERMS)?;
    Ok(())
}
