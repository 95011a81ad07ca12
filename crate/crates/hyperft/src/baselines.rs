//! The two comparison methods: the shifted-node double-exponential rule for
//! oscillatory half-line integrals, and Gaussian damping with Richardson
//! extrapolation.
//!
//! Both compute `int_0^inf g(x) cos(2 pi xi x + theta0) dx`; the full
//! transform is assembled from the even/odd parts of `f`, so every node
//! costs two `f` evaluations. Unlike the continued-fraction pipeline, both
//! methods must re-integrate for every new frequency.

use crate::error::Error;
use crate::functions::Parity;
use crate::numerics::{BigComplex, BigReal, PrecisionContext};
use crate::Result;

/// How many consecutive sub-threshold terms end a side of a sum.
const CONSECUTIVE_STOP: usize = 3;

/// Outcome of one oscillatory integration.
#[derive(Debug, Clone)]
pub struct OscillatoryResult {
    pub value: BigReal,
    /// Number of integrand evaluations.
    pub n_evals: usize,
    /// Set when a truncation or convergence check did not come out clean.
    pub warning: Option<String>,
}

/// Full-transform outcome (complex value, total `f` evaluations).
#[derive(Debug, Clone)]
pub struct BaselineResult {
    pub value: BigComplex,
    pub n_evals: usize,
    pub warning: Option<String>,
}

/// Parameters of the shifted-node rule.
#[derive(Debug, Clone)]
pub struct OouraMoriParams {
    /// Trapezoid mesh `h`.
    pub mesh: BigReal,
    /// Cap on the truncation indices per side.
    pub max_terms_per_side: usize,
    /// Relative term threshold ending each side.
    pub trunc_eps: BigReal,
}

impl OouraMoriParams {
    pub fn for_context(ctx: &PrecisionContext) -> Self {
        OouraMoriParams {
            mesh: ctx.from_ratio(1, 32),
            max_terms_per_side: 100_000,
            trunc_eps: ctx.ten_pow(-44),
        }
    }
}

/// Parameters of the damped-integral method.
#[derive(Debug, Clone)]
pub struct SugiharaParams {
    /// Number of damping levels beyond level zero (extrapolation depth).
    pub levels: usize,
    /// Base trapezoid mesh, shrunk further on weakly damped levels.
    pub base_mesh: BigReal,
    /// Relative term threshold ending each side of a level sum.
    pub trunc_eps: BigReal,
    pub max_nodes_per_side: usize,
}

impl SugiharaParams {
    pub fn for_context(ctx: &PrecisionContext) -> Self {
        SugiharaParams {
            levels: 8,
            base_mesh: ctx.from_ratio(1, 10),
            trunc_eps: ctx.ten_pow(-18),
            max_nodes_per_side: 200_000,
        }
    }
}

/// `phi(u) = u / (1 - exp(-2 pi sinh u))` and its derivative, evaluated
/// without cancellation; at `u = 0` the removable singularity is patched
/// with the exact limits `1/(2 pi)` and `1/2`.
pub(crate) fn node_map(u: &BigReal, ctx: &PrecisionContext) -> (BigReal, BigReal) {
    if u.is_zero() {
        return (ctx.two_pi().recip(), ctx.from_ratio(1, 2));
    }
    let w = -&(&ctx.two_pi() * &u.sinh());
    let e = w.exp();
    let d = -&w.exp_m1(); // 1 - e^{w}
    let phi = u / &d;
    // phi' = 1/D - u * 2 pi cosh(u) * E / D^2
    let dphi = &d.recip() - &(&(&(u * &ctx.two_pi()) * &u.cosh()) * &(&e / &(&d * &d)));
    (phi, dphi)
}

/// One node of the shifted rule: abscissa handed to the integrand and the
/// `cos(pi phi / h + theta0) * phi'` weight.
fn om_node(
    k: i64,
    h: &BigReal,
    theta0: &BigReal,
    xi: &BigReal,
    ctx: &PrecisionContext,
) -> (BigReal, BigReal) {
    // u_k = k h + h/2 - h theta0 / pi
    let shift = &ctx.from_ratio(1, 2) - &(theta0 / &ctx.pi());
    let u = &(h * &ctx.from_i64(k)) + &(h * &shift);
    let (phi, dphi) = node_map(&u, ctx);
    let x = &phi / &(&(&ctx.from_u64(2) * xi) * h);
    let angle = &(&ctx.pi() * &phi) / h + theta0;
    let weight = &angle.cos() * &dphi;
    (x, weight)
}

#[cfg(test)]
pub(crate) fn om_node_weight(
    k: i64,
    h: &BigReal,
    theta0: &BigReal,
    xi: &BigReal,
    ctx: &PrecisionContext,
) -> BigReal {
    om_node(k, h, theta0, xi, ctx).1
}

fn om_engine<G>(
    g: G,
    xi: &BigReal,
    theta0: &BigReal,
    params: &OouraMoriParams,
    ctx: &PrecisionContext,
) -> Result<(BigComplex, usize, usize, Option<String>)>
where
    G: Fn(&BigReal) -> BigComplex,
{
    if !xi.is_positive() {
        return Err(Error::Domain {
            op: "oscillatory half-line integral",
            detail: format!("frequency must be positive, got {xi}"),
        });
    }
    let h = &params.mesh;
    let prefactor = (&ctx.from_u64(2) * xi).recip();
    let one = ctx.one();

    let mut sum = ctx.complex_zero();
    let mut n_evals = 0usize;
    let mut n_pos = 0usize;
    let mut warning = None;

    for side in 0..2i64 {
        let mut misses = 0usize;
        let mut count = 0usize;
        loop {
            if count >= params.max_terms_per_side {
                warning = Some(format!(
                    "terms not negligible after {count} nodes on the {} side",
                    if side == 0 { "positive" } else { "negative" }
                ));
                break;
            }
            let k = if side == 0 {
                count as i64
            } else {
                -(count as i64) - 1
            };
            let (x, weight) = om_node(k, h, theta0, xi, ctx);
            let gv = g(&x);
            n_evals += 1;
            count += 1;
            if !gv.is_finite() {
                return Err(Error::Evaluation {
                    abscissa: x.to_canonical_string(),
                });
            }
            let term = gv.scale(&weight);
            sum = &sum + &term;
            if term.abs() < &params.trunc_eps * &one.max(&sum.abs()) {
                misses += 1;
                if misses >= CONSECUTIVE_STOP {
                    break;
                }
            } else {
                misses = 0;
            }
        }
        if side == 0 {
            n_pos = count;
        }
    }

    Ok((sum.scale(&prefactor), n_evals, n_pos, warning))
}

/// Shifted-node rule for `int_0^inf g(x) cos(2 pi xi x + theta0) dx`.
///
/// The nodes approach the cosine zeros as `k` grows, so the summand dies off
/// double-exponentially on the positive side even when `g` itself decays
/// slowly (or grows polynomially). `theta0 = -pi/2` yields the sine rule.
pub fn ooura_mori_cosine<G>(
    g: G,
    xi: &BigReal,
    theta0: &BigReal,
    params: &OouraMoriParams,
    ctx: &PrecisionContext,
) -> Result<OscillatoryResult>
where
    G: Fn(&BigReal) -> BigReal,
{
    let (value, n_evals, _, warning) = om_engine(
        |x| ctx.complex(g(x), ctx.zero()),
        xi,
        theta0,
        params,
        ctx,
    )?;
    Ok(OscillatoryResult {
        value: value.re,
        n_evals,
        warning,
    })
}

/// Index of the last retained node on the positive side for the given
/// integrand (used to inspect the tail weights).
pub fn ooura_mori_positive_terms<G>(
    g: G,
    xi: &BigReal,
    theta0: &BigReal,
    params: &OouraMoriParams,
    ctx: &PrecisionContext,
) -> Result<usize>
where
    G: Fn(&BigReal) -> BigReal,
{
    let (_, _, n_pos, _) = om_engine(
        |x| ctx.complex(g(x), ctx.zero()),
        xi,
        theta0,
        params,
        ctx,
    )?;
    Ok(n_pos)
}

/// One damped level: `int_0^inf g(x) cos(2 pi xi x + theta0) e^{-eps x^2} dx`
/// by the half-line double-exponential map with a mesh fine enough for the
/// oscillation across the Gaussian support.
fn damped_level<G>(
    g: &G,
    xi: &BigReal,
    theta0: &BigReal,
    damping: &BigReal,
    support: &BigReal,
    params: &SugiharaParams,
    ctx: &PrecisionContext,
) -> Result<(BigComplex, usize)>
where
    G: Fn(&BigReal) -> BigComplex,
{
    // oscillation-aware mesh: at least two nodes per period over the support
    let period_count = &(&(&ctx.two_pi() * xi) * support) / &ctx.pi();
    let h = &params.base_mesh / &(&ctx.one() + &(&period_count / &ctx.from_u64(6)));

    let two_pi_xi = &ctx.two_pi() * xi;
    let one = ctx.one();
    let mut sum = ctx.complex_zero();
    let mut n_evals = 0usize;

    for side in 0..2i64 {
        let mut misses = 0usize;
        let mut count = 0usize;
        loop {
            if count >= params.max_nodes_per_side {
                return Err(Error::MaxNodesExceeded {
                    max: params.max_nodes_per_side,
                });
            }
            let k = if side == 0 {
                count as i64
            } else {
                -(count as i64) - 1
            };
            let t = &h * &ctx.from_i64(k);
            let emt = (-&t).exp();
            let x = (&t - &emt).exp();
            let w = &(&h * &x) * &(&one + &emt);
            let gv = g(&x);
            n_evals += 1;
            count += 1;
            if !gv.is_finite() {
                return Err(Error::Evaluation {
                    abscissa: x.to_canonical_string(),
                });
            }
            let osc = (&(&two_pi_xi * &x) + theta0).cos();
            let gauss = (-&(&(damping * &x) * &x)).exp();
            let term = gv.scale(&(&(&w * &osc) * &gauss));
            sum = &sum + &term;
            if term.abs() < &params.trunc_eps * &one.max(&sum.abs()) {
                misses += 1;
                if misses >= CONSECUTIVE_STOP {
                    break;
                }
            } else {
                misses = 0;
            }
        }
    }
    Ok((sum, n_evals))
}

fn sugihara_engine<G>(
    g: G,
    xi: &BigReal,
    theta0: &BigReal,
    params: &SugiharaParams,
    ctx: &PrecisionContext,
) -> Result<(BigComplex, usize, Option<String>)>
where
    G: Fn(&BigReal) -> BigComplex,
{
    if !xi.is_positive() {
        return Err(Error::Domain {
            op: "oscillatory half-line integral",
            detail: format!("frequency must be positive, got {xi}"),
        });
    }
    if params.levels < 2 {
        return Err(Error::InvalidSpec(
            "extrapolation needs at least two levels".into(),
        ));
    }

    // Gaussian support radius sqrt(ln(1/eps) * 2^n) for the level cutoff
    let log_inv_eps = -&params.trunc_eps.ln();
    let mut n_evals = 0usize;
    let mut levels: Vec<BigComplex> = Vec::with_capacity(params.levels + 1);
    let mut damping = ctx.one();
    for _n in 0..=params.levels {
        let support = (&log_inv_eps / &damping).sqrt();
        let (value, evals) = damped_level(&g, xi, theta0, &damping, &support, params, ctx)?;
        n_evals += evals;
        levels.push(value);
        damping = &damping / &ctx.from_u64(2);
    }

    // Richardson in the damping parameter 2^{-n}: classical ratio-2 update.
    let mut table = levels;
    let mut last_diag = table[0].clone();
    let mut prev_diag = last_diag.clone();
    for m in 1..table.len() {
        let denom = &ctx.from_u64((1u64 << m.min(62)) - 1);
        for i in 0..table.len() - m {
            let delta = (&table[i + 1] - &table[i]).scale(&denom.recip());
            table[i] = &table[i + 1] + &delta;
        }
        prev_diag = last_diag;
        last_diag = table[0].clone();
    }

    let tail = (&last_diag - &prev_diag).abs();
    let scale = ctx.one().max(&last_diag.abs());
    let warning = if tail > &ctx.ten_pow(-8) * &scale {
        Some(format!(
            "extrapolation tail not settled: last two entries {} and {}",
            prev_diag, last_diag
        ))
    } else {
        None
    };
    Ok((last_diag, n_evals, warning))
}

/// Damped-integral method: evaluates the limit of Gaussian-damped integrals
/// `e^{-2^{-n} x^2}` over `n` levels and extrapolates the sequence to the
/// undamped limit with a ratio-2 Richardson table.
pub fn sugihara_cosine<G>(
    g: G,
    xi: &BigReal,
    theta0: &BigReal,
    params: &SugiharaParams,
    ctx: &PrecisionContext,
) -> Result<OscillatoryResult>
where
    G: Fn(&BigReal) -> BigReal,
{
    let (value, n_evals, warning) = sugihara_engine(
        |x| ctx.complex(g(x), ctx.zero()),
        xi,
        theta0,
        params,
        ctx,
    )?;
    Ok(OscillatoryResult {
        value: value.re,
        n_evals,
        warning,
    })
}

/// Method selector for the assembled transform.
#[derive(Debug, Clone)]
pub enum BaselineMethod {
    OouraMori(OouraMoriParams),
    Sugihara(SugiharaParams),
}

impl BaselineMethod {
    pub fn name(&self) -> &'static str {
        match self {
            BaselineMethod::OouraMori(_) => "ooura-mori",
            BaselineMethod::Sugihara(_) => "sugihara",
        }
    }
}

/// Assembles the full transform from two half-line oscillatory integrals:
/// the even part of `f` against `cos(2 pi xi x)` and the odd part against
/// `sin(2 pi xi x)`. Each node costs two `f` evaluations (`f(x)` and
/// `f(-x)`); a part whose integrand vanishes by parity is skipped outright.
pub fn full_transform_via_half_integrals<F>(
    f: F,
    parity: Parity,
    xi: &BigReal,
    method: &BaselineMethod,
    ctx: &PrecisionContext,
) -> Result<BaselineResult>
where
    F: Fn(&BigReal) -> BigComplex,
{
    if xi.is_zero() {
        return Err(Error::Domain {
            op: "full_transform_via_half_integrals",
            detail: "frequency must be nonzero".into(),
        });
    }
    let xi_abs = xi.abs();
    let theta_cos = ctx.zero();
    let theta_sin = -&(&ctx.pi() / &ctx.from_u64(2));

    let run = |g: &dyn Fn(&BigReal) -> BigComplex,
               theta0: &BigReal|
     -> Result<(BigComplex, usize, Option<String>)> {
        match method {
            BaselineMethod::OouraMori(p) => {
                let (v, n, _, w) = om_engine(g, &xi_abs, theta0, p, ctx)?;
                Ok((v, n, w))
            }
            BaselineMethod::Sugihara(p) => sugihara_engine(g, &xi_abs, theta0, p, ctx),
        }
    };

    let mut n_evals = 0usize;
    let mut warning: Option<String> = None;

    // cosine part over f(x) + f(-x)
    let cos_part = if parity == Parity::Odd {
        ctx.complex_zero()
    } else {
        let g = |x: &BigReal| {
            let mx = -x;
            &f(x) + &f(&mx)
        };
        let (v, n, w) = run(&g, &theta_cos)?;
        n_evals += 2 * n;
        warning = warning.or(w);
        v
    };

    // sine part over f(x) - f(-x)
    let sin_part = if parity == Parity::Even {
        ctx.complex_zero()
    } else {
        let g = |x: &BigReal| {
            let mx = -x;
            &f(x) - &f(&mx)
        };
        let (v, n, w) = run(&g, &theta_sin)?;
        n_evals += 2 * n;
        warning = warning.or(w);
        v
    };

    // F[f](xi) = C - i S for xi > 0; the sine part flips sign with xi.
    let signed_sin = if xi.is_sign_negative() {
        -&sin_part
    } else {
        sin_part
    };
    let value = &cos_part - &signed_sin.mul_i_scale(&ctx.one());
    Ok(BaselineResult {
        value,
        n_evals,
        warning,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::functions::TestFunctionId;
    use crate::numerics::make_context;
    use crate::transform::exact_reference;

    fn ctx100() -> PrecisionContext {
        make_context(100).unwrap()
    }

    /// Oracle: `int_0^inf e^{-x} cos(2 pi x) dx = 1/(1 + 4 pi^2)`.
    #[test]
    fn decaying_exponential_against_cosine() {
        let ctx = ctx100();
        let params = OouraMoriParams::for_context(&ctx);
        let r = ooura_mori_cosine(
            |x| (-x).exp(),
            &ctx.one(),
            &ctx.zero(),
            &params,
            &ctx,
        )
        .unwrap();
        let four_pi_sq = &ctx.two_pi() * &ctx.two_pi();
        let exact = (&ctx.one() + &four_pi_sq).recip();
        let err = (&r.value - &exact).abs();
        assert!(err < ctx.ten_pow(-30), "err {err}");
        assert!(r.warning.is_none());
    }

    #[test]
    fn runge_full_transform_via_shifted_nodes() {
        let ctx = ctx100();
        let method = BaselineMethod::OouraMori(OouraMoriParams::for_context(&ctx));
        let r = full_transform_via_half_integrals(
            |x| TestFunctionId::Runge.eval(x, &ctx),
            Parity::Even,
            &ctx.one(),
            &method,
            &ctx,
        )
        .unwrap();
        let exact = exact_reference(TestFunctionId::Runge, &ctx.one(), &ctx).unwrap();
        let err = (&r.value.re - &exact.re).hypot(&(&r.value.im - &exact.im));
        assert!(err < ctx.ten_pow(-15), "err {err}");
        assert!(r.n_evals <= 5000, "evals {}", r.n_evals);
    }

    #[test]
    fn odd_function_uses_sine_rule_only() {
        let ctx = ctx100();
        let method = BaselineMethod::OouraMori(OouraMoriParams::for_context(&ctx));
        let r = full_transform_via_half_integrals(
            |x| TestFunctionId::TanhPi.eval(x, &ctx),
            Parity::Odd,
            &ctx.one(),
            &method,
            &ctx,
        )
        .unwrap();
        let exact = exact_reference(TestFunctionId::TanhPi, &ctx.one(), &ctx).unwrap();
        let err = (&r.value.re - &exact.re).hypot(&(&r.value.im - &exact.im));
        assert!(err < ctx.ten_pow(-15), "err {err}");
    }

    #[test]
    fn log_transform_via_shifted_nodes() {
        let ctx = ctx100();
        let method = BaselineMethod::OouraMori(OouraMoriParams::for_context(&ctx));
        let r = full_transform_via_half_integrals(
            |x| TestFunctionId::LogAbs.eval(x, &ctx),
            Parity::Even,
            &ctx.one(),
            &method,
            &ctx,
        )
        .unwrap();
        // reference at xi = 1 is -1/2
        let want = -&ctx.from_ratio(1, 2);
        let err = (&r.value.re - &want).hypot(&r.value.im);
        assert!(err < ctx.ten_pow(-15), "err {err}");
    }

    #[test]
    fn tail_weights_decrease_monotonically() {
        let ctx = ctx100();
        let params = OouraMoriParams::for_context(&ctx);
        let xi = ctx.one();
        let theta0 = ctx.zero();
        let n_pos = ooura_mori_positive_terms(
            |x| (-x).exp(),
            &xi,
            &theta0,
            &params,
            &ctx,
        )
        .unwrap();
        assert!(n_pos >= 5, "n_pos = {n_pos}");
        let mut magnitudes = Vec::new();
        for k in (n_pos - 5)..n_pos {
            magnitudes.push(om_node_weight(k as i64, &params.mesh, &theta0, &xi, &ctx).abs());
        }
        for pair in magnitudes.windows(2) {
            assert!(pair[0] > pair[1], "weights {:?}", magnitudes
                .iter()
                .map(|m| m.to_f64())
                .collect::<Vec<_>>());
        }
    }

    /// Oracle: `int_0^inf e^{-x^2} cos(2 pi x) dx = (sqrt(pi)/2) e^{-pi^2}`.
    #[test]
    fn compact_support_extrapolates_to_the_undamped_integral() {
        let ctx = ctx100();
        let params = SugiharaParams::for_context(&ctx);
        // deep levels barely see the damping on the effective support
        let gauss = |x: &BigReal| (-&(x * x)).exp();
        let r = sugihara_cosine(gauss, &ctx.one(), &ctx.zero(), &params, &ctx).unwrap();
        let half_sqrt_pi = ctx.pi().sqrt() / ctx.from_u64(2);
        let exact = &half_sqrt_pi * &(-&(&ctx.pi() * &ctx.pi())).exp();
        let err = (&r.value - &exact).abs();
        assert!(err < ctx.ten_pow(-14), "err {err}");
        assert!(r.warning.is_none());
    }

    #[test]
    fn runge_full_transform_via_damped_levels() {
        let ctx = ctx100();
        let method = BaselineMethod::Sugihara(SugiharaParams::for_context(&ctx));
        let r = full_transform_via_half_integrals(
            |x| TestFunctionId::Runge.eval(x, &ctx),
            Parity::Even,
            &ctx.one(),
            &method,
            &ctx,
        )
        .unwrap();
        let exact = exact_reference(TestFunctionId::Runge, &ctx.one(), &ctx).unwrap();
        let err = (&r.value.re - &exact.re).hypot(&(&r.value.im - &exact.im));
        assert!(err < ctx.ten_pow(-10), "err {err}");
        assert!(r.n_evals <= 50_000, "evals {}", r.n_evals);
    }

    #[test]
    fn abs_transform_via_damped_levels() {
        let ctx = ctx100();
        let method = BaselineMethod::Sugihara(SugiharaParams::for_context(&ctx));
        let r = full_transform_via_half_integrals(
            |x| TestFunctionId::AbsVal.eval(x, &ctx),
            Parity::Even,
            &ctx.one(),
            &method,
            &ctx,
        )
        .unwrap();
        let exact = exact_reference(TestFunctionId::AbsVal, &ctx.one(), &ctx).unwrap();
        let err = (&r.value.re - &exact.re).hypot(&(&r.value.im - &exact.im));
        assert!(err < ctx.ten_pow(-10), "err {err}");
    }

    /// All three routes to the same transform value agree within the
    /// weakest of their accuracy targets.
    #[test]
    fn methods_agree_on_benchmarks() {
        let ctx = ctx100();
        let spec = crate::quadrature::DeRuleSpec::for_context(&ctx);
        let xi = ctx.one();
        let om = BaselineMethod::OouraMori(OouraMoriParams::for_context(&ctx));
        let sugi = BaselineMethod::Sugihara(SugiharaParams::for_context(&ctx));
        for (id, par) in [
            (TestFunctionId::Runge, Parity::Even),
            (TestFunctionId::TanhPi, Parity::Odd),
            (TestFunctionId::AbsVal, Parity::Even),
        ] {
            let f = |x: &BigReal| id.eval(x, &ctx);
            let cp = ctx.complex(ctx.zero(), ctx.one());
            let cm = ctx.complex(ctx.zero(), ctx.from_i64(-1));
            let fh = crate::transform::build_transform(f, &cp, &cm, 48, &spec, &ctx).unwrap();
            let hyper = crate::transform::evaluate(&fh, &xi, fh.max_depth(), &ctx).unwrap();
            let a = full_transform_via_half_integrals(f, par, &xi, &om, &ctx).unwrap();
            let b = full_transform_via_half_integrals(f, par, &xi, &sugi, &ctx).unwrap();
            let bound = ctx.ten_pow(-9);
            for (x, y, tag) in [
                (&hyper, &a.value, "pipeline vs shifted nodes"),
                (&hyper, &b.value, "pipeline vs damped levels"),
                (&a.value, &b.value, "shifted nodes vs damped levels"),
            ] {
                let diff = (&x.re - &y.re).hypot(&(&x.im - &y.im));
                assert!(diff < bound, "{id} {tag}: diff {diff}");
            }
        }
    }

    #[test]
    fn negative_frequency_conjugates_the_odd_part() {
        let ctx = ctx100();
        let method = BaselineMethod::OouraMori(OouraMoriParams::for_context(&ctx));
        let f = |x: &BigReal| TestFunctionId::TanhPi.eval(x, &ctx);
        let plus = full_transform_via_half_integrals(&f, Parity::Odd, &ctx.one(), &method, &ctx)
            .unwrap();
        let minus = full_transform_via_half_integrals(
            &f,
            Parity::Odd,
            &ctx.from_i64(-1),
            &method,
            &ctx,
        )
        .unwrap();
        // odd real f: transform is odd and purely imaginary
        let sum = (&plus.value.re + &minus.value.re).hypot(&(&plus.value.im + &minus.value.im));
        assert!(sum < ctx.ten_pow(-15), "sum {sum}");
    }

    #[test]
    fn zero_frequency_is_rejected() {
        let ctx = ctx100();
        let method = BaselineMethod::OouraMori(OouraMoriParams::for_context(&ctx));
        assert!(full_transform_via_half_integrals(
            |_| ctx.complex_one(),
            Parity::Even,
            &ctx.zero(),
            &method,
            &ctx,
        )
        .is_err());
    }

    #[test]
    fn too_few_levels_is_rejected() {
        let ctx = ctx100();
        let params = SugiharaParams {
            levels: 1,
            ..SugiharaParams::for_context(&ctx)
        };
        assert!(sugihara_cosine(|x| (-x).exp(), &ctx.one(), &ctx.zero(), &params, &ctx).is_err());
    }
}
