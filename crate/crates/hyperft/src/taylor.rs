//! Taylor expansions of the defining functions about off-axis centers.
//!
//! The upper-half-plane function collects `f` over the negative axis, the
//! lower one over the positive axis. After pulling the center's decay rate
//! out as the substitution `x -> x / (2 pi |Im center|)`, each coefficient
//! becomes an `e^{-x}`-weighted half-line integral, and one set of `f`
//! samples serves every order: the power factor is accumulated per node.

use std::fmt;

use crate::error::Error;
use crate::numerics::{BigComplex, BigReal, PrecisionContext};
use crate::quadrature::{de_nodes, DeRuleSpec};
use crate::Result;

/// Centers closer to the real axis than this lose the decay factor that
/// makes the coefficient integrals tame.
const MIN_CENTER_IMAG: f64 = 1e-3;

/// Upper bound on the automatic mesh widening for far-out centers; beyond
/// this the trapezoid accuracy would silently drop below the digit contract.
const MAX_MESH_FACTOR: f64 = 3.0;

/// Which defining function a computation refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HalfPlaneSign {
    /// Holomorphic in the upper half-plane (`Im center > 0`).
    Plus,
    /// Holomorphic in the lower half-plane (`Im center < 0`).
    Minus,
}

impl HalfPlaneSign {
    /// +1 for the upper branch, -1 for the lower.
    pub fn unit(&self) -> i64 {
        match self {
            HalfPlaneSign::Plus => 1,
            HalfPlaneSign::Minus => -1,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            HalfPlaneSign::Plus => "plus",
            HalfPlaneSign::Minus => "minus",
        }
    }
}

impl fmt::Display for HalfPlaneSign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Taylor expansion of one defining function.
#[derive(Debug, Clone)]
pub struct TaylorExpansion {
    sign: HalfPlaneSign,
    center: BigComplex,
    coefficients: Vec<BigComplex>,
    eval_count: usize,
}

impl TaylorExpansion {
    pub fn sign(&self) -> HalfPlaneSign {
        self.sign
    }

    pub fn center(&self) -> &BigComplex {
        &self.center
    }

    /// Coefficients `c_0 .. c_{M-1}`.
    pub fn coefficients(&self) -> &[BigComplex] {
        &self.coefficients
    }

    /// Number of `f` evaluations consumed (one per quadrature node, shared
    /// across all orders).
    pub fn eval_count(&self) -> usize {
        self.eval_count
    }

    /// True when every coefficient came out exactly zero, which happens for
    /// the zero function and leaves nothing for the continued fraction.
    pub fn is_all_zero(&self) -> bool {
        self.coefficients.iter().all(|c| c.is_zero())
    }
}

fn check_center(sign: HalfPlaneSign, center: &BigComplex, ctx: &PrecisionContext) -> Result<()> {
    let im_ok = match sign {
        HalfPlaneSign::Plus => center.im > ctx.zero(),
        HalfPlaneSign::Minus => center.im < ctx.zero(),
    };
    if !im_ok {
        return Err(Error::Domain {
            op: "taylor_coefficients",
            detail: format!(
                "center {} is not in the {} half-plane",
                center,
                match sign {
                    HalfPlaneSign::Plus => "upper",
                    HalfPlaneSign::Minus => "lower",
                }
            ),
        });
    }
    if center.im.abs() < ctx.from_f64(MIN_CENTER_IMAG) {
        return Err(Error::IllConditionedCenter {
            center: center.to_canonical_string(),
        });
    }
    Ok(())
}

/// Mesh widening appropriate for a center: the decay substitution stretches
/// the smoothness scale by `|Im center|`, while a nonzero real part puts the
/// oscillation `e^{i (Re/|Im|) x}` back into the integrand and shrinks the
/// usable mesh by `(2/pi) atan(|Im|/|Re|)`.
pub(crate) fn center_mesh_factor(center: &BigComplex, ctx: &PrecisionContext) -> BigReal {
    let abs_eta = center.im.abs();
    let factor = if center.re.is_zero() {
        abs_eta.clone()
    } else {
        let ratio = &abs_eta / &center.re.abs();
        &(&abs_eta * &ratio.atan()) * &(&ctx.from_u64(2) / &ctx.pi())
    };
    factor.min(&ctx.from_f64(MAX_MESH_FACTOR))
}

/// Oscillatory factor of the transformed coefficient integrand at `x`.
///
/// Purely imaginary centers produce no oscillation at all; that case returns
/// exactly one so the imaginary part stays identically zero through the sums.
pub(crate) fn oscillation_phase(
    sign: HalfPlaneSign,
    center: &BigComplex,
    x: &BigReal,
    ctx: &PrecisionContext,
) -> BigComplex {
    if center.re.is_zero() {
        return ctx.complex_one();
    }
    let mu = &center.re / &center.im.abs();
    let angle = &(&mu * x) * &ctx.from_i64(sign.unit());
    let (s, c) = angle.sin_cos();
    ctx.complex(c, s)
}

/// Computes `M` Taylor coefficients of one defining function about `center`.
///
/// `f` is sampled once per node of the shared rule; `eval_count` reports
/// exactly that number. The mesh of `spec` is treated as a base value and
/// scaled by [`center_mesh_factor`] for the given center.
pub fn taylor_coefficients<F>(
    f: F,
    sign: HalfPlaneSign,
    center: &BigComplex,
    m: usize,
    spec: &DeRuleSpec,
    ctx: &PrecisionContext,
) -> Result<TaylorExpansion>
where
    F: Fn(&BigReal) -> BigComplex,
{
    if m == 0 {
        return Err(Error::InvalidSpec("need at least one Taylor term".into()));
    }
    check_center(sign, center, ctx)?;

    let eff_spec = spec.scaled_mesh(&center_mesh_factor(center, ctx))?;
    let nodes = de_nodes(&eff_spec, ctx)?;

    let s_unit = ctx.from_i64(sign.unit());
    let abs_eta = center.im.abs();
    let x_scale = ctx.two_pi() * &abs_eta; // f argument is -s * x / x_scale
    let inv_eta = abs_eta.recip();

    let mut sums: Vec<BigComplex> = (0..m).map(|_| ctx.complex_zero()).collect();
    for node in &nodes {
        let x = &node.abscissa;
        let arg = &(-&s_unit * x) / &x_scale;
        let fv = f(&arg);
        if !fv.is_finite() {
            return Err(Error::Evaluation {
                abscissa: arg.to_canonical_string(),
            });
        }
        let phase = oscillation_phase(sign, center, x, ctx);
        let base = (&fv * &phase).scale(&(&node.weight * &node.decay));
        // power factor (i s x / |eta|)^n, built incrementally
        let rot = &(&s_unit * x) * &inv_eta;
        let mut term = base;
        for slot in sums.iter_mut() {
            *slot = &*slot + &term;
            term = term.mul_i_scale(&rot);
        }
    }

    let prefactor = &s_unit / &x_scale;
    let mut factorial = ctx.one();
    let coefficients: Vec<BigComplex> = sums
        .into_iter()
        .enumerate()
        .map(|(n, sum)| {
            if n > 0 {
                factorial = &factorial * &ctx.from_u64(n as u64);
            }
            sum.scale(&(&prefactor / &factorial))
        })
        .collect();

    Ok(TaylorExpansion {
        sign,
        center: center.clone(),
        coefficients,
        eval_count: nodes.len(),
    })
}

/// Computes both defining-function expansions; the combined `eval_count`
/// (the sum of the branches) is the method's headline cost statistic.
pub fn taylor_pair<F>(
    f: F,
    center_plus: &BigComplex,
    center_minus: &BigComplex,
    m: usize,
    spec: &DeRuleSpec,
    ctx: &PrecisionContext,
) -> Result<(TaylorExpansion, TaylorExpansion)>
where
    F: Fn(&BigReal) -> BigComplex,
{
    let plus = taylor_coefficients(&f, HalfPlaneSign::Plus, center_plus, m, spec, ctx)
        .map_err(|e| e.in_branch("plus"))?;
    let minus = taylor_coefficients(&f, HalfPlaneSign::Minus, center_minus, m, spec, ctx)
        .map_err(|e| e.in_branch("minus"))?;
    Ok((plus, minus))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::make_context;

    fn ctx100() -> PrecisionContext {
        make_context(100).unwrap()
    }

    fn unit_f(ctx: &PrecisionContext) -> impl Fn(&BigReal) -> BigComplex + '_ {
        move |_| ctx.complex_one()
    }

    fn runge(ctx: &PrecisionContext) -> impl Fn(&BigReal) -> BigComplex + '_ {
        move |x| ctx.complex(ctx.one() / &(&ctx.one() + &(x * x)), ctx.zero())
    }

    /// Closed form for f = 1: both defining functions are -1/(2 pi i zeta),
    /// so c_n = -(-1)^n / (2 pi i center^{n+1}).
    fn const_one_coefficient(n: usize, center: &BigComplex, ctx: &PrecisionContext) -> BigComplex {
        let mut zp = center.clone();
        for _ in 0..n {
            zp = &zp * center;
        }
        let minus_two_pi_i = ctx.complex(ctx.zero(), -&ctx.two_pi());
        let v = &ctx.complex_one() / &(&minus_two_pi_i * &zp);
        if n % 2 == 0 {
            v
        } else {
            -&v
        }
    }

    #[test]
    fn const_one_leading_coefficients_at_i() {
        let ctx = ctx100();
        let spec = DeRuleSpec::for_context(&ctx);
        let center = ctx.i();
        let exp =
            taylor_coefficients(unit_f(&ctx), HalfPlaneSign::Plus, &center, 4, &spec, &ctx)
                .unwrap();
        // c0 = 1/(2 pi)
        let c0 = &exp.coefficients()[0];
        let want0 = ctx.two_pi().recip();
        assert!((&c0.re - &want0).abs() < ctx.ten_pow(-95), "c0 = {c0}");
        assert!(c0.im.abs() < ctx.ten_pow(-95));
        // c1 = i/(2 pi)
        let c1 = &exp.coefficients()[1];
        assert!((&c1.im - &want0).abs() < ctx.ten_pow(-95), "c1 = {c1}");
        assert!(c1.re.abs() < ctx.ten_pow(-95));
    }

    #[test]
    fn const_one_matches_closed_form_to_order_twenty() {
        let ctx = ctx100();
        let spec = DeRuleSpec::for_context(&ctx);
        for center in [
            ctx.complex(ctx.zero(), ctx.one()),
            ctx.complex(ctx.zero(), ctx.from_u64(2)),
            ctx.complex(ctx.one(), ctx.one()),
        ] {
            let exp = taylor_coefficients(
                unit_f(&ctx),
                HalfPlaneSign::Plus,
                &center,
                21,
                &spec,
                &ctx,
            )
            .unwrap();
            for (n, got) in exp.coefficients().iter().enumerate() {
                let want = const_one_coefficient(n, &center, &ctx);
                let err = (&got.re - &want.re).hypot(&(&got.im - &want.im));
                let scale = want.abs();
                assert!(
                    &err / &scale < ctx.ten_pow(-85),
                    "center {center}, n = {n}: err {err}"
                );
            }
        }
    }

    #[test]
    fn lower_branch_closed_form_for_const_one() {
        let ctx = ctx100();
        let spec = DeRuleSpec::for_context(&ctx);
        let center = ctx.complex(ctx.zero(), ctx.from_i64(-1));
        let exp =
            taylor_coefficients(unit_f(&ctx), HalfPlaneSign::Minus, &center, 8, &spec, &ctx)
                .unwrap();
        for (n, got) in exp.coefficients().iter().enumerate() {
            let want = const_one_coefficient(n, &center, &ctx);
            let err = (&got.re - &want.re).hypot(&(&got.im - &want.im));
            assert!(&err / &want.abs() < ctx.ten_pow(-85), "n = {n}: err {err}");
        }
    }

    #[test]
    fn zero_function_flags_all_zero() {
        let ctx = ctx100();
        let spec = DeRuleSpec::for_context(&ctx);
        let exp = taylor_coefficients(
            |_| ctx.complex_zero(),
            HalfPlaneSign::Plus,
            &ctx.i(),
            6,
            &spec,
            &ctx,
        )
        .unwrap();
        assert!(exp.is_all_zero());
    }

    #[test]
    fn half_plane_mismatch_is_rejected() {
        let ctx = ctx100();
        let spec = DeRuleSpec::for_context(&ctx);
        let below = ctx.complex(ctx.zero(), ctx.from_i64(-1));
        assert!(taylor_coefficients(
            unit_f(&ctx),
            HalfPlaneSign::Plus,
            &below,
            4,
            &spec,
            &ctx
        )
        .is_err());
    }

    #[test]
    fn near_axis_center_is_ill_conditioned() {
        let ctx = ctx100();
        let spec = DeRuleSpec::for_context(&ctx);
        let close = ctx.complex(ctx.zero(), ctx.ten_pow(-4));
        assert!(matches!(
            taylor_coefficients(unit_f(&ctx), HalfPlaneSign::Plus, &close, 4, &spec, &ctx),
            Err(Error::IllConditionedCenter { .. })
        ));
    }

    #[test]
    fn purely_imaginary_center_has_exactly_real_phase() {
        let ctx = ctx100();
        let center = ctx.complex(ctx.zero(), ctx.from_u64(2));
        let x = ctx.from_f64(3.7);
        let phase = oscillation_phase(HalfPlaneSign::Plus, &center, &x, &ctx);
        assert!(phase.im.is_zero());
        assert_eq!(phase.re, ctx.one());
        // and a real f then yields an exactly real c0
        let spec = DeRuleSpec::for_context(&ctx);
        let exp =
            taylor_coefficients(runge(&ctx), HalfPlaneSign::Plus, &center, 3, &spec, &ctx)
                .unwrap();
        assert!(exp.coefficients()[0].im.is_zero());
    }

    #[test]
    fn conjugate_symmetry_for_real_even_f() {
        let ctx = ctx100();
        let spec = DeRuleSpec::for_context(&ctx);
        let plus_center = ctx.complex(ctx.one(), ctx.one());
        let minus_center = plus_center.conj();
        let (plus, minus) = taylor_pair(
            runge(&ctx),
            &plus_center,
            &minus_center,
            16,
            &spec,
            &ctx,
        )
        .unwrap();
        let d = ctx.decimal_digits() as i64;
        let mut max_plus = ctx.zero();
        for c in plus.coefficients() {
            max_plus = max_plus.max(&c.abs());
        }
        let bound = &ctx.ten_pow(-(d - 15)) * &max_plus;
        for (cm, cp) in minus.coefficients().iter().zip(plus.coefficients()) {
            let want = -&cp.conj();
            let err = (&cm.re - &want.re).hypot(&(&cm.im - &want.im));
            assert!(err < bound, "err {err} bound {bound}");
        }
    }

    #[test]
    fn eval_count_is_shared_across_orders() {
        let ctx = ctx100();
        let spec = DeRuleSpec::for_context(&ctx);
        let center = ctx.i();
        let small =
            taylor_coefficients(runge(&ctx), HalfPlaneSign::Plus, &center, 2, &spec, &ctx)
                .unwrap();
        let large =
            taylor_coefficients(runge(&ctx), HalfPlaneSign::Plus, &center, 40, &spec, &ctx)
                .unwrap();
        assert_eq!(small.eval_count(), large.eval_count());
    }

    /// The headline cost figures: about 1.4e3 samples for the unit-distance
    /// centers, half that at twice the distance, double with a real offset.
    #[test]
    fn eval_counts_track_center_geometry() {
        let ctx = ctx100();
        let spec = DeRuleSpec::for_context(&ctx);
        let f = runge(&ctx);
        let count = |cp: BigComplex, cm: BigComplex| {
            let (p, m) = taylor_pair(&f, &cp, &cm, 4, &spec, &ctx).unwrap();
            p.eval_count() + m.eval_count()
        };
        let n_i = count(ctx.i(), ctx.complex(ctx.zero(), ctx.from_i64(-1)));
        let n_2i = count(
            ctx.complex(ctx.zero(), ctx.from_u64(2)),
            ctx.complex(ctx.zero(), ctx.from_i64(-2)),
        );
        let n_1i = count(
            ctx.complex(ctx.one(), ctx.one()),
            ctx.complex(ctx.one(), ctx.from_i64(-1)),
        );
        let n_m1i = count(
            ctx.complex(ctx.from_i64(-1), ctx.one()),
            ctx.complex(ctx.from_i64(-1), ctx.from_i64(-1)),
        );
        assert!(n_i >= 1420 / 4 && n_i <= 1420 * 4, "n_i = {n_i}");
        let ratio = n_2i as f64 / n_i as f64;
        assert!((0.3..=0.7).contains(&ratio), "ratio = {ratio}");
        assert_eq!(n_1i, n_m1i);
        assert!(n_1i > n_i);
    }

    #[test]
    fn precision_scaling_consistency() {
        let lo = make_context(50).unwrap();
        let hi = make_context(70).unwrap();
        let center_lo = lo.i();
        let center_hi = hi.i();
        let exp_lo = taylor_coefficients(
            runge(&lo),
            HalfPlaneSign::Plus,
            &center_lo,
            10,
            &DeRuleSpec::for_context(&lo),
            &lo,
        )
        .unwrap();
        let exp_hi = taylor_coefficients(
            runge(&hi),
            HalfPlaneSign::Plus,
            &center_hi,
            10,
            &DeRuleSpec::for_context(&hi),
            &hi,
        )
        .unwrap();
        let bound = hi.ten_pow(-40);
        for (lo_c, hi_c) in exp_lo.coefficients().iter().zip(exp_hi.coefficients()) {
            let err = (&lo_c.re - &hi_c.re).hypot(&(&lo_c.im - &hi_c.im));
            assert!(err < bound, "err {err}");
        }
    }
}
