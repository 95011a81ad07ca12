//! Arbitrary-precision real and complex arithmetic.
//!
//! Reals are MPFR floats behind a decimal-digit precision contract; complex
//! values are explicit re/im pairs so every complex operation is built from
//! correctly rounded real ones. Values are immutable after construction and
//! carry their own precision, so they can be shared freely across threads.

use std::cmp::Ordering;
use std::fmt;

use rug::ops::Pow;
use rug::Float;

use crate::error::Error;
use crate::Result;

/// Bits per decimal digit, rounded up a little (log2 10 = 3.3219...).
const BITS_PER_DIGIT: f64 = 3.3220;

/// Smallest accepted working precision; the quotient-difference conversion
/// is useless below this.
pub const MIN_DECIMAL_DIGITS: u32 = 8;

/// Default number of guard digits added on top of the requested precision.
pub const DEFAULT_GUARD_DIGITS: u32 = 10;

/// Working precision shared by every operation of a computation.
///
/// `decimal_digits` is the contract (results are good to roughly that many
/// digits); `guard_digits` extra digits are carried internally so composite
/// operations do not erode the contract.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrecisionContext {
    decimal_digits: u32,
    guard_digits: u32,
    bits: u32,
}

impl PrecisionContext {
    /// Creates a context with the default guard digits.
    pub fn new(decimal_digits: u32) -> Result<Self> {
        Self::with_guard(decimal_digits, DEFAULT_GUARD_DIGITS)
    }

    /// Creates a context with an explicit number of guard digits.
    pub fn with_guard(decimal_digits: u32, guard_digits: u32) -> Result<Self> {
        if decimal_digits < MIN_DECIMAL_DIGITS {
            return Err(Error::PrecisionTooCoarse(decimal_digits));
        }
        let total = decimal_digits as u64 + guard_digits as u64;
        let bits = (total as f64 * BITS_PER_DIGIT).ceil() as u32 + 2;
        Ok(PrecisionContext {
            decimal_digits,
            guard_digits,
            bits,
        })
    }

    pub fn decimal_digits(&self) -> u32 {
        self.decimal_digits
    }

    pub fn guard_digits(&self) -> u32 {
        self.guard_digits
    }

    /// Binary working precision backing the decimal contract.
    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn zero(&self) -> BigReal {
        BigReal(Float::with_val(self.bits, 0))
    }

    pub fn one(&self) -> BigReal {
        BigReal(Float::with_val(self.bits, 1))
    }

    pub fn from_u64(&self, v: u64) -> BigReal {
        BigReal(Float::with_val(self.bits, v))
    }

    pub fn from_i64(&self, v: i64) -> BigReal {
        BigReal(Float::with_val(self.bits, v))
    }

    pub fn from_f64(&self, v: f64) -> BigReal {
        BigReal(Float::with_val(self.bits, v))
    }

    /// Exact rational p/q rounded once to working precision.
    pub fn from_ratio(&self, p: i64, q: u64) -> BigReal {
        BigReal(Float::with_val(self.bits, p) / Float::with_val(self.bits, q))
    }

    pub fn pi(&self) -> BigReal {
        BigReal(Float::with_val(self.bits, rug::float::Constant::Pi))
    }

    pub fn two_pi(&self) -> BigReal {
        BigReal(Float::with_val(self.bits, rug::float::Constant::Pi) * 2u32)
    }

    /// Euler's constant.
    pub fn euler_gamma(&self) -> BigReal {
        BigReal(Float::with_val(self.bits, rug::float::Constant::Euler))
    }

    /// 10^e, exactly rounded.
    pub fn ten_pow(&self, e: i64) -> BigReal {
        BigReal(Float::with_val(self.bits, 10).pow(e as i32))
    }

    /// Parses the canonical decimal text form.
    pub fn parse_real(&self, text: &str) -> Result<BigReal> {
        let trimmed = text.trim();
        match Float::parse(trimmed) {
            Ok(incomplete) => {
                let f = Float::with_val(self.bits, incomplete);
                if f.is_finite() {
                    Ok(BigReal(f))
                } else {
                    Err(Error::Parse {
                        kind: "real number",
                        text: text.to_string(),
                    })
                }
            }
            Err(_) => Err(Error::Parse {
                kind: "real number",
                text: text.to_string(),
            }),
        }
    }

    /// Parses the canonical complex text form `<re>+<im>i` / `<re>-<im>i`.
    pub fn parse_complex(&self, text: &str) -> Result<BigComplex> {
        let s = text.trim();
        let inner = s.strip_suffix(['i', 'I']).ok_or_else(|| Error::Parse {
            kind: "complex number",
            text: text.to_string(),
        })?;
        // Split before the sign of the imaginary part: the last '+'/'-' that
        // is not an exponent sign and not the leading sign of the real part.
        let bytes = inner.as_bytes();
        let mut split = None;
        for i in (1..bytes.len()).rev() {
            let b = bytes[i];
            if (b == b'+' || b == b'-') && !matches!(bytes[i - 1], b'e' | b'E') {
                split = Some(i);
                break;
            }
        }
        let at = split.ok_or_else(|| Error::Parse {
            kind: "complex number",
            text: text.to_string(),
        })?;
        let re = self.parse_real(&inner[..at])?;
        let sign = if bytes[at] == b'-' { -1i64 } else { 1 };
        let im_text = inner[at + 1..].trim();
        let im_mag = if im_text.is_empty() {
            self.one()
        } else {
            self.parse_real(im_text)?
        };
        let im = &im_mag * &self.from_i64(sign);
        Ok(BigComplex { re, im })
    }

    pub fn complex(&self, re: BigReal, im: BigReal) -> BigComplex {
        BigComplex { re, im }
    }

    pub fn complex_zero(&self) -> BigComplex {
        BigComplex {
            re: self.zero(),
            im: self.zero(),
        }
    }

    pub fn complex_one(&self) -> BigComplex {
        BigComplex {
            re: self.one(),
            im: self.zero(),
        }
    }

    /// The imaginary unit.
    pub fn i(&self) -> BigComplex {
        BigComplex {
            re: self.zero(),
            im: self.one(),
        }
    }

}

/// Creates a context for the given decimal precision.
///
/// This is the entry point the rest of the crate builds on; it rejects
/// precisions below [`MIN_DECIMAL_DIGITS`].
pub fn make_context(decimal_digits: u32) -> Result<PrecisionContext> {
    PrecisionContext::new(decimal_digits)
}

/// Arbitrary-precision real number (sign, significand, exponent).
#[derive(Debug, Clone, PartialEq)]
pub struct BigReal(Float);

impl BigReal {
    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_finite(&self) -> bool {
        self.0.is_finite()
    }

    pub fn is_sign_negative(&self) -> bool {
        self.0.is_sign_negative() && !self.0.is_zero()
    }

    /// Finite and strictly greater than zero.
    pub fn is_positive(&self) -> bool {
        self.0.is_finite() && !self.0.is_zero() && !self.0.is_sign_negative()
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64()
    }

    pub fn abs(&self) -> BigReal {
        BigReal(self.0.clone().abs())
    }

    pub fn neg(&self) -> BigReal {
        BigReal(-self.0.clone())
    }

    pub fn exp(&self) -> BigReal {
        BigReal(self.0.clone().exp())
    }

    /// Natural log; caller guarantees positivity.
    pub fn ln(&self) -> BigReal {
        BigReal(self.0.clone().ln())
    }

    pub fn sin(&self) -> BigReal {
        BigReal(self.0.clone().sin())
    }

    pub fn cos(&self) -> BigReal {
        BigReal(self.0.clone().cos())
    }

    pub fn sin_cos(&self) -> (BigReal, BigReal) {
        let prec = self.0.prec();
        let (s, c) = self.0.clone().sin_cos(Float::new(prec));
        (BigReal(s), BigReal(c))
    }

    pub fn sinh(&self) -> BigReal {
        BigReal(self.0.clone().sinh())
    }

    pub fn cosh(&self) -> BigReal {
        BigReal(self.0.clone().cosh())
    }

    pub fn tanh(&self) -> BigReal {
        BigReal(self.0.clone().tanh())
    }

    /// exp(self) - 1 without cancellation near zero.
    pub fn exp_m1(&self) -> BigReal {
        BigReal(self.0.clone().exp_m1())
    }

    /// Square root; caller guarantees non-negativity.
    pub fn sqrt(&self) -> BigReal {
        BigReal(self.0.clone().sqrt())
    }

    pub fn atan(&self) -> BigReal {
        BigReal(self.0.clone().atan())
    }

    /// Two-argument arctangent of (self, x).
    pub fn atan2(&self, x: &BigReal) -> BigReal {
        BigReal(self.0.clone().atan2(&x.0))
    }

    pub fn hypot(&self, other: &BigReal) -> BigReal {
        BigReal(self.0.clone().hypot(&other.0))
    }

    pub fn recip(&self) -> BigReal {
        BigReal(Float::with_val(self.0.prec(), self.0.recip_ref()))
    }

    pub fn min(&self, other: &BigReal) -> BigReal {
        if self <= other {
            self.clone()
        } else {
            other.clone()
        }
    }

    pub fn max(&self, other: &BigReal) -> BigReal {
        if self >= other {
            self.clone()
        } else {
            other.clone()
        }
    }

    /// Canonical decimal text form: optional sign, digits, optional fraction,
    /// optional `e` exponent. Round-trips exactly at the value's precision.
    pub fn to_canonical_string(&self) -> String {
        if self.0.is_zero() {
            return "0".to_string();
        }
        if !self.0.is_finite() {
            return if self.0.is_nan() {
                "nan".to_string()
            } else if self.0.is_sign_negative() {
                "-inf".to_string()
            } else {
                "inf".to_string()
            };
        }
        let digits = (self.0.prec() as f64 / BITS_PER_DIGIT * 1.0042).ceil() as usize + 3;
        let s = self.0.to_string_radix(10, Some(digits));
        trim_mantissa(&s)
    }

    /// Fixed significant-digit rendering used by the CLI emitters.
    pub fn to_string_sig(&self, sig_digits: usize) -> String {
        if self.0.is_zero() {
            return "0".to_string();
        }
        if !self.0.is_finite() {
            return self.to_canonical_string();
        }
        let s = self.0.to_string_radix(10, Some(sig_digits.max(1)));
        trim_mantissa(&s)
    }

    pub(crate) fn from_raw(f: Float) -> BigReal {
        BigReal(f)
    }
}

/// Strips redundant trailing zeros from the mantissa of a radix-10 float string.
fn trim_mantissa(s: &str) -> String {
    let (mantissa, exp) = match s.find(['e', 'E']) {
        Some(pos) => (&s[..pos], &s[pos..]),
        None => (s, ""),
    };
    let trimmed = if mantissa.contains('.') {
        let t = mantissa.trim_end_matches('0');
        t.strip_suffix('.').unwrap_or(t)
    } else {
        mantissa
    };
    format!("{trimmed}{exp}")
}

impl fmt::Display for BigReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_canonical_string())
    }
}

impl PartialOrd for BigReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.0.partial_cmp(&other.0)
    }
}

macro_rules! binary_real_op {
    ($trait:ident, $method:ident, $op:tt) => {
        impl std::ops::$trait<&BigReal> for &BigReal {
            type Output = BigReal;
            fn $method(self, rhs: &BigReal) -> BigReal {
                let prec = self.0.prec().max(rhs.0.prec());
                BigReal(Float::with_val(prec, &self.0 $op &rhs.0))
            }
        }
        impl std::ops::$trait<BigReal> for BigReal {
            type Output = BigReal;
            fn $method(self, rhs: BigReal) -> BigReal {
                (&self) $op (&rhs)
            }
        }
        impl std::ops::$trait<&BigReal> for BigReal {
            type Output = BigReal;
            fn $method(self, rhs: &BigReal) -> BigReal {
                (&self) $op rhs
            }
        }
        impl std::ops::$trait<BigReal> for &BigReal {
            type Output = BigReal;
            fn $method(self, rhs: BigReal) -> BigReal {
                self $op (&rhs)
            }
        }
    };
}

binary_real_op!(Add, add, +);
binary_real_op!(Sub, sub, -);
binary_real_op!(Mul, mul, *);
binary_real_op!(Div, div, /);

impl std::ops::Neg for &BigReal {
    type Output = BigReal;
    fn neg(self) -> BigReal {
        BigReal(-self.0.clone())
    }
}

impl std::ops::Neg for BigReal {
    type Output = BigReal;
    fn neg(self) -> BigReal {
        BigReal(-self.0)
    }
}

/// Arbitrary-precision complex number as an explicit re/im pair.
#[derive(Debug, Clone, PartialEq)]
pub struct BigComplex {
    pub re: BigReal,
    pub im: BigReal,
}

impl BigComplex {
    pub fn conj(&self) -> BigComplex {
        BigComplex {
            re: self.re.clone(),
            im: -&self.im,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_finite(&self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }

    /// Modulus, computed without intermediate overflow.
    pub fn abs(&self) -> BigReal {
        self.re.hypot(&self.im)
    }

    /// Principal argument in (-pi, pi].
    pub fn arg(&self) -> BigReal {
        self.im.atan2(&self.re)
    }

    /// Multiplication by a real scalar.
    pub fn scale(&self, s: &BigReal) -> BigComplex {
        BigComplex {
            re: &self.re * s,
            im: &self.im * s,
        }
    }

    /// Multiplication by i times a real scalar (rotates by 90 degrees).
    pub fn mul_i_scale(&self, s: &BigReal) -> BigComplex {
        BigComplex {
            re: -&(&self.im * s),
            im: &self.re * s,
        }
    }

    pub fn recip(&self) -> BigComplex {
        let denom = &(&self.re * &self.re) + &(&self.im * &self.im);
        BigComplex {
            re: &self.re / &denom,
            im: -&(&self.im / &denom),
        }
    }

    /// Canonical text form `<re>+<im>i` with an explicit imaginary sign.
    pub fn to_canonical_string(&self) -> String {
        let re = self.re.to_canonical_string();
        if self.im.is_sign_negative() {
            format!("{re}-{}i", self.im.abs().to_canonical_string())
        } else {
            format!("{re}+{}i", self.im.to_canonical_string())
        }
    }
}

impl fmt::Display for BigComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_canonical_string())
    }
}

impl std::ops::Add<&BigComplex> for &BigComplex {
    type Output = BigComplex;
    fn add(self, rhs: &BigComplex) -> BigComplex {
        BigComplex {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl std::ops::Sub<&BigComplex> for &BigComplex {
    type Output = BigComplex;
    fn sub(self, rhs: &BigComplex) -> BigComplex {
        BigComplex {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl std::ops::Mul<&BigComplex> for &BigComplex {
    type Output = BigComplex;
    fn mul(self, rhs: &BigComplex) -> BigComplex {
        BigComplex {
            re: &(&self.re * &rhs.re) - &(&self.im * &rhs.im),
            im: &(&self.re * &rhs.im) + &(&self.im * &rhs.re),
        }
    }
}

impl std::ops::Div<&BigComplex> for &BigComplex {
    type Output = BigComplex;
    fn div(self, rhs: &BigComplex) -> BigComplex {
        let denom = &(&rhs.re * &rhs.re) + &(&rhs.im * &rhs.im);
        BigComplex {
            re: &(&(&self.re * &rhs.re) + &(&self.im * &rhs.im)) / &denom,
            im: &(&(&self.im * &rhs.re) - &(&self.re * &rhs.im)) / &denom,
        }
    }
}

impl std::ops::Neg for &BigComplex {
    type Output = BigComplex;
    fn neg(self) -> BigComplex {
        BigComplex {
            re: -&self.re,
            im: -&self.im,
        }
    }
}

/// Elementary functions available through [`elem`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ElemFn {
    Exp,
    Log,
    Sin,
    Cos,
    Sinh,
    Cosh,
    Tanh,
}

/// Evaluates an elementary function at a complex point.
///
/// `Log` takes the principal branch (cut along the negative real axis, real
/// valued on the positive reals) and rejects zero.
#[allow(clippy::only_used_in_recursion)]
pub fn elem(fn_id: ElemFn, z: &BigComplex, ctx: &PrecisionContext) -> Result<BigComplex> {
    let value = match fn_id {
        ElemFn::Exp => complex_exp(z),
        ElemFn::Log => {
            if z.is_zero() {
                return Err(Error::Domain {
                    op: "log",
                    detail: "argument is zero".to_string(),
                });
            }
            complex_log(z)
        }
        ElemFn::Sin => {
            let (s, c) = z.re.sin_cos();
            BigComplex {
                re: &s * &z.im.cosh(),
                im: &c * &z.im.sinh(),
            }
        }
        ElemFn::Cos => {
            let (s, c) = z.re.sin_cos();
            BigComplex {
                re: &c * &z.im.cosh(),
                im: -&(&s * &z.im.sinh()),
            }
        }
        ElemFn::Sinh => {
            let (s, c) = z.im.sin_cos();
            BigComplex {
                re: &z.re.sinh() * &c,
                im: &z.re.cosh() * &s,
            }
        }
        ElemFn::Cosh => {
            let (s, c) = z.im.sin_cos();
            BigComplex {
                re: &z.re.cosh() * &c,
                im: &z.re.sinh() * &s,
            }
        }
        ElemFn::Tanh => {
            let sh = elem(ElemFn::Sinh, z, ctx)?;
            let ch = elem(ElemFn::Cosh, z, ctx)?;
            if ch.is_zero() {
                return Err(Error::Domain {
                    op: "tanh",
                    detail: format!("pole at {z}"),
                });
            }
            &sh / &ch
        }
    };
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::Range {
            op: match fn_id {
                ElemFn::Exp => "exp",
                ElemFn::Log => "log",
                ElemFn::Sin => "sin",
                ElemFn::Cos => "cos",
                ElemFn::Sinh => "sinh",
                ElemFn::Cosh => "cosh",
                ElemFn::Tanh => "tanh",
            },
        })
    }
}

/// Principal power base^exponent = exp(exponent * log base).
pub fn pow(base: &BigComplex, exponent: &BigComplex, ctx: &PrecisionContext) -> Result<BigComplex> {
    let log = elem(ElemFn::Log, base, ctx)?;
    elem(ElemFn::Exp, &(&log * exponent), ctx)
}

pub(crate) fn complex_exp(z: &BigComplex) -> BigComplex {
    let r = z.re.exp();
    let (s, c) = z.im.sin_cos();
    BigComplex {
        re: &r * &c,
        im: &r * &s,
    }
}

pub(crate) fn complex_log(z: &BigComplex) -> BigComplex {
    BigComplex {
        re: z.abs().ln(),
        im: z.arg(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ctx100() -> PrecisionContext {
        make_context(100).unwrap()
    }

    #[test]
    fn context_accepts_paper_precision() {
        let ctx = make_context(100).unwrap();
        assert_eq!(ctx.decimal_digits(), 100);
        assert!(ctx.bits() >= 332);
        let ctx50 = make_context(50).unwrap();
        assert_eq!(ctx50.decimal_digits(), 50);
    }

    #[test]
    fn context_rejects_coarse_precision() {
        assert!(matches!(
            make_context(4),
            Err(Error::PrecisionTooCoarse(4))
        ));
    }

    #[test]
    fn exp_and_log_identities() {
        let ctx = ctx100();
        let one = elem(ElemFn::Exp, &ctx.complex_zero(), &ctx).unwrap();
        assert_eq!(one.re, ctx.one());
        assert!(one.im.is_zero());

        let zero = elem(ElemFn::Log, &ctx.complex_one(), &ctx).unwrap();
        assert!(zero.re.is_zero());
        assert!(zero.im.is_zero());
    }

    #[test]
    fn log_of_zero_is_domain_error() {
        let ctx = ctx100();
        assert!(matches!(
            elem(ElemFn::Log, &ctx.complex_zero(), &ctx),
            Err(Error::Domain { op: "log", .. })
        ));
    }

    #[test]
    fn log_principal_branch_is_real_on_positive_axis() {
        let ctx = ctx100();
        let z = ctx.complex(ctx.from_u64(7), ctx.zero());
        let l = elem(ElemFn::Log, &z, &ctx).unwrap();
        assert!(l.im.is_zero());
        // Just below the negative real axis the argument approaches -pi.
        let w = ctx.complex(ctx.from_i64(-1), ctx.ten_pow(-50).neg());
        let lw = elem(ElemFn::Log, &w, &ctx).unwrap();
        assert!(lw.im < ctx.zero());
    }

    /// Oracle: recompute at doubled precision and compare.
    #[test]
    fn tanh_at_one_matches_doubled_precision() {
        let ctx50 = make_context(50).unwrap();
        let ctx100 = ctx100();
        let t50 = elem(ElemFn::Tanh, &ctx50.complex_one(), &ctx50).unwrap();
        let t100 = elem(ElemFn::Tanh, &ctx100.complex_one(), &ctx100).unwrap();
        let diff = (&t50.re - &t100.re).abs();
        assert!(diff < ctx100.ten_pow(-48), "diff = {diff}");
    }

    #[test]
    fn dual_precision_agreement_on_random_points() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
        let d = 50u32;
        let lo = make_context(d).unwrap();
        let hi = make_context(2 * d).unwrap();
        let tol = lo.ten_pow(-(d as i64) + 2);
        for fn_id in [
            ElemFn::Exp,
            ElemFn::Log,
            ElemFn::Sin,
            ElemFn::Cos,
            ElemFn::Sinh,
            ElemFn::Cosh,
            ElemFn::Tanh,
        ] {
            for _ in 0..100 {
                let re: f64 = rng.gen_range(-3.0..3.0);
                let im: f64 = rng.gen_range(-3.0..3.0);
                let (re, im) = match fn_id {
                    // keep log clear of the branch cut and zero
                    ElemFn::Log => (re.abs() + 0.1, im),
                    // keep tanh away from poles at i*pi/2 etc.
                    ElemFn::Tanh => (re, im * 0.4),
                    _ => (re, im),
                };
                let z_lo = lo.complex(lo.from_f64(re), lo.from_f64(im));
                let z_hi = hi.complex(hi.from_f64(re), hi.from_f64(im));
                let v_lo = elem(fn_id, &z_lo, &lo).unwrap();
                let v_hi = elem(fn_id, &z_hi, &hi).unwrap();
                let scale = v_hi.abs().max(&hi.one());
                let diff = (&v_lo.re - &v_hi.re).hypot(&(&v_lo.im - &v_hi.im));
                assert!(
                    &diff / &scale < tol,
                    "{fn_id:?} at {re}+{im}i: diff {diff}"
                );
            }
        }
    }

    #[test]
    fn pow_matches_integer_powers() {
        let ctx = ctx100();
        let z = ctx.complex(ctx.from_f64(1.25), ctx.from_f64(-0.5));
        let cubed = &(&z * &z) * &z;
        let via_pow = pow(&z, &ctx.complex(ctx.from_u64(3), ctx.zero()), &ctx).unwrap();
        let diff = (&cubed.re - &via_pow.re).hypot(&(&cubed.im - &via_pow.im));
        assert!(diff < ctx.ten_pow(-95));
    }

    proptest! {
        #[test]
        fn canonical_text_roundtrip(v in -1.0e10f64..1.0e10, scale in -40i64..40) {
            let ctx = ctx100();
            let x = &ctx.from_f64(v) * &ctx.ten_pow(scale);
            let text = x.to_canonical_string();
            let back = ctx.parse_real(&text).unwrap();
            prop_assert_eq!(&back, &x);
        }

        #[test]
        fn complex_text_roundtrip(re in -1.0e6f64..1.0e6, im in -1.0e6f64..1.0e6) {
            let ctx = ctx100();
            let z = ctx.complex(ctx.from_f64(re), ctx.from_f64(im));
            let back = ctx.parse_complex(&z.to_canonical_string()).unwrap();
            prop_assert_eq!(&back.re, &z.re);
            prop_assert_eq!(&back.im, &z.im);
        }

        #[test]
        fn conjugation_is_involutive(re in -1.0e6f64..1.0e6, im in -1.0e6f64..1.0e6) {
            let ctx = ctx100();
            let z = ctx.complex(ctx.from_f64(re), ctx.from_f64(im));
            prop_assert_eq!(z.conj().conj(), z);
        }

        #[test]
        fn exp_log_inverse_off_cut(re in 0.05f64..50.0, im in -20.0f64..20.0) {
            let ctx = ctx100();
            let z = ctx.complex(ctx.from_f64(re), ctx.from_f64(im));
            let back = elem(ElemFn::Exp, &elem(ElemFn::Log, &z, &ctx).unwrap(), &ctx).unwrap();
            let diff = (&back.re - &z.re).hypot(&(&back.im - &z.im));
            let scale = z.abs();
            prop_assert!(&diff / &scale < ctx.ten_pow(-98));
        }
    }

    #[test]
    fn complex_parse_handles_exponent_signs() {
        let ctx = ctx100();
        let z = ctx.parse_complex("1.5e-3-2.25e+1i").unwrap();
        assert_eq!(z.re, ctx.from_ratio(15, 10_000));
        assert_eq!(z.im, ctx.from_f64(-22.5));
        let w = ctx.parse_complex("0+1i").unwrap();
        assert!(w.re.is_zero());
        assert_eq!(w.im, ctx.one());
    }
}
