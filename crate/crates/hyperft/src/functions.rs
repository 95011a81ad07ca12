//! Built-in test functions and their symmetry metadata.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::numerics::{BigComplex, BigReal, PrecisionContext};

/// Symmetry of a real function, used to skip half-integrals that vanish.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
    None,
}

/// The four benchmark functions with known closed-form transforms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TestFunctionId {
    /// `1 / (1 + x^2)`
    Runge,
    /// `tanh(pi x)`
    TanhPi,
    /// `log|x|`
    LogAbs,
    /// `|x|`
    AbsVal,
}

impl TestFunctionId {
    pub const ALL: [TestFunctionId; 4] = [
        TestFunctionId::Runge,
        TestFunctionId::TanhPi,
        TestFunctionId::LogAbs,
        TestFunctionId::AbsVal,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            TestFunctionId::Runge => "runge",
            TestFunctionId::TanhPi => "tanh_pi",
            TestFunctionId::LogAbs => "log_abs",
            TestFunctionId::AbsVal => "abs_val",
        }
    }

    pub fn parity(&self) -> Parity {
        match self {
            TestFunctionId::TanhPi => Parity::Odd,
            _ => Parity::Even,
        }
    }

    /// Pointwise value. `log|x|` is left non-finite at zero; quadrature
    /// abscissas never reach it.
    pub fn eval(&self, x: &BigReal, ctx: &PrecisionContext) -> BigComplex {
        let re = match self {
            TestFunctionId::Runge => ctx.one() / &(&ctx.one() + &(x * x)),
            TestFunctionId::TanhPi => (&ctx.pi() * x).tanh(),
            TestFunctionId::LogAbs => x.abs().ln(),
            TestFunctionId::AbsVal => x.abs(),
        };
        ctx.complex(re, ctx.zero())
    }
}

impl fmt::Display for TestFunctionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TestFunctionId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "runge" => Ok(TestFunctionId::Runge),
            "tanh_pi" => Ok(TestFunctionId::TanhPi),
            "log_abs" => Ok(TestFunctionId::LogAbs),
            "abs_val" => Ok(TestFunctionId::AbsVal),
            _ => Err(Error::Parse {
                kind: "test function",
                text: s.to_string(),
            }),
        }
    }
}

/// Everything the command line can name: the four benchmarks plus the
/// constant function whose transform is the delta distribution.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RegisteredFunction {
    Test(TestFunctionId),
    ConstOne,
}

impl RegisteredFunction {
    pub const ALL: [RegisteredFunction; 5] = [
        RegisteredFunction::Test(TestFunctionId::Runge),
        RegisteredFunction::Test(TestFunctionId::TanhPi),
        RegisteredFunction::Test(TestFunctionId::LogAbs),
        RegisteredFunction::Test(TestFunctionId::AbsVal),
        RegisteredFunction::ConstOne,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            RegisteredFunction::Test(id) => id.name(),
            RegisteredFunction::ConstOne => "const_one",
        }
    }

    pub fn parity(&self) -> Parity {
        match self {
            RegisteredFunction::Test(id) => id.parity(),
            RegisteredFunction::ConstOne => Parity::Even,
        }
    }

    /// The closed-form reference, when one exists off the origin.
    pub fn reference(&self) -> Option<TestFunctionId> {
        match self {
            RegisteredFunction::Test(id) => Some(*id),
            RegisteredFunction::ConstOne => None,
        }
    }

    pub fn eval(&self, x: &BigReal, ctx: &PrecisionContext) -> BigComplex {
        match self {
            RegisteredFunction::Test(id) => id.eval(x, ctx),
            RegisteredFunction::ConstOne => ctx.complex_one(),
        }
    }
}

impl fmt::Display for RegisteredFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for RegisteredFunction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        if s == "const_one" {
            return Ok(RegisteredFunction::ConstOne);
        }
        TestFunctionId::from_str(s).map(RegisteredFunction::Test)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::make_context;

    #[test]
    fn names_roundtrip() {
        for f in RegisteredFunction::ALL {
            assert_eq!(f.name().parse::<RegisteredFunction>().unwrap(), f);
        }
        assert!("sinc".parse::<RegisteredFunction>().is_err());
    }

    #[test]
    fn parities_are_exact_in_floating_point() {
        let ctx = make_context(60).unwrap();
        let x = ctx.from_f64(1.8125);
        let mx = -&x;
        for id in TestFunctionId::ALL {
            let fx = id.eval(&x, &ctx);
            let fmx = id.eval(&mx, &ctx);
            match id.parity() {
                Parity::Even => assert_eq!(fx.re, fmx.re, "{id}"),
                Parity::Odd => assert_eq!(fx.re, -&fmx.re, "{id}"),
                Parity::None => {}
            }
        }
    }
}
