//! Multiprecision Fourier transforms of slowly decaying functions.
//!
//! The transform of `f` is represented by a pair of functions holomorphic off
//! the real axis (one per half-plane), computed as Taylor expansions about
//! off-axis centers, converted to continued fractions by the
//! quotient-difference algorithm, and evaluated on the real axis where the
//! continued fractions continue analytically. Two classical oscillatory
//! quadrature baselines are included for comparison.

pub mod baselines;
pub mod confrac;
pub mod error;
pub mod functions;
pub mod numerics;
pub mod persist;
pub mod quadrature;
pub mod taylor;
pub mod transform;

pub use baselines::{
    full_transform_via_half_integrals, ooura_mori_cosine, sugihara_cosine, BaselineMethod,
    BaselineResult, OouraMoriParams, OscillatoryResult, SugiharaParams,
};
pub use confrac::{cf_eval, cf_reexpand, qd_transform, ContinuedFraction};
pub use error::Error;
pub use functions::{Parity, RegisteredFunction, TestFunctionId};
pub use numerics::{elem, pow, BigComplex, BigReal, ElemFn, PrecisionContext};
pub use quadrature::{de_nodes, integrate_halfline_decay, DeNode, DeRuleSpec, QuadratureResult};
pub use taylor::{taylor_coefficients, taylor_pair, HalfPlaneSign, TaylorExpansion};
pub use transform::{
    build_transform, defining_fixture, evaluate, evaluate_with_proxy, exact_reference,
    FixtureKind, FourierHyperfunction,
};

/// Shorthand for results carrying the crate error type.
pub type Result<T> = std::result::Result<T, Error>;
