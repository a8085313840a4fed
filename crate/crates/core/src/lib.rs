//! Calculus on the Heisenberg group `H^1`, quadrature on Koranyi spheres and
//! balls, and two-phase monotonicity functionals.
//!
//! Symbolic work happens over exact rationals ([`Poly3`]); integrals are
//! evaluated in `f64`.
// Negated comparisons double as NaN rejection.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod counterexample;
pub mod error;
pub mod functionals;
pub mod heis;
pub mod parse;
pub mod poly;
pub mod quadrature;
pub mod scalar;

pub use error::{Error, Result};
pub use heis::{dilate, group_inv, group_mul, koranyi_norm, translate_poly, GaugePoint, HOMOGENEOUS_DIMENSION};
pub use parse::{format, parse, parse_with, ParseError, ParseOptions};
pub use poly::{MultiIndex, Poly};

/// Arbitrary-precision rational.
pub type Rational = num_rational::BigRational;
/// Exact polynomial in `(x, y, t)`.
pub type Poly3 = Poly<Rational>;
/// Point with `f64` coordinates.
pub type Point = GaugePoint<f64>;
/// Point with exact rational coordinates.
pub type ExactPoint = GaugePoint<Rational>;

/// Default cap on Heisenberg degree for parsing and basis computation.
pub const DEFAULT_MAX_DEGREE: u32 = 8;
