//! Scalar abstractions shared by the exact and floating-point layers.
//!
//! Group operations and polynomial algebra only need ring arithmetic, so they
//! are written against [`Ring`] and run unchanged over `f32`, `f64` and exact
//! rationals. Anything that takes roots or builds quadrature nodes needs
//! [`Real`].

use std::fmt::{Debug, Display};
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{Float, FloatConst, FromPrimitive, One, ToPrimitive, Zero};

/// Commutative ring with an embedding of the integers.
pub trait Ring:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
{
    fn from_i64(n: i64) -> Self;

    fn from_u32(n: u32) -> Self {
        Self::from_i64(i64::from(n))
    }
}

impl Ring for f32 {
    fn from_i64(n: i64) -> Self {
        n as f32
    }
}

impl Ring for f64 {
    fn from_i64(n: i64) -> Self {
        n as f64
    }
}

impl Ring for BigRational {
    fn from_i64(n: i64) -> Self {
        Ratio::from_integer(BigInt::from(n))
    }
}

impl Ring for Ratio<i64> {
    fn from_i64(n: i64) -> Self {
        Ratio::from_integer(n)
    }
}

/// Floating-point scalar used for evaluation and quadrature.
pub trait Real: Ring + Float + FloatConst + FromPrimitive + Display + 'static {
    /// Lossy conversion from an `f64` literal.
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("finite literal")
    }
}

impl Real for f32 {}
impl Real for f64 {}

/// Exact-to-float conversion used when a symbolic object is lowered for
/// numerical evaluation.
pub trait ToReal<T: Real> {
    fn to_real(&self) -> T;
}

impl<T: Real> ToReal<T> for BigRational {
    fn to_real(&self) -> T {
        T::from_f64(self.to_f64().unwrap_or(f64::NAN)).unwrap_or_else(T::nan)
    }
}

impl<T: Real> ToReal<T> for Ratio<i64> {
    fn to_real(&self) -> T {
        T::from_f64(*self.numer() as f64 / *self.denom() as f64).unwrap_or_else(T::nan)
    }
}

impl<T: Real> ToReal<T> for f64 {
    fn to_real(&self) -> T {
        T::lit(*self)
    }
}

impl<T: Real> ToReal<T> for f32 {
    fn to_real(&self) -> T {
        T::lit(f64::from(*self))
    }
}
