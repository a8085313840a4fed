//! Points of the first Heisenberg group `H^1`.
//!
//! Group law `(x1,y1,t1)(x2,y2,t2) = (x1+x2, y1+y2, t1+t2+2(x2 y1 - x1 y2))`,
//! dilations `(x,y,t) -> (rx, ry, r^2 t)` and the Koranyi gauge
//! `((x^2+y^2)^2 + t^2)^(1/4)`.

use crate::error::{domain, Result};
use crate::poly::Poly;
use crate::scalar::{Real, Ring};

/// Scaling dimension of `H^1` under its dilations.
pub const HOMOGENEOUS_DIMENSION: u32 = 4;

#[derive(Clone, Debug, PartialEq, Default)]
pub struct GaugePoint<T> {
    pub x: T,
    pub y: T,
    pub t: T,
}

impl<T: Ring> GaugePoint<T> {
    pub fn new(x: T, y: T, t: T) -> Self {
        Self { x, y, t }
    }

    pub fn identity() -> Self {
        Self::new(T::zero(), T::zero(), T::zero())
    }
}

pub fn group_mul<T: Ring>(p: &GaugePoint<T>, m: &GaugePoint<T>) -> GaugePoint<T> {
    let twist = m.x.clone() * p.y.clone() - p.x.clone() * m.y.clone();
    GaugePoint {
        x: p.x.clone() + m.x.clone(),
        y: p.y.clone() + m.y.clone(),
        t: p.t.clone() + m.t.clone() + T::from_i64(2) * twist,
    }
}

pub fn group_inv<T: Ring>(p: &GaugePoint<T>) -> GaugePoint<T> {
    GaugePoint { x: -p.x.clone(), y: -p.y.clone(), t: -p.t.clone() }
}

/// `delta_r(p)`; `r` must be positive.
pub fn dilate<T: Ring + PartialOrd>(p: &GaugePoint<T>, r: &T) -> Result<GaugePoint<T>> {
    if !(*r > T::zero()) {
        return domain(format!("dilation factor must be positive, got {r:?}"));
    }
    Ok(GaugePoint { x: r.clone() * p.x.clone(), y: r.clone() * p.y.clone(), t: r.clone() * r.clone() * p.t.clone() })
}

pub fn koranyi_norm<T: Real>(p: &GaugePoint<T>) -> T {
    let rho2 = p.x * p.x + p.y * p.y;
    // sqrt of the hypotenuse avoids overflow in the fourth powers.
    rho2.hypot(p.t).sqrt()
}

/// The polynomial `xi -> p(base * xi)`.
pub fn translate_poly<C: Ring>(p: &Poly<C>, base: &GaugePoint<C>) -> Poly<C> {
    let sx = &Poly::x() + &Poly::constant(base.x.clone());
    let sy = &Poly::y() + &Poly::constant(base.y.clone());
    let two = C::from_i64(2);
    // c + t + 2(b x - a y)
    let st = &(&Poly::t() + &Poly::constant(base.t.clone()))
        + &(&Poly::x().scale(&(two.clone() * base.y.clone())) - &Poly::y().scale(&(two * base.x.clone())));
    p.compose(&sx, &sy, &st)
}
